#pragma once

#include <cstdint>
#include <vector>

#include "codedloc/coding.hpp"
#include "codedloc/rng.hpp"

namespace codedloc {

// Result of one fusion-center decode. `chosen` holds one region (basic rule)
// or two (exclusion rule). `tie_count` is the size of the tie set the final
// pick was drawn from: the number of co-minimal regions for the basic rule,
// and the number of regions tied at the cut for the exclusion rule (1 when
// the selection was forced).
struct DecodeOutcome {
    std::vector<int> chosen;
    int tie_count = 1;
    std::vector<double> distances;
};

// Minimum-Hamming-distance fusion; ties broken uniformly at random.
DecodeOutcome hamming_decode(const std::vector<std::uint8_t>& u,
                             const CodeMatrix& code, Rng& rng);

// Keeps the two closest rows; ties at the cut broken uniformly at random.
DecodeOutcome exclusion_decode(const std::vector<std::uint8_t>& u,
                               const CodeMatrix& code, Rng& rng);

// Squared Euclidean distance between a reliability vector and the +/-1 image
// of a code row (bit b maps to (-1)^b).
double f_distance(const std::vector<double>& psi, const std::vector<std::uint8_t>& row);
double f_distance(const std::vector<double>& psi, const CodeMatrix& code, int row);

// Soft-decision fusion: minimize the F-distance over rows; `exclusion`
// switches to the keep-two rule. Tie handling mirrors the hard decoders.
DecodeOutcome soft_decode(const std::vector<double>& psi, const CodeMatrix& code,
                          Rng& rng, bool exclusion);

}  // namespace codedloc
