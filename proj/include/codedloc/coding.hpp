#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codedloc/geometry.hpp"

namespace codedloc {

// Binary code matrix for one iteration: row j is the word expected when the
// target sits in region j, column i is sensor i's decision rule. Each column
// carries exactly one 1 (in the row of the sensor's own region), so each row
// has weight n_k / m and the minimum pairwise row distance is 2 * n_k / m.
struct CodeMatrix {
    int m = 0;    // rows (regions)
    int n_k = 0;  // columns (active sensors)
    std::vector<std::uint64_t> bits;  // packed rows, row-major
    std::vector<int> column_region;   // region index per column
    std::vector<int> column_sensor;   // global sensor index per column

    int words_per_row() const { return (n_k + 63) / 64; }
    const std::uint64_t* row(int j) const { return bits.data() + static_cast<std::size_t>(j) * words_per_row(); }
    bool row_bit(int j, int col) const {
        return (row(j)[col >> 6] >> (col & 63)) & 1ULL;
    }
};

// Columns follow partition.sensors (ascending global index). Throws if the
// partition does not give every region the same sensor count.
CodeMatrix build_code_matrix(const Partition& partition);

int min_hamming_distance(const CodeMatrix& code);

// Number of corrupted bits a minimum-distance decoder is guaranteed to
// absorb: ceil(d_min / 2) - 1.
int fault_tolerance_bits(const CodeMatrix& code);

// Rows as 0/1 strings, one per line. Debugging aid.
std::string format_rows(const CodeMatrix& code);

}  // namespace codedloc
