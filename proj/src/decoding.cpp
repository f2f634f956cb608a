#include "codedloc/decoding.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace codedloc {

namespace {

// Uniform pick over the argmin set.
DecodeOutcome pick_min(std::vector<double> distances, Rng& rng) {
    DecodeOutcome out;
    double best = distances[0];
    for (double d : distances) best = std::min(best, d);
    std::vector<int> ties;
    for (int j = 0; j < static_cast<int>(distances.size()); ++j) {
        if (distances[j] == best) ties.push_back(j);
    }
    out.tie_count = static_cast<int>(ties.size());
    out.chosen = {ties[rng.uniform_below(ties.size())]};
    out.distances = std::move(distances);
    return out;
}

// Keep-two rule. Regions strictly below the second-smallest distance value
// are locked in; the remaining slots are drawn uniformly from the regions
// sitting exactly at that value (the cut).
DecodeOutcome pick_two(std::vector<double> distances, Rng& rng) {
    int m = static_cast<int>(distances.size());
    std::vector<double> sorted(distances);
    std::nth_element(sorted.begin(), sorted.begin() + 1, sorted.end());
    double cut = sorted[1];

    std::vector<int> locked, at_cut;
    for (int j = 0; j < m; ++j) {
        if (distances[j] < cut) {
            locked.push_back(j);
        } else if (distances[j] == cut) {
            at_cut.push_back(j);
        }
    }
    int need = 2 - static_cast<int>(locked.size());
    DecodeOutcome out;
    out.tie_count = static_cast<int>(at_cut.size()) > need
                        ? static_cast<int>(at_cut.size())
                        : 1;
    for (int i = 0; i < need; ++i) {
        int j = i + static_cast<int>(rng.uniform_below(at_cut.size() - i));
        std::swap(at_cut[i], at_cut[j]);
    }
    out.chosen = std::move(locked);
    out.chosen.insert(out.chosen.end(), at_cut.begin(), at_cut.begin() + need);
    std::sort(out.chosen.begin(), out.chosen.end(), [&](int a, int b) {
        if (distances[a] != distances[b]) return distances[a] < distances[b];
        return a < b;
    });
    out.distances = std::move(distances);
    return out;
}

std::vector<double> hamming_distances(const std::vector<std::uint8_t>& u,
                                      const CodeMatrix& code) {
    if (static_cast<int>(u.size()) != code.n_k) {
        throw std::invalid_argument("decode: word length does not match code matrix");
    }
    int words = code.words_per_row();
    std::vector<std::uint64_t> packed(words, 0);
    for (int i = 0; i < code.n_k; ++i) {
        if (u[i]) packed[i >> 6] |= 1ULL << (i & 63);
    }
    std::vector<double> dist(code.m);
    for (int j = 0; j < code.m; ++j) {
        const std::uint64_t* row = code.row(j);
        int d = 0;
        for (int w = 0; w < words; ++w) d += std::popcount(packed[w] ^ row[w]);
        dist[j] = d;
    }
    return dist;
}

}  // namespace

DecodeOutcome hamming_decode(const std::vector<std::uint8_t>& u,
                             const CodeMatrix& code, Rng& rng) {
    return pick_min(hamming_distances(u, code), rng);
}

DecodeOutcome exclusion_decode(const std::vector<std::uint8_t>& u,
                               const CodeMatrix& code, Rng& rng) {
    if (code.m < 2) {
        throw std::invalid_argument("exclusion_decode: need at least two regions");
    }
    return pick_two(hamming_distances(u, code), rng);
}

double f_distance(const std::vector<double>& psi, const std::vector<std::uint8_t>& row) {
    if (psi.size() != row.size()) {
        throw std::invalid_argument("f_distance: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        double target = row[i] ? -1.0 : 1.0;
        double diff = psi[i] - target;
        sum += diff * diff;
    }
    return sum;
}

double f_distance(const std::vector<double>& psi, const CodeMatrix& code, int row) {
    if (static_cast<int>(psi.size()) != code.n_k) {
        throw std::invalid_argument("f_distance: length mismatch");
    }
    double sum = 0.0;
    for (int i = 0; i < code.n_k; ++i) {
        double target = code.row_bit(row, i) ? -1.0 : 1.0;
        double diff = psi[i] - target;
        sum += diff * diff;
    }
    return sum;
}

DecodeOutcome soft_decode(const std::vector<double>& psi, const CodeMatrix& code,
                          Rng& rng, bool exclusion) {
    std::vector<double> dist(code.m);
    for (int j = 0; j < code.m; ++j) dist[j] = f_distance(psi, code, j);
    if (exclusion) {
        if (code.m < 2) {
            throw std::invalid_argument("soft_decode: need at least two regions for exclusion");
        }
        return pick_two(std::move(dist), rng);
    }
    return pick_min(std::move(dist), rng);
}

}  // namespace codedloc
