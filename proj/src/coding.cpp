#include "codedloc/coding.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace codedloc {

CodeMatrix build_code_matrix(const Partition& partition) {
    int m = partition.m();
    int n_k = partition.active_count();
    if (n_k % m != 0) {
        throw std::invalid_argument("build_code_matrix: active count not divisible by m");
    }
    std::vector<int> count(m, 0);
    for (int j : partition.region_of) ++count[j];
    for (int j = 0; j < m; ++j) {
        if (count[j] != n_k / m) {
            throw std::invalid_argument("build_code_matrix: unequal region counts");
        }
    }

    CodeMatrix code;
    code.m = m;
    code.n_k = n_k;
    code.column_region = partition.region_of;
    code.column_sensor = partition.sensors;
    code.bits.assign(static_cast<std::size_t>(m) * code.words_per_row(), 0);
    for (int col = 0; col < n_k; ++col) {
        int j = partition.region_of[col];
        code.bits[static_cast<std::size_t>(j) * code.words_per_row() + (col >> 6)] |=
            1ULL << (col & 63);
    }
    return code;
}

int min_hamming_distance(const CodeMatrix& code) {
    if (code.m < 2) {
        throw std::invalid_argument("min_hamming_distance: need at least two rows");
    }
    int best = std::numeric_limits<int>::max();
    int words = code.words_per_row();
    for (int j = 0; j < code.m; ++j) {
        for (int l = j + 1; l < code.m; ++l) {
            const std::uint64_t* a = code.row(j);
            const std::uint64_t* b = code.row(l);
            int d = 0;
            for (int w = 0; w < words; ++w) d += std::popcount(a[w] ^ b[w]);
            if (d < best) best = d;
        }
    }
    return best;
}

int fault_tolerance_bits(const CodeMatrix& code) {
    int d = min_hamming_distance(code);
    return (d + 1) / 2 - 1;
}

std::string format_rows(const CodeMatrix& code) {
    std::string out;
    out.reserve(static_cast<std::size_t>(code.m) * (code.n_k + 1));
    for (int j = 0; j < code.m; ++j) {
        for (int col = 0; col < code.n_k; ++col) {
            out.push_back(code.row_bit(j, col) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace codedloc
