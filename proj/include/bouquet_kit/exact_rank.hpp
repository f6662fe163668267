#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bouquet_kit/errors.hpp"

namespace bouquet_kit {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over the rationals by fraction-free (Bareiss) elimination. The
/// one-step update (a_ij * p - a_ik * a_kj) / prev divides exactly because
/// every working entry is a minor of the input matrix, so the computation
/// stays in arbitrary-precision integers throughout. Columns with no pivot
/// in the remaining rows are zero there and are skipped. Consumes its
/// argument.
inline int rank_fraction_free(std::vector<std::vector<BigInt>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        const auto& prow = m[static_cast<size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<size_t>(r)];
            const BigInt factor = row[static_cast<size_t>(col)];
            for (int c = col + 1; c < cols; ++c) {
                BigInt t = row[static_cast<size_t>(c)] * prow[static_cast<size_t>(col)] -
                           factor * prow[static_cast<size_t>(c)];
                row[static_cast<size_t>(c)] = t / prev;
            }
            row[static_cast<size_t>(col)] = 0;
        }
        prev = prow[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

/// Rank over GF(p) by ordinary elimination. Entries may be any integers;
/// they are reduced into [0, p). Consumes its argument.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    auto normalize = [p](std::int64_t v) {
        v %= p;
        return v < 0 ? v + p : v;
    };
    auto inv_mod = [p](std::int64_t a) {
        // Fermat: p is prime.
        std::int64_t result = 1, base = a % p, exp = p - 2;
        while (exp > 0) {
            if (exp & 1) result = result * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return result;
    };
    for (auto& row : m)
        for (auto& v : row) v = normalize(v);

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        auto& prow = m[static_cast<size_t>(rank)];
        const std::int64_t scale = inv_mod(prow[static_cast<size_t>(col)]);
        for (int c = col; c < cols; ++c)
            prow[static_cast<size_t>(c)] = prow[static_cast<size_t>(c)] * scale % p;
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<size_t>(r)];
            const std::int64_t factor = row[static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                row[static_cast<size_t>(c)] =
                    normalize(row[static_cast<size_t>(c)] - factor * prow[static_cast<size_t>(c)]);
        }
        ++rank;
    }
    return rank;
}

} // namespace bouquet_kit
