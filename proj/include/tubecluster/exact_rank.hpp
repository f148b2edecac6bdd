#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"

namespace tubecluster {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r))
        throw VerificationFailure("integer overflow in exact elimination");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r = 0;
    if (__builtin_sub_overflow(x, y, &r))
        throw VerificationFailure("integer overflow in exact elimination");
    return r;
}

inline void normalize_row(std::vector<std::int64_t>& row)
{
    std::int64_t g = 0;
    for (auto v : row)
        g = std::gcd(g, v);
    if (g > 1)
        for (auto& v : row)
            v /= g;
}

} // namespace detail

/// Rank of an integer matrix by fraction-free Gaussian elimination.
///
/// Each elimination step replaces row r with p*r - q*pivot and divides the
/// result by its content, so entries stay integral and small. Every
/// multiplication is overflow-checked; nothing is ever rounded.
inline std::size_t exact_rank(IntMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        const std::int64_t p = m[rank][c];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const std::int64_t q = m[r][c];
            if (q == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = detail::checked_sub(detail::checked_mul(p, m[r][j]),
                                              detail::checked_mul(q, m[rank][j]));
            detail::normalize_row(m[r]);
        }
        ++rank;
    }
    return rank;
}

} // namespace tubecluster
