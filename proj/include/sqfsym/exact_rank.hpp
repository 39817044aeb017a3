#ifndef SQFSYM_EXACT_RANK_HPP
#define SQFSYM_EXACT_RANK_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqfsym::detail {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over GF(p) by modular Gaussian elimination.
inline int rank_mod_p(IntMatrix m, std::uint32_t p)
{
    if (m.empty())
        return 0;
    const std::int64_t mod = p;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    for (auto& row : m)
        for (auto& x : row)
            x = ((x % mod) + mod) % mod;

    auto inverse = [&](std::int64_t a) {
        // Fermat: a^(p-2)
        std::int64_t result = 1, base = a, e = mod - 2;
        while (e > 0)
        {
            if (e & 1)
                result = result * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return result;
    };

    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        const std::int64_t inv = inverse(m[r][c]);
        for (std::size_t k = c; k < cols; ++k)
            m[r][k] = m[r][k] * inv % mod;
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            const std::int64_t f = m[i][c];
            if (f == 0)
                continue;
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] = ((m[i][k] - f * m[r][k]) % mod + mod) % mod;
        }
        ++r;
        ++rank;
    }
    return rank;
}

/**
 * Fraction-free (Bareiss) elimination.  Returns nullopt if an intermediate
 * value overflows T; for arbitrary precision T it always succeeds.
 */
template <typename T>
std::optional<int> bareiss_rank(std::vector<std::vector<T>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    T prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            for (std::size_t k = c + 1; k < cols; ++k)
            {
                if constexpr (std::is_same_v<T, std::int64_t>)
                {
                    std::int64_t a, b, d;
                    if (__builtin_mul_overflow(m[r][c], m[i][k], &a) ||
                        __builtin_mul_overflow(m[i][c], m[r][k], &b) || __builtin_sub_overflow(a, b, &d))
                        return std::nullopt;
                    m[i][k] = d / prev;
                }
                else
                {
                    m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) / prev;
                }
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Exact rank over Q.
inline int rank_rational(const IntMatrix& m)
{
    if (auto fast = bareiss_rank<std::int64_t>(m))
        return *fast;
    using Big = boost::multiprecision::cpp_int;
    std::vector<std::vector<Big>> big;
    big.reserve(m.size());
    for (const auto& row : m)
        big.emplace_back(row.begin(), row.end());
    return *bareiss_rank<Big>(std::move(big));
}

}   // namespace sqfsym::detail

#endif
