#ifndef SQFSYM_VERTEX_SET_HPP
#define SQFSYM_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace sqfsym {

/// Largest supported vertex / variable count.
inline constexpr int kMaxVertices = 63;

/**
 * A subset of {0, ..., 62} stored as a 64-bit mask.
 *
 * The same type doubles as the support of a squarefree monomial x_A, so
 * divisibility of squarefree monomials is subset inclusion.
 */
class VertexSet
{
    public:
        class iterator
        {
            public:
                using iterator_category = std::forward_iterator_tag;
                using value_type = int;
                using difference_type = std::ptrdiff_t;
                using pointer = const int*;
                using reference = int;

                constexpr iterator() = default;
                constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

                constexpr int operator*() const { return std::countr_zero(rest_); }
                constexpr iterator& operator++()
                {
                    rest_ &= rest_ - 1;
                    return *this;
                }
                constexpr iterator operator++(int)
                {
                    iterator old = *this;
                    ++*this;
                    return old;
                }
                constexpr bool operator==(const iterator&) const = default;

            private:
                std::uint64_t rest_ = 0;
        };

        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
        VertexSet(std::initializer_list<int> vertices)
        {
            for (int v : vertices)
                insert(v);
        }

        /// {0, ..., n-1}
        static VertexSet range(int n)
        {
            check(n == 0 ? 0 : n - 1);
            return VertexSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
        }

        static VertexSet singleton(int v)
        {
            VertexSet s;
            s.insert(v);
            return s;
        }

        constexpr std::uint64_t bits() const { return bits_; }
        constexpr bool empty() const { return bits_ == 0; }
        constexpr int size() const { return std::popcount(bits_); }
        constexpr int min() const { return std::countr_zero(bits_); }
        constexpr int max() const { return 63 - std::countl_zero(bits_); }

        constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U); }
        void insert(int v)
        {
            check(v);
            bits_ |= std::uint64_t{1} << v;
        }
        void erase(int v)
        {
            check(v);
            bits_ &= ~(std::uint64_t{1} << v);
        }

        constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
        constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

        constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
        constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
        constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
        constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
        VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
        VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
        VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

        constexpr bool operator==(const VertexSet&) const = default;

        constexpr iterator begin() const { return iterator(bits_); }
        constexpr iterator end() const { return iterator(0); }

        std::vector<int> elements() const { return {begin(), end()}; }

    private:
        static void check(int v)
        {
            if (v < 0 || v >= kMaxVertices)
                throw ParameterError("vertex index " + std::to_string(v) + " outside 0.." +
                                     std::to_string(kMaxVertices - 1));
        }

        std::uint64_t bits_ = 0;
};

/**
 * Canonical order on supports: by cardinality, then lexicographically on
 * the sorted element lists.
 */
inline bool canonical_less(VertexSet a, VertexSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    if (a == b)
        return false;
    // for equal cardinality the lowest element of the symmetric difference decides
    const VertexSet diff = a ^ b;
    return a.contains(diff.min());
}

/// Renders as x0x1x3; the empty set renders as 1.
inline std::string monomial_string(VertexSet s)
{
    if (s.empty())
        return "1";
    std::string out;
    for (int v : s)
        out += "x" + std::to_string(v);
    return out;
}

/// Renders as {0,1,3}.
inline std::string set_string(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : s)
    {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, VertexSet s)
{
    return os << set_string(s);
}

/// Keeps only inclusion-minimal sets, sorted canonically, duplicates removed.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets)
    {
        bool dominated = false;
        for (VertexSet k : kept)
        {
            if (k.subset_of(s))
            {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(s);
    }
    return kept;
}

/// Keeps only inclusion-maximal sets, sorted canonically.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return canonical_less(b, a); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets)
    {
        bool dominated = false;
        for (VertexSet k : kept)
        {
            if (s.subset_of(k))
            {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return kept;
}

/// Calls f(subset) for every subset of `ground` with exactly k elements.
template <typename F>
void for_each_subset_of_size(VertexSet ground, int k, F&& f)
{
    const std::vector<int> items = ground.elements();
    const int m = static_cast<int>(items.size());
    if (k < 0 || k > m)
        return;
    if (k == 0)
    {
        f(VertexSet{});
        return;
    }
    // Gosper's hack over positions into `items`
    std::uint64_t pos = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (pos < limit)
    {
        VertexSet s;
        for (std::uint64_t rest = pos; rest; rest &= rest - 1)
            s.insert(items[std::countr_zero(rest)]);
        f(s);
        const std::uint64_t c = pos & (~pos + 1);
        const std::uint64_t r = pos + c;
        pos = (((r ^ pos) >> 2) / c) | r;
    }
}

/// Calls f(subset) for every subset of `ground` (2^|ground| calls).
template <typename F>
void for_each_subset(VertexSet ground, F&& f)
{
    const std::uint64_t mask = ground.bits();
    std::uint64_t sub = 0;
    while (true)
    {
        f(VertexSet(sub));
        if (sub == mask)
            break;
        sub = (sub - mask) & mask;
    }
}

}   // namespace sqfsym

#endif
