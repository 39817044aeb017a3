#ifndef SQFSYM_IDEAL_HPP
#define SQFSYM_IDEAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "vertex_set.hpp"

namespace sqfsym {

/// A squarefree monomial x_A is identified with its support A.
using SqfMonomial = VertexSet;

/// General monomial as an exponent vector; only used for membership queries.
struct Monomial
{
    std::vector<int> exponents;

    static Monomial from_support(int n, VertexSet support)
    {
        Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int v : support)
            m.exponents.at(static_cast<std::size_t>(v)) = 1;
        return m;
    }

    int degree_in(VertexSet vars) const
    {
        int d = 0;
        for (int v : vars)
            if (v < static_cast<int>(exponents.size()))
                d += exponents[v];
        return d;
    }

    bool squarefree() const
    {
        return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
    }
};

/**
 * Squarefree monomial ideal in K[x_0, ..., x_{n-1}], held as its minimal
 * generating set in canonical order.
 *
 * The zero ideal has no generators; the unit ideal has the single
 * generator 1 (empty support).  Equality is structural.
 */
class SqfIdeal
{
    public:
        SqfIdeal() = default;

        static SqfIdeal zero(int n) { return SqfIdeal(n, {}); }
        static SqfIdeal unit(int n) { return SqfIdeal(n, {VertexSet{}}); }

        /// Ideal generated by the given variables.
        static SqfIdeal variables(int n, VertexSet vars)
        {
            std::vector<VertexSet> gens;
            for (int v : vars)
                gens.push_back(VertexSet::singleton(v));
            return minimalize(n, std::move(gens));
        }

        /// Drops every monomial divisible by another one in the list.
        static SqfIdeal minimalize(int n, std::vector<SqfMonomial> gens)
        {
            check_ambient(n);
            const VertexSet ambient = VertexSet::range(n);
            for (VertexSet g : gens)
                if (!g.subset_of(ambient))
                    throw ParameterError("generator " + monomial_string(g) + " uses a variable outside x0..x" +
                                         std::to_string(n - 1));
            return SqfIdeal(n, minimal_sets(std::move(gens)));
        }

        int ambient() const { return n_; }
        const std::vector<SqfMonomial>& generators() const { return gens_; }
        bool is_zero() const { return gens_.empty(); }
        bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }

        /// Variables occurring in some minimal generator.
        VertexSet support() const
        {
            VertexSet s;
            for (VertexSet g : gens_)
                s |= g;
            return s;
        }

        bool contains(SqfMonomial m) const
        {
            return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return g.subset_of(m); });
        }

        bool contains(const SqfIdeal& other) const
        {
            return std::all_of(other.gens_.begin(), other.gens_.end(),
                               [&](VertexSet g) { return contains(g); });
        }

        bool operator==(const SqfIdeal&) const = default;

        std::string str() const
        {
            if (is_zero())
                return "0";
            std::string out = "(";
            for (std::size_t i = 0; i < gens_.size(); ++i)
            {
                if (i)
                    out += ", ";
                out += monomial_string(gens_[i]);
            }
            return out + ")";
        }

        static void check_ambient(int n)
        {
            if (n < 0 || n > kMaxVertices)
                throw ParameterError("ambient variable count " + std::to_string(n) + " outside 0.." +
                                     std::to_string(kMaxVertices));
        }

    private:
        SqfIdeal(int n, std::vector<SqfMonomial> gens) : n_(n), gens_(std::move(gens)) {}

        int n_ = 0;
        std::vector<SqfMonomial> gens_;
};

namespace detail {

inline void same_ambient(const SqfIdeal& a, const SqfIdeal& b)
{
    if (a.ambient() != b.ambient())
        throw ParameterError("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                             std::to_string(b.ambient()) + " variables");
}

inline void nonzero_proper(const SqfIdeal& j, const char* op)
{
    if (j.is_zero())
        throw DomainError(std::string(op) + " is undefined for the zero ideal");
    if (j.is_unit())
        throw DomainError(std::string(op) + " is undefined for the unit ideal");
}

}   // namespace detail

// --------------------------------------------------------------------------
// Arithmetic
// --------------------------------------------------------------------------

inline SqfIdeal sum(const SqfIdeal& a, const SqfIdeal& b)
{
    detail::same_ambient(a, b);
    std::vector<SqfMonomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return SqfIdeal::minimalize(a.ambient(), std::move(gens));
}

/// Generated by pairwise lcms, which for supports are unions.
inline SqfIdeal intersect(const SqfIdeal& a, const SqfIdeal& b)
{
    detail::same_ambient(a, b);
    std::vector<SqfMonomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (VertexSet u : a.generators())
        for (VertexSet v : b.generators())
            gens.push_back(u | v);
    return SqfIdeal::minimalize(a.ambient(), std::move(gens));
}

/// (J : m) for squarefree m; the zero ideal is rejected.
inline SqfIdeal colon(const SqfIdeal& j, SqfMonomial m)
{
    if (j.is_zero())
        throw DomainError("colon of the zero ideal");
    if (!m.subset_of(VertexSet::range(j.ambient())))
        throw ParameterError("colon by " + monomial_string(m) + " outside the ambient ring");
    std::vector<SqfMonomial> gens;
    gens.reserve(j.generators().size());
    for (VertexSet u : j.generators())
        gens.push_back(u - m);
    return SqfIdeal::minimalize(j.ambient(), std::move(gens));
}

/// Keeps the generators whose support avoids `vars`.
inline SqfIdeal restrict(const SqfIdeal& j, VertexSet vars)
{
    std::vector<SqfMonomial> gens;
    for (VertexSet u : j.generators())
        if (!u.intersects(vars))
            gens.push_back(u);
    return SqfIdeal::minimalize(j.ambient(), std::move(gens));
}

// --------------------------------------------------------------------------
// Primes and height
// --------------------------------------------------------------------------

/**
 * Minimal primes as inclusion-minimal transversals of the generator
 * supports (Berge's incremental construction).
 */
inline std::vector<VertexSet> minimal_primes(const SqfIdeal& j)
{
    detail::nonzero_proper(j, "minimal_primes");
    std::vector<VertexSet> transversals{VertexSet{}};
    for (VertexSet g : j.generators())
    {
        std::vector<VertexSet> next;
        for (VertexSet t : transversals)
        {
            if (t.intersects(g))
                next.push_back(t);
            else
                for (int v : g)
                    next.push_back(t | VertexSet::singleton(v));
        }
        transversals = minimal_sets(std::move(next));
    }
    return transversals;
}

inline int height(const SqfIdeal& j)
{
    const auto primes = minimal_primes(j);
    int h = primes.front().size();
    for (VertexSet p : primes)
        h = std::min(h, p.size());
    return h;
}

inline bool is_unmixed(const SqfIdeal& j)
{
    const auto primes = minimal_primes(j);
    return std::all_of(primes.begin(), primes.end(),
                       [&](VertexSet p) { return p.size() == primes.front().size(); });
}

struct DegreeStats
{
    int min_degree = 0;
    int max_degree = 0;
    std::map<int, int> count_by_degree;
};

inline DegreeStats generator_degrees(const SqfIdeal& j)
{
    detail::nonzero_proper(j, "generator_degrees");
    DegreeStats d;
    d.min_degree = j.generators().front().size();
    d.max_degree = j.generators().back().size();
    for (VertexSet g : j.generators())
        ++d.count_by_degree[g.size()];
    return d;
}

// --------------------------------------------------------------------------
// Edge ideals, squarefree powers, squarefree symbolic powers
// --------------------------------------------------------------------------

inline SqfIdeal edge_ideal(const Graph& g)
{
    std::vector<SqfMonomial> gens;
    for (const Edge& e : g.edges())
        gens.push_back(e.ends());
    return SqfIdeal::minimalize(g.order(), std::move(gens));
}

/**
 * I(G)^[s]: generated by the products of the s-edge matchings.  Zero iff
 * s exceeds the matching number.
 */
inline SqfIdeal sqf_power(const Graph& g, int s)
{
    if (s < 1)
        throw ParameterError("squarefree power needs s >= 1");
    std::vector<SqfMonomial> gens;
    std::vector<Edge> current;
    auto visit = [&](const std::vector<Edge>& m) {
        if (static_cast<int>(m.size()) == s)
        {
            VertexSet u;
            for (const Edge& e : m)
                u |= e.ends();
            gens.push_back(u);
        }
    };
    detail::for_each_matching(g, g.non_isolated(), current, visit);
    return SqfIdeal::minimalize(g.order(), std::move(gens));
}

/// Largest number of variables the symbolic-power search will scan over.
inline constexpr int kMaxSymbolicSupport = 32;

/**
 * J^{s}: squarefree part of the s-th symbolic power of a squarefree ideal.
 *
 * A squarefree x_U lies in p_P^s exactly when |U & P| >= s, so J^{s} is
 * generated by the minimal members of the monotone family
 * { U : |U & P| >= s for every minimal prime P }.  Supports are scanned by
 * increasing cardinality over the variables that occur in some prime; a
 * member containing no earlier member is minimal.
 */
inline SqfIdeal sqf_symbolic(const SqfIdeal& j, int s)
{
    detail::nonzero_proper(j, "sqf_symbolic");
    if (s < 1)
        throw ParameterError("squarefree symbolic power needs s >= 1");
    const auto primes = minimal_primes(j);
    VertexSet relevant;
    int h = primes.front().size();
    for (VertexSet p : primes)
    {
        relevant |= p;
        h = std::min(h, p.size());
    }
    if (s > h)
        return SqfIdeal::zero(j.ambient());
    if (relevant.size() > kMaxSymbolicSupport)
        throw CapabilityError("symbolic power search over " + std::to_string(relevant.size()) +
                              " variables exceeds the supported " + std::to_string(kMaxSymbolicSupport));

    auto member = [&](VertexSet u) {
        return std::all_of(primes.begin(), primes.end(), [&](VertexSet p) { return (u & p).size() >= s; });
    };
    std::vector<SqfMonomial> found;
    for (int k = s; k <= relevant.size(); ++k)
    {
        const std::size_t before = found.size();
        for_each_subset_of_size(relevant, k, [&](VertexSet u) {
            for (std::size_t i = 0; i < before; ++i)
                if (found[i].subset_of(u))
                    return;
            if (member(u))
                found.push_back(u);
        });
    }
    return SqfIdeal::minimalize(j.ambient(), std::move(found));
}

/**
 * Membership of an arbitrary monomial in J^(s): every minimal prime must
 * see total degree >= s.  s <= 0 gives the whole ring.
 */
inline bool symbolic_member(const Monomial& m, const SqfIdeal& j, int s)
{
    if (s <= 0)
        return true;
    if (static_cast<int>(m.exponents.size()) != j.ambient())
        throw ParameterError("monomial has " + std::to_string(m.exponents.size()) +
                             " exponents, ambient ring has " + std::to_string(j.ambient()));
    if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e < 0; }))
        throw ParameterError("negative exponent");
    for (VertexSet p : minimal_primes(j))
        if (m.degree_in(p) < s)
            return false;
    return true;
}

/**
 * I(G)^{s} for any graph and any integer s: the unit ideal for s <= 0,
 * the zero ideal when G has no edges or s exceeds the cover height.
 */
inline SqfIdeal graph_symbolic(const Graph& g, int s)
{
    if (s <= 0)
        return SqfIdeal::unit(g.order());
    if (g.edge_count() == 0)
        return SqfIdeal::zero(g.order());
    return sqf_symbolic(edge_ideal(g), s);
}

}   // namespace sqfsym

#endif
