#ifndef SQFSYM_HOMOLOGY_HPP
#define SQFSYM_HOMOLOGY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "exact_rank.hpp"
#include "ideal.hpp"
#include "vertex_set.hpp"

namespace sqfsym {

/// Coefficient field: characteristic 0 (rationals) or a prime p.
class FieldSpec
{
    public:
        constexpr FieldSpec() = default;

        static constexpr FieldSpec rationals() { return FieldSpec{}; }

        static FieldSpec prime(std::uint32_t p)
        {
            if (p < 2)
                throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
            for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
                if (p % d == 0)
                    throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
            FieldSpec f;
            f.characteristic_ = p;
            return f;
        }

        constexpr std::uint32_t characteristic() const { return characteristic_; }

        std::string name() const { return characteristic_ == 0 ? "Q" : "GF(" + std::to_string(characteristic_) + ")"; }

        constexpr bool operator==(const FieldSpec&) const = default;

    private:
        std::uint32_t characteristic_ = 0;
};

/**
 * Finite simplicial complex on vertices 0..n-1 given by its facets.
 *
 * The void complex has no faces; the irrelevant complex is {∅}, stored as
 * the single empty facet.
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
        static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {VertexSet{}}); }
        static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {VertexSet::range(n)}); }

        static SimplicialComplex from_facets(int n, std::vector<VertexSet> faces)
        {
            SqfIdeal::check_ambient(n);
            for (VertexSet f : faces)
                if (!f.subset_of(VertexSet::range(n)))
                    throw ParameterError("face " + set_string(f) + " outside the vertex range");
            return SimplicialComplex(n, maximal_sets(std::move(faces)));
        }

        int vertex_count() const { return n_; }
        const std::vector<VertexSet>& facets() const { return facets_; }
        bool is_void() const { return facets_.empty(); }

        bool contains(VertexSet face) const
        {
            return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
        }

        /// Induced subcomplex {F in this : F ⊆ W}.
        SimplicialComplex restrict_to(VertexSet w) const
        {
            std::vector<VertexSet> cut;
            cut.reserve(facets_.size());
            for (VertexSet f : facets_)
                cut.push_back(f & w);
            return SimplicialComplex(n_, maximal_sets(std::move(cut)));
        }

        /// faces_by_size()[k] lists the faces with k vertices, canonically sorted.
        std::vector<std::vector<VertexSet>> faces_by_size() const
        {
            std::vector<VertexSet> all;
            for (VertexSet f : facets_)
                for_each_subset(f, [&](VertexSet s) { all.push_back(s); });
            std::sort(all.begin(), all.end(), canonical_less);
            all.erase(std::unique(all.begin(), all.end()), all.end());
            int top = 0;
            for (VertexSet f : facets_)
                top = std::max(top, f.size());
            std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(top) + 1);
            for (VertexSet s : all)
                out[s.size()].push_back(s);
            return out;
        }

        bool operator==(const SimplicialComplex&) const = default;

    private:
        SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

        int n_ = 0;
        std::vector<VertexSet> facets_;
};

/**
 * Stanley-Reisner complex: faces are the supports containing no generator.
 * Its facets are the complements of the minimal primes.
 */
inline SimplicialComplex stanley_reisner(const SqfIdeal& j)
{
    if (j.is_unit())
        throw DomainError("the unit ideal has no Stanley-Reisner complex");
    const VertexSet all = VertexSet::range(j.ambient());
    if (j.is_zero())
        return SimplicialComplex::simplex(j.ambient());
    std::vector<VertexSet> facets;
    for (VertexSet p : minimal_primes(j))
        facets.push_back(all - p);
    return SimplicialComplex::from_facets(j.ambient(), std::move(facets));
}

/// Thrown when an evaluation violates the Euler-characteristic identity.
class HomologyInvariantViolation : public std::logic_error
{
    public:
        using std::logic_error::logic_error;
};

/// Process-wide count of reduced-homology evaluations.
inline std::atomic<std::uint64_t>& homology_evaluations()
{
    static std::atomic<std::uint64_t> count{0};
    return count;
}

/// Process-wide count of evaluations whose Euler characteristic check passed.
inline std::atomic<std::uint64_t>& euler_checks_passed()
{
    static std::atomic<std::uint64_t> count{0};
    return count;
}

namespace detail {

inline int boundary_rank(const std::vector<VertexSet>& cells, const std::vector<VertexSet>& facets_below,
                         FieldSpec field)
{
    if (cells.empty() || facets_below.empty())
        return 0;
    IntMatrix m(facets_below.size(), std::vector<std::int64_t>(cells.size(), 0));
    auto index_of = [&](VertexSet f) {
        auto it = std::lower_bound(facets_below.begin(), facets_below.end(), f, canonical_less);
        return static_cast<std::size_t>(it - facets_below.begin());
    };
    for (std::size_t c = 0; c < cells.size(); ++c)
    {
        int sign = 1;
        for (int v : cells[c])
        {
            VertexSet f = cells[c];
            f.erase(v);
            m[index_of(f)][c] = sign;
            sign = -sign;
        }
    }
    return field.characteristic() == 0 ? rank_rational(m) : rank_mod_p(std::move(m), field.characteristic());
}

}   // namespace detail

/**
 * Dimensions of the reduced homology of c restricted to W, indexed by
 * d + 1 for d = -1 .. |W| - 1.
 *
 * Conventions: {∅} has H_{-1} of dimension 1, the void complex has no
 * homology, and cones are acyclic.  Every evaluation is checked against
 * the reduced Euler characteristic.
 */
inline std::vector<long> reduced_betti(const SimplicialComplex& c, VertexSet w, FieldSpec field = {})
{
    if (!w.subset_of(VertexSet::range(c.vertex_count())))
        throw ParameterError("restriction set " + set_string(w) + " outside the vertex range");
    homology_evaluations().fetch_add(1, std::memory_order_relaxed);
    std::vector<long> dims(static_cast<std::size_t>(w.size()) + 1, 0);
    if (c.is_void())
    {
        euler_checks_passed().fetch_add(1, std::memory_order_relaxed);
        return dims;
    }
    const SimplicialComplex sub = c.restrict_to(w);
    const auto faces = sub.faces_by_size();
    const int levels = static_cast<int>(faces.size());   // sizes 0..levels-1

    VertexSet apex = w;
    for (VertexSet f : sub.facets())
        apex &= f;
    const bool cone = !apex.empty();

    // rank of the boundary from size k to size k-1 faces
    std::vector<int> ranks(static_cast<std::size_t>(levels) + 1, 0);
    if (!cone)
        for (int k = 1; k < levels; ++k)
            ranks[k] = detail::boundary_rank(faces[k], faces[k - 1], field);

    long euler_faces = 0;
    long euler_homology = 0;
    for (int k = 0; k < levels; ++k)
    {
        const long count = static_cast<long>(faces[k].size());
        const long h = cone ? 0 : count - ranks[k] - ranks[k + 1];
        if (h < 0)
            throw HomologyInvariantViolation("negative homology dimension");
        dims[k] = h;
        const long sign = (k % 2 == 1) ? 1 : -1;   // dimension k-1
        euler_faces += sign * count;
        euler_homology += sign * h;
    }
    if (euler_faces != euler_homology)
        throw HomologyInvariantViolation("reduced Euler characteristic mismatch on " + set_string(w));
    euler_checks_passed().fetch_add(1, std::memory_order_relaxed);
    return dims;
}

}   // namespace sqfsym

#endif
