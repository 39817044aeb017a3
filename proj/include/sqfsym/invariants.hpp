#ifndef SQFSYM_INVARIANTS_HPP
#define SQFSYM_INVARIANTS_HPP

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace sqfsym {

/**
 * Graph invariants used throughout: matching numbers, cover height and the
 * class predicates the bounds are phrased in.
 */
struct InvariantReport
{
    int match = 0;
    int ind_match = 0;
    int ord_match = 0;
    int height = 0;
    bool is_bipartite = true;
    bool is_chordal = true;
    bool is_cameron_walker = true;
    bool is_connected = true;

    bool operator==(const InvariantReport&) const = default;
};

namespace detail {

inline int max_matching(const Graph& g, VertexSet avail)
{
    for (int v : avail)
    {
        const VertexSet nb = g.neighbors(v) & avail;
        if (nb.empty())
            continue;
        VertexSet rest = avail;
        rest.erase(v);
        int best = max_matching(g, rest);
        for (int w : nb)
        {
            VertexSet r = rest;
            r.erase(w);
            best = std::max(best, 1 + max_matching(g, r));
        }
        return best;
    }
    return 0;
}

// Matching edges may not touch N[v] u N[w] of an already chosen edge vw.
inline int max_induced_matching(const Graph& g, VertexSet avail)
{
    for (int v : avail)
    {
        const VertexSet nb = g.neighbors(v) & avail;
        if (nb.empty())
            continue;
        VertexSet rest = avail;
        rest.erase(v);
        int best = max_induced_matching(g, rest);
        for (int w : nb)
        {
            const VertexSet blocked = g.closed_neighborhood(v) | g.closed_neighborhood(w);
            best = std::max(best, 1 + max_induced_matching(g, avail - blocked));
        }
        return best;
    }
    return 0;
}

inline int max_independent(const Graph& g, VertexSet avail)
{
    if (avail.empty())
        return 0;
    int pivot = -1;
    int pivot_deg = -1;
    for (int v : avail)
    {
        const int d = (g.neighbors(v) & avail).size();
        if (d > pivot_deg)
        {
            pivot = v;
            pivot_deg = d;
        }
    }
    if (pivot_deg == 0)
        return avail.size();
    VertexSet without = avail;
    without.erase(pivot);
    const int skip = max_independent(g, without);
    const int take = 1 + max_independent(g, avail - g.closed_neighborhood(pivot));
    return std::max(skip, take);
}

// Bron-Kerbosch with pivoting, run on the complement: yields maximal independent sets.
template <typename F>
void maximal_independent_sets(const Graph& g, VertexSet r, VertexSet p, VertexSet x, F& emit)
{
    if (p.empty() && x.empty())
    {
        emit(r);
        return;
    }
    const VertexSet px = p | x;
    int pivot = px.min();
    int best = -1;
    for (int u : px)
    {
        const int c = (p - g.closed_neighborhood(u)).size();
        if (c > best)
        {
            best = c;
            pivot = u;
        }
    }
    // branch on p minus the non-neighbours of the pivot, i.e. p intersect N[pivot]
    const VertexSet branch = p & g.closed_neighborhood(pivot);
    for (int v : branch)
    {
        const VertexSet non_nb = g.vertices() - g.closed_neighborhood(v);
        VertexSet rv = r;
        rv.insert(v);
        maximal_independent_sets(g, rv, p & non_nb, x & non_nb, emit);
        p.erase(v);
        x.insert(v);
    }
}

inline bool acyclic(int count, const std::vector<std::vector<int>>& succ)
{
    std::vector<int> indeg(static_cast<std::size_t>(count), 0);
    for (const auto& s : succ)
        for (int t : s)
            ++indeg[t];
    std::vector<int> ready;
    for (int i = 0; i < count; ++i)
        if (indeg[i] == 0)
            ready.push_back(i);
    int seen = 0;
    while (!ready.empty())
    {
        const int i = ready.back();
        ready.pop_back();
        ++seen;
        for (int t : succ[i])
            if (--indeg[t] == 0)
                ready.push_back(t);
    }
    return seen == count;
}

/**
 * A matching admits an ordered labeling iff some choice of a-endpoints is
 * independent and the constraint digraph (e -> f when a_e b_f is an edge,
 * e != f) has no directed cycle.
 */
inline bool orderable(const Graph& g, const std::vector<Edge>& m)
{
    const int r = static_cast<int>(m.size());
    for (std::uint32_t orient = 0; orient < (std::uint32_t{1} << r); ++orient)
    {
        std::vector<int> a(r), b(r);
        VertexSet aset;
        for (int i = 0; i < r; ++i)
        {
            const bool flip = (orient >> i) & 1U;
            a[i] = flip ? m[i].v : m[i].u;
            b[i] = flip ? m[i].u : m[i].v;
            aset.insert(a[i]);
        }
        bool independent = true;
        for (int v : aset)
            if ((g.neighbors(v) & aset).size() > 0)
                independent = false;
        if (!independent)
            continue;
        std::vector<std::vector<int>> succ(static_cast<std::size_t>(r));
        for (int e = 0; e < r; ++e)
            for (int f = 0; f < r; ++f)
                if (e != f && g.has_edge(a[e], b[f]))
                    succ[e].push_back(f);
        if (acyclic(r, succ))
            return true;
    }
    return false;
}

template <typename F>
void for_each_matching(const Graph& g, VertexSet avail, std::vector<Edge>& current, F& visit)
{
    visit(current);
    // extend only with edges whose lower endpoint exceeds the last chosen lower endpoint
    const int floor = current.empty() ? -1 : current.back().u;
    for (int u : avail)
    {
        if (u <= floor)
            continue;
        for (int v : g.neighbors(u) & avail)
        {
            if (v < u)
                continue;
            current.push_back({u, v});
            VertexSet rest = avail;
            rest.erase(u);
            rest.erase(v);
            for_each_matching(g, rest, current, visit);
            current.pop_back();
        }
    }
}

}   // namespace detail

inline int matching_number(const Graph& g)
{
    return detail::max_matching(g, g.non_isolated());
}

inline int induced_matching_number(const Graph& g)
{
    return detail::max_induced_matching(g, g.non_isolated());
}

/// Largest ordered matching; 0 for an edgeless graph.
inline int ordered_matching_number(const Graph& g)
{
    int best = 0;
    std::vector<Edge> current;
    auto visit = [&](const std::vector<Edge>& m) {
        const int r = static_cast<int>(m.size());
        if (r > best && detail::orderable(g, m))
            best = r;
    };
    detail::for_each_matching(g, g.non_isolated(), current, visit);
    return best;
}

inline int independence_number(const Graph& g)
{
    return detail::max_independent(g, g.vertices());
}

/// Minimum vertex cover size, i.e. the height of the edge ideal.
inline int cover_height(const Graph& g)
{
    return g.order() - independence_number(g);
}

/// Inclusion-minimal vertex covers, canonically sorted.  Edgeless -> {{}}.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g)
{
    std::vector<VertexSet> covers;
    auto emit = [&](VertexSet independent) { covers.push_back(g.vertices() - independent); };
    detail::maximal_independent_sets(g, VertexSet{}, g.vertices(), VertexSet{}, emit);
    std::sort(covers.begin(), covers.end(), canonical_less);
    return covers;
}

inline bool is_clique(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (!(s - VertexSet::singleton(v)).subset_of(g.neighbors(v)))
            return false;
    return true;
}

/// Vertices whose open neighbourhood is a clique (isolated vertices included).
inline std::vector<int> simplicial_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbors(v)))
            out.push_back(v);
    return out;
}

/// Perfect elimination: strip simplicial vertices until none remain.
inline bool is_chordal(const Graph& g)
{
    VertexSet remaining = g.vertices();
    while (!remaining.empty())
    {
        bool removed = false;
        for (int v : remaining)
        {
            if (is_clique(g, g.neighbors(v) & remaining))
            {
                remaining.erase(v);
                removed = true;
                break;
            }
        }
        if (!removed)
            return false;
    }
    return true;
}

inline bool is_bipartite(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s)
    {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty())
        {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
            {
                if (colour[w] < 0)
                {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
    }
    return true;
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    VertexSet seen = VertexSet::singleton(0);
    VertexSet frontier = seen;
    while (!frontier.empty())
    {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbors(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

inline InvariantReport classify(const Graph& g)
{
    InvariantReport r;
    r.match = matching_number(g);
    r.ind_match = induced_matching_number(g);
    r.ord_match = ordered_matching_number(g);
    r.height = cover_height(g);
    r.is_bipartite = is_bipartite(g);
    r.is_chordal = is_chordal(g);
    r.is_cameron_walker = (r.match == r.ind_match);
    r.is_connected = is_connected(g);
    return r;
}

}   // namespace sqfsym

#endif
