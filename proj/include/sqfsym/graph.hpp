#ifndef SQFSYM_GRAPH_HPP
#define SQFSYM_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace sqfsym {

/// Unordered edge stored with u < v.
struct Edge
{
    int u = 0;
    int v = 0;

    VertexSet ends() const { return VertexSet{u, v}; }
    auto operator<=>(const Edge&) const = default;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept as one VertexSet per vertex; the edge list is derived
 * on demand and is always in canonical (sorted, u < v) order, so two equal
 * graphs compare equal.
 */
class Graph
{
    public:
        Graph() = default;

        explicit Graph(int n) : n_(n)
        {
            if (n < 0 || n > kMaxVertices)
                throw ParameterError("vertex count " + std::to_string(n) + " outside 0.." +
                                     std::to_string(kMaxVertices));
            adj_.assign(static_cast<std::size_t>(n), VertexSet{});
        }

        Graph(int n, std::span<const Edge> edges) : Graph(n)
        {
            for (const Edge& e : edges)
                add_edge(e.u, e.v);
        }

        Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n)
        {
            for (auto [a, b] : edges)
                add_edge(a, b);
        }

        /// Rejects self-loops, duplicates and out-of-range endpoints.
        void add_edge(int a, int b)
        {
            if (a < 0 || b < 0 || a >= n_ || b >= n_)
                throw ParameterError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                     "} has an endpoint outside 0.." + std::to_string(n_ - 1));
            if (a == b)
                throw ParameterError("self-loop at vertex " + std::to_string(a));
            if (adj_[a].contains(b))
                throw ParameterError("duplicate edge {" + std::to_string(std::min(a, b)) + "," +
                                     std::to_string(std::max(a, b)) + "}");
            adj_[a].insert(b);
            adj_[b].insert(a);
        }

        int order() const { return n_; }
        VertexSet vertices() const { return VertexSet::range(n_); }
        VertexSet neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
        VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::singleton(v); }
        int degree(int v) const { return neighbors(v).size(); }
        bool has_edge(int a, int b) const { return a >= 0 && a < n_ && adj_[a].contains(b); }

        int edge_count() const
        {
            int twice = 0;
            for (VertexSet s : adj_)
                twice += s.size();
            return twice / 2;
        }

        std::vector<Edge> edges() const
        {
            std::vector<Edge> out;
            for (int u = 0; u < n_; ++u)
                for (int v : adj_[u])
                    if (u < v)
                        out.push_back({u, v});
            return out;
        }

        /// Vertices incident to at least one edge.
        VertexSet non_isolated() const
        {
            VertexSet s;
            for (int v = 0; v < n_; ++v)
                if (!adj_[v].empty())
                    s.insert(v);
            return s;
        }

        /**
         * G \ U kept on the same vertex set: every edge meeting U is dropped
         * and U becomes isolated.  Edge ideals of the result live in the same
         * polynomial ring as those of this graph.
         */
        Graph isolate(VertexSet removed) const
        {
            check_subset(removed);
            Graph g(n_);
            for (int v = 0; v < n_; ++v)
                if (!removed.contains(v))
                    g.adj_[v] = adj_[v] - removed;
            return g;
        }

        /// Induced subgraph on `keep`, same vertex set (others isolated).
        Graph induced_on(VertexSet keep) const { return isolate(vertices() - keep); }

        bool operator==(const Graph&) const = default;

        void check_subset(VertexSet s) const
        {
            if (!s.subset_of(vertices()))
                throw ParameterError("vertex set " + set_string(s) + " not contained in 0.." +
                                     std::to_string(n_ - 1));
        }

    private:
        int n_ = 0;
        std::vector<VertexSet> adj_;
};

/// G \ U relabeled onto 0..n-|U|-1, with original[new] = old index.
struct RelabeledGraph
{
    Graph graph;
    std::vector<int> original;
};

inline RelabeledGraph delete_vertices(const Graph& g, VertexSet removed)
{
    g.check_subset(removed);
    std::vector<int> original;
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v)
    {
        if (!removed.contains(v))
        {
            relabel[v] = static_cast<int>(original.size());
            original.push_back(v);
        }
    }
    Graph h(static_cast<int>(original.size()));
    for (const Edge& e : g.edges())
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0)
            h.add_edge(relabel[e.u], relabel[e.v]);
    return {std::move(h), std::move(original)};
}

// --------------------------------------------------------------------------
// Named families
// --------------------------------------------------------------------------

enum class Family
{
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    star_triangle,
    from_edges,
};

namespace detail {

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw ParameterError(msg);
}

}   // namespace detail

inline Graph path_graph(int n)
{
    detail::require(n >= 1, "path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    detail::require(n >= 3, "cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n)
{
    detail::require(n >= 1, "complete graph needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(int a, int b)
{
    detail::require(a >= 1 && b >= 1, "complete bipartite graph needs both sides >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

/// K_{1,k} with centre 0.
inline Graph star_graph(int k)
{
    detail::require(k >= 1, "star needs at least 1 leaf");
    return complete_bipartite_graph(1, k);
}

/// t triangles sharing apex 0; triangle i is {0, 2i+1, 2i+2}.
inline Graph star_triangle_graph(int t)
{
    detail::require(t >= 1, "star triangle needs at least 1 triangle");
    Graph g(2 * t + 1);
    for (int i = 0; i < t; ++i)
    {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

/**
 * Builds a named family member.  For `from_edges` the parameters are
 * n followed by endpoint pairs.
 */
inline Graph build_named(Family family, std::span<const int> params)
{
    auto need = [&](std::size_t k, const char* name) {
        detail::require(params.size() == k, std::string(name) + " takes " + std::to_string(k) +
                                                " parameter(s)");
    };
    switch (family)
    {
        case Family::path:
            need(1, "path");
            return path_graph(params[0]);
        case Family::cycle:
            need(1, "cycle");
            return cycle_graph(params[0]);
        case Family::complete:
            need(1, "complete");
            return complete_graph(params[0]);
        case Family::complete_bipartite:
            need(2, "complete_bipartite");
            return complete_bipartite_graph(params[0], params[1]);
        case Family::star:
            need(1, "star");
            return star_graph(params[0]);
        case Family::star_triangle:
            need(1, "star_triangle");
            return star_triangle_graph(params[0]);
        case Family::from_edges:
        {
            detail::require(!params.empty() && params.size() % 2 == 1,
                            "from_edges takes n followed by endpoint pairs");
            Graph g(params[0]);
            for (std::size_t i = 1; i < params.size(); i += 2)
                g.add_edge(params[i], params[i + 1]);
            return g;
        }
    }
    throw ParameterError("unknown graph family");
}

inline Graph build_named(Family family, std::initializer_list<int> params)
{
    return build_named(family, std::span<const int>(params.begin(), params.size()));
}

}   // namespace sqfsym

#endif
