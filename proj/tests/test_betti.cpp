#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace sqfsym;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SqfIdeal ideal(int n, std::vector<VertexSet> gens)
{
    return SqfIdeal::minimalize(n, std::move(gens));
}

std::vector<Graph> small_corpus(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : enumerate_graphs(n))
            out.push_back(std::move(g));
    return out;
}

/// Disjoint union with the second graph's vertices shifted past the first.
Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges())
        g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges())
        g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

}   // namespace

TEST_CASE("Betti tables of basic ideals", "[betti]")
{
    const auto t = betti_table(ideal(3, {{0, 1}}), Q);
    CHECK(t.quotient(0, 0) == 1);
    CHECK(t.quotient(1, 2) == 1);
    long others = 0;
    for (const auto& [ij, v] : t.entries())
        if (ij.first >= 1 && ij != std::pair{1, 2})
            others += v;
    CHECK(others == 0);
    CHECK(t.reg_ideal() == 2);
    CHECK(t.ideal(0, 2) == 1);

    CHECK(regularity(edge_ideal(complete_graph(3)), Q) == 2);
    CHECK(regularity(ideal(5, {{0, 1, 2, 3, 4}}), Q) == 5);
    CHECK(regularity(SqfIdeal::variables(4, VertexSet{0, 2}), Q) == 1);

    CHECK_THROWS_AS(betti_table(SqfIdeal::zero(3), Q), DomainError);
    CHECK_THROWS_AS(betti_table(SqfIdeal::unit(3), Q), DomainError);
    CHECK_THROWS_AS(regularity(SqfIdeal::zero(3), Q), DomainError);
}

TEST_CASE("regularity values of named examples", "[betti]")
{
    CHECK(regularity(edge_ideal(complete_bipartite_graph(3, 5)), Q) == 2);
    CHECK(regularity(graph_symbolic(path_graph(4), 2), Q) == 4);
    CHECK(regularity(graph_symbolic(complete_graph(3), 2), Q) == 3);
    CHECK(regularity(graph_symbolic(complete_bipartite_graph(3, 5), 3), Q) == 6);
}

TEST_CASE("principal ideals have regularity equal to their degree", "[betti][property]")
{
    for (int n = 1; n <= 7; ++n)
        for_each_subset(VertexSet::range(n), [&](VertexSet f) {
            if (!f.empty())
                CHECK(regularity(ideal(n, {f}), Q) == f.size());
        });
}

TEST_CASE("Hochster tables agree with the lcm-lattice oracle for ideals with at most 4 generators", "[betti][oracle]")
{
    int compared = 0;
    for (const Graph& g : small_corpus(5))
    {
        if (g.edge_count() == 0)
            continue;
        const int h = cover_height(g);
        for (int s = 1; s <= h; ++s)
        {
            const auto j = graph_symbolic(g, s);
            if (j.generators().size() > 4)
                continue;
            INFO(to_graph6(g) << " s=" << s << " " << j.str());
            const auto table = betti_table(j, Q);
            std::map<std::pair<int, int>, long> got;
            for (const auto& [ij, v] : table.entries())
                if (ij.first >= 1 && v != 0)
                    got[ij] = v;
            CHECK(got == oracle::lcm_lattice_betti(j));
            ++compared;
        }
    }
    CHECK(compared > 30);
}

TEST_CASE("Hochster tables agree with the lcm-lattice oracle on random small ideals", "[betti][oracle]")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial)
    {
        const int n = 4 + static_cast<int>(rng() % 3);
        std::vector<VertexSet> gens;
        const int r = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < r; ++k)
        {
            const VertexSet m(rng() & ((std::uint64_t{1} << n) - 1));
            if (!m.empty())
                gens.push_back(m);
        }
        if (gens.empty())
            continue;
        const auto j = ideal(n, gens);
        INFO(j.str());
        std::map<std::pair<int, int>, long> got;
        const auto table = betti_table(j, Q);
        for (const auto& [ij, v] : table.entries())
            if (ij.first >= 1 && v != 0)
                got[ij] = v;
        CHECK(got == oracle::lcm_lattice_betti(j));
    }
}

TEST_CASE("pruning free variables does not change the table", "[betti][property]")
{
    BettiOptions full;
    full.prune_free_vertices = false;
    for (const Graph& g : small_corpus(5))
    {
        if (g.edge_count() == 0)
            continue;
        for (int s = 1; s <= cover_height(g); ++s)
        {
            const auto j = graph_symbolic(g, s);
            INFO(to_graph6(g) << " s=" << s);
            CHECK(betti_table(j, Q) == betti_table(j, Q, full));
        }
    }
}

TEST_CASE("edge ideal regularity lies between induced matching and matching bounds", "[betti][property]")
{
    for (const Graph& g : small_corpus(6))
    {
        if (g.edge_count() == 0)
            continue;
        INFO(to_graph6(g));
        const auto inv = classify(g);
        const int r = regularity(edge_ideal(g), Q);
        CHECK(inv.ind_match + 1 <= r);
        CHECK(r <= inv.match + 1);
    }
}

TEST_CASE("quotient regularity is additive over disjoint unions", "[betti][property]")
{
    const auto corpus = small_corpus(3);
    for (const Graph& a : corpus)
        for (const Graph& b : corpus)
        {
            if (a.edge_count() == 0 || b.edge_count() == 0)
                continue;
            const int ra = betti_table(edge_ideal(a), Q).reg_quotient();
            const int rb = betti_table(edge_ideal(b), Q).reg_quotient();
            CHECK(betti_table(edge_ideal(disjoint_union(a, b)), Q).reg_quotient() == ra + rb);
        }
}

TEST_CASE("tables over Q and GF(2) agree on every squarefree symbolic power up to 5 vertices", "[betti][property]")
{
    for (const Graph& g : small_corpus(5))
    {
        if (g.edge_count() == 0)
            continue;
        for (int s = 1; s <= cover_height(g); ++s)
        {
            const auto j = graph_symbolic(g, s);
            INFO(to_graph6(g) << " s=" << s);
            const auto q = betti_table(j, Q);
            const auto f2 = betti_table(j, FieldSpec::prime(2));
            CHECK(q.entries() == f2.entries());
        }
    }
}

TEST_CASE("table invariants", "[betti][property]")
{
    for (const Graph& g : small_corpus(5))
    {
        if (g.edge_count() == 0)
            continue;
        for (int s = 1; s <= cover_height(g); ++s)
        {
            const auto j = graph_symbolic(g, s);
            const auto t = betti_table(j, Q);
            CHECK(t.quotient(0, 0) == 1);
            for (const auto& [ij, v] : t.entries())
                CHECK(v >= 0);
            CHECK(t.reg_ideal() >= generator_degrees(j).min_degree);
            CHECK(t.reg_ideal() == t.reg_quotient() + 1);
            BettiTable doubled = t;
            doubled += t;
            CHECK(doubled.quotient(1, generator_degrees(j).min_degree) ==
                  2 * t.quotient(1, generator_degrees(j).min_degree));
        }
    }
}

TEST_CASE("rendered tables", "[betti]")
{
    const auto text = betti_table(edge_ideal(path_graph(3)), Q).render();
    CHECK(text.find("total:") != std::string::npos);
    CHECK(text.find("1:") != std::string::npos);
}
