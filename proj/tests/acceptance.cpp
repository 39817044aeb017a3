#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace sqfsym;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Outcome
{
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok)
        {
            ok = false;
            detail = what;
        }
    }
};

SqfIdeal principal(int n, VertexSet m)
{
    return SqfIdeal::minimalize(n, {m});
}

bool has_degree(const SqfIdeal& j, int d)
{
    for (VertexSet g : j.generators())
        if (g.size() == d)
            return true;
    return false;
}

std::vector<Graph> corpus(int lo, int hi)
{
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& g : enumerate_graphs(n))
            out.push_back(std::move(g));
    return out;
}

Outcome criterion_p4()
{
    Outcome o;
    const Graph g = path_graph(4);
    const auto j = graph_symbolic(g, 2);
    o.expect(j == principal(4, VertexSet{0, 1, 2, 3}), "I^{2} = " + j.str());
    const int r = regularity(j, Q);
    o.expect(r == 4, "reg = " + std::to_string(r));
    o.expect(r == 2 + ordered_matching_number(g), "reg != s + ord_match");
    return o;
}

Outcome criterion_k3()
{
    Outcome o;
    const Graph g = complete_graph(3);
    const auto j = graph_symbolic(g, 2);
    o.expect(j == principal(3, VertexSet{0, 1, 2}), "I^{2} = " + j.str());
    const int r = regularity(j, Q);
    o.expect(r == 3, "reg = " + std::to_string(r));
    const Graph p4 = path_graph(4);
    o.expect(induced_matching_number(g) == induced_matching_number(p4) &&
                 regularity(graph_symbolic(p4, 2), Q) != r,
             "no contrast with the four-vertex path");
    return o;
}

Outcome criterion_paw()
{
    Outcome o;
    const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    const auto pw = sqf_power(g, 2);
    const auto sym = graph_symbolic(g, 2);
    o.expect(pw == principal(4, VertexSet{0, 1, 2, 3}), "I^[2] = " + pw.str());
    o.expect(regularity(pw, Q) == 4, "reg I^[2] != 4");
    o.expect(sym == principal(4, VertexSet{0, 1, 2}), "I^{2} = " + sym.str());
    o.expect(regularity(sym, Q) == 3, "reg I^{2} != 3");
    return o;
}

Outcome criterion_c5()
{
    Outcome o;
    const Graph g = cycle_graph(5);
    o.expect(cover_height(g) == 3, "height != 3");
    const auto j = graph_symbolic(g, 3);
    o.expect(j == principal(5, VertexSet::range(5)), "I^{3} = " + j.str());
    const int r = regularity(j, Q);
    const int r1 = regularity(edge_ideal(g), Q);
    o.expect(r == 5 && r == 5 / 2 + 3, "reg I^{3} = " + std::to_string(r));
    o.expect(r < r1 + 4, "not strictly below reg(I) + 4");
    return o;
}

Outcome criterion_k35()
{
    Outcome o;
    const Graph g = complete_bipartite_graph(3, 5);
    const int r1 = regularity(edge_ideal(g), Q);
    o.expect(r1 == 2, "reg I = " + std::to_string(r1));
    const auto sym = graph_symbolic(g, 3);
    o.expect(sym == sqf_power(g, 3), "I^{3} != I^[3]");
    const auto d = generator_degrees(sym);
    o.expect(!sym.is_zero() && d.min_degree == 6 && d.max_degree == 6, "not generated in degree 6");
    const int r3 = regularity(sym, Q);
    o.expect(r3 == 6 && r3 == r1 + 4, "reg I^{3} = " + std::to_string(r3));
    o.expect(r3 < 8 / 2 + 3, "not strictly below floor(n/2) + 3");
    return o;
}

Outcome criterion_star_triangles()
{
    Outcome o;
    for (int t = 1; t <= 3; ++t)
    {
        const Graph g = star_triangle_graph(t);
        const std::string tag = "t=" + std::to_string(t) + ": ";
        o.expect(cover_height(g) == t + 1, tag + "height != t+1");
        o.expect(has_degree(graph_symbolic(g, t + 1), 2 * t + 1), tag + "no generator of degree 2t+1");
        if (t <= 2)
            for (int s = 1; s <= t + 1; ++s)
            {
                const int r = regularity(graph_symbolic(g, s), Q);
                o.expect(r == s + t, tag + "reg at s=" + std::to_string(s) + " is " + std::to_string(r));
            }
    }
    return o;
}

Outcome suite_outcome(const std::vector<Graph>& graphs, const std::vector<std::string>& ids, unsigned jobs)
{
    Outcome o;
    SuiteOptions opts;
    opts.jobs = jobs;
    const auto report = run_suite(graphs, ids, opts);
    long pass = 0;
    for (const auto& c : report.checks)
    {
        pass += c.pass;
        if (c.fail > 0)
            o.expect(false, c.check_id + " failed on " + c.failures.front().graph_id + ": " +
                                c.failures.front().witness);
    }
    std::ostringstream os;
    os << report.graphs << " graphs, " << pass << " passing instances";
    if (o.ok)
        o.detail = os.str();
    o.expect(report.graphs == static_cast<long>(graphs.size()), "graph count mismatch");
    return o;
}

Outcome criterion_corpus5()
{
    const auto graphs = corpus(1, 5);
    Outcome o;
    o.expect(graphs.size() == 34 + 11 + 4 + 2 + 1, "corpus size");
    if (!o.ok)
        return o;
    return suite_outcome(graphs, check_ids(), 1);
}

Outcome criterion_corpus6()
{
    const auto graphs = corpus(6, 6);
    Outcome o;
    o.expect(graphs.size() == 156, "corpus size");
    if (!o.ok)
        return o;
    return suite_outcome(graphs, {"chk-del", "chk-intsec", "chk-ttsym", "chk-prop-zero", "chk-sym2", "chk-conj"},
                         effective_jobs(0));
}

Outcome criterion_oracles()
{
    Outcome o;
    std::mt19937_64 rng(20260101);
    int instances = 0;
    for (int trial = 0; trial < 200; ++trial)
    {
        const int n = 2 + static_cast<int>(rng() % 6);
        const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(rng, n, p);
        if (g.edge_count() == 0)
        {
            o.expect(graph_symbolic(g, 1).is_zero(), "edgeless graph with nonzero I");
            continue;
        }
        const int h = cover_height(g);
        for (int s = 1; s <= h + 1; ++s)
        {
            const auto got = graph_symbolic(g, s);
            const auto want = oracle::symbolic(g, s);
            o.expect(got.generators() == want.generators() && got.str() == want.str(),
                     "symbolic mismatch on " + to_graph6(g) + " s=" + std::to_string(s));
            ++instances;
        }
    }
    int tables = 0;
    for (const Graph& g : corpus(1, 5))
    {
        if (g.edge_count() == 0)
            continue;
        std::vector<SqfIdeal> ideals;
        const auto edges = g.edges();
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << edges.size()); ++pick)
        {
            if (std::popcount(pick) > 4)
                continue;
            std::vector<VertexSet> gens;
            for (std::size_t k = 0; k < edges.size(); ++k)
                if (pick >> k & 1)
                    gens.push_back(edges[k].ends());
            ideals.push_back(SqfIdeal::minimalize(g.order(), gens));
        }
        for (int s = 1; s <= cover_height(g); ++s)
        {
            ideals.push_back(graph_symbolic(g, s));
            if (!sqf_power(g, s).is_zero())
                ideals.push_back(sqf_power(g, s));
        }
        for (const auto& j : ideals)
        {
            if (j.generators().size() > 4)
                continue;
            std::map<std::pair<int, int>, long> got;
            const auto table = betti_table(j, Q);
            for (const auto& [ij, v] : table.entries())
                if (ij.first >= 1 && v != 0)
                    got[ij] = v;
            o.expect(got == oracle::lcm_lattice_betti(j), "Betti mismatch on " + j.str());
            ++tables;
        }
    }
    if (o.ok)
        o.detail = std::to_string(instances) + " symbolic powers, " + std::to_string(tables) + " Betti tables";
    return o;
}

Outcome criterion_homology(std::uint64_t evaluations, std::uint64_t euler_passed)
{
    Outcome o;
    const auto hollow = SimplicialComplex::from_facets(3, {{0, 1}, {0, 2}, {1, 2}});
    o.expect(reduced_betti(hollow, VertexSet::range(3), Q) == std::vector<long>{0, 0, 1, 0}, "hollow triangle");
    o.expect(reduced_betti(SimplicialComplex::irrelevant(2), {}, Q) == std::vector<long>{1}, "irrelevant complex");
    const auto cone = SimplicialComplex::from_facets(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    o.expect(reduced_betti(cone, VertexSet::range(4), Q) == std::vector<long>(5, 0), "cone");
    o.expect(evaluations > 0 && evaluations == euler_passed,
             "Euler checks " + std::to_string(euler_passed) + " of " + std::to_string(evaluations));

    long compared = 0;
    for (const Graph& g : corpus(1, 5))
    {
        if (g.edge_count() == 0)
            continue;
        for (int s = 1; s <= cover_height(g); ++s)
            for (const auto& j : {graph_symbolic(g, s), sqf_power(g, s)})
            {
                if (j.is_zero())
                    continue;
                const auto a = betti_table(j, Q);
                const auto b = betti_table(j, FieldSpec::prime(2));
                o.expect(a.entries() == b.entries(), "characteristic dependence on " + to_graph6(g) + " " + j.str());
                ++compared;
            }
    }
    if (o.ok)
        o.detail = std::to_string(euler_passed) + " Euler checks in criteria 1-8, " + std::to_string(compared) +
                   " tables compared over Q and GF(2)";
    return o;
}

}   // namespace

int main()
{
    struct Criterion
    {
        int number;
        std::string name;
        double budget_s;
        std::function<Outcome()> run;
    };

    std::uint64_t evaluations = 0, euler = 0;
    const std::vector<Criterion> first = {
        {1, "P4 second power and regularity", 1, criterion_p4},
        {2, "K3 second power and regularity", 1, criterion_k3},
        {3, "squarefree power vs symbolic power on the paw graph", 1, criterion_paw},
        {4, "C5 third power", 1, criterion_c5},
        {5, "K_{3,5} third power", 30, criterion_k35},
        {6, "star triangles t = 1, 2, 3", 60, criterion_star_triangles},
        {7, "all checks on every graph with at most 5 vertices", 300, criterion_corpus5},
        {8, "identity and bound checks on every graph with 6 vertices", 1800, criterion_corpus6},
    };

    int failed = 0;
    auto report = [&](int number, const std::string& name, double budget, const std::function<Outcome()>& fn) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = fn();
        }
        catch (const std::exception& e)
        {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= budget)
            o.expect(false, "over time budget");
        if (!o.ok)
            ++failed;
        std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", number, o.ok ? "PASS" : "FAIL", name.c_str(), secs,
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
    };

    const auto eval0 = homology_evaluations().load();
    const auto pass0 = euler_checks_passed().load();
    for (const auto& c : first)
        report(c.number, c.name, c.budget_s, c.run);
    evaluations = homology_evaluations().load() - eval0;
    euler = euler_checks_passed().load() - pass0;

    report(9, "oracle equivalences", 600, criterion_oracles);
    report(10, "homology unit suite and characteristic agreement", 600,
           [&] { return criterion_homology(evaluations, euler); });

    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
