#include <catch_amalgamated.hpp>

#include <cstdlib>

#include <sqfsym/report_json.hpp>

#include "oracles.hpp"

using namespace sqfsym;

namespace {

std::vector<Graph> corpus_upto(int max_n)
{
    return CorpusSpec::parse("enumerate:" + std::to_string(max_n)).load();
}

const Graph kPaw(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});

}   // namespace

TEST_CASE("catalog lists every check once", "[verifier]")
{
    const auto ids = check_ids();
    CHECK(ids.size() == 17);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK_THROWS_AS(run_check("chk-nope", path_graph(3)), ParameterError);
}

TEST_CASE("Cameron-Walker equality on the two-triangle star", "[verifier]")
{
    const auto r = run_check("chk-cw-eq", star_triangle_graph(2), CheckOptions::only_s(3));
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CheckStatus::pass);
    CHECK(r[0].lhs == "5");
    CHECK(r[0].rhs == "5");
    CHECK(r[0].param("s") == "3");
}

TEST_CASE("precondition failures are skipped with a reason", "[verifier]")
{
    const auto r = run_check("chk-chordal-bound", cycle_graph(5));
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CheckStatus::skipped);
    CHECK(r[0].reason == "graph not chordal");

    CHECK(run_check("chk-cw-eq", path_graph(4))[0].reason == "graph not Cameron-Walker");
    CHECK(run_check("chk-bipartite-eq", complete_graph(3))[0].reason == "graph not bipartite");
    const auto tt = run_check("chk-ttsym", kPaw);
    CHECK(tt[0].status == CheckStatus::skipped);
    CHECK(tt[0].reason == "s exceeds height");
    CHECK(run_check("chk-conj", Graph(3))[0].reason == "graph has no edges");
    CHECK(run_check("chk-conj", path_graph(4), CheckOptions::only_s(5))[0].reason ==
          "requested s outside valid range");
}

TEST_CASE("conjecture bound is tight on the path with four vertices", "[verifier]")
{
    const auto r = run_check("chk-conj", path_graph(4), CheckOptions::only_s(2));
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CheckStatus::pass);
    CHECK(r[0].lhs == "4");
    CHECK(r[0].rhs == "4");
    CHECK(r[0].tight());
}

TEST_CASE("every check passes on all graphs up to 5 vertices", "[verifier][corpus]")
{
    const auto report = run_suite(corpus_upto(5), check_ids());
    CHECK(report.graphs == 52);
    for (const auto& c : report.checks)
    {
        INFO(c.check_id);
        CHECK(c.fail == 0);
        CHECK(c.pass > 0);
    }
}

TEST_CASE("suite results do not depend on the worker count", "[verifier][property]")
{
    const auto corpus = CorpusSpec::parse("enumerate:5..6").load();
    const std::vector<std::string> ids = {"chk-conj", "chk-betti-mono", "chk-del"};
    SuiteOptions one;
    one.check.seed = 42;
    SuiteOptions four = one;
    four.jobs = 4;
    const auto a = run_suite(corpus, ids, one);
    const auto b = run_suite(corpus, ids, four);
    auto strip = [](Report r) {
        r.wall_ms = 0;
        return to_json(r).dump();
    };
    CHECK(strip(a) == strip(b));
    CHECK(strip(a) == strip(run_suite(corpus, ids, one)));
}

TEST_CASE("empty corpus gives an empty report", "[verifier]")
{
    const auto r = run_suite({}, check_ids());
    CHECK(r.graphs == 0);
    for (const auto& c : r.checks)
        CHECK(c.pass + c.fail + c.skip == 0);
}

TEST_CASE("unknown ids in a suite are rejected up front", "[verifier]")
{
    CHECK_THROWS_AS(run_suite(corpus_upto(2), {"chk-conj", "bogus"}), ParameterError);
}

TEST_CASE("third-power inclusion is skipped on a height-two graph", "[verifier]")
{
    const auto r = run_suite({kPaw}, {"chk-ttsym"});
    CHECK(r.checks[0].skip == 1);
    CHECK(r.checks[0].pass == 0);
    CHECK(graph_symbolic(kPaw, 2) == SqfIdeal::minimalize(4, {VertexSet{0, 1, 2}}));
    CHECK_FALSE(sqf_power(kPaw, 2).contains(graph_symbolic(kPaw, 2)));
}

TEST_CASE("explicit second colon matches the computed colon on 6-vertex graphs", "[verifier][corpus]")
{
    const auto report = run_suite(CorpusSpec::parse("enumerate:6..6").load(),
                                  {"chk-seccoldesc", "chk-symor", "chk-colsy", "chk-intsec", "chk-chordcolon"});
    for (const auto& c : report.checks)
    {
        INFO(c.check_id);
        CHECK(c.fail == 0);
    }
}

TEST_CASE("comparison helpers report failures with witnesses", "[verifier]")
{
    // A deliberately wrong identity must be detected.
    const GraphContext ctx(path_graph(4));
    CheckResult r = detail::start("probe", ctx, {});
    detail::compare_equal(r, edge_ideal(path_graph(4)), edge_ideal(cycle_graph(4)));
    CHECK(r.status == CheckStatus::fail);
    CHECK(r.witness == "rhs generator x0x3 not in lhs");

    CheckResult inc = detail::start("probe", ctx, {});
    detail::compare_contained(inc, edge_ideal(cycle_graph(4)), edge_ideal(path_graph(4)));
    CHECK(inc.status == CheckStatus::fail);
    CHECK_FALSE(inc.witness.empty());

    CheckResult num = detail::start("probe", ctx, {});
    detail::compare_int(num, 5, 4, detail::Relation::le);
    CHECK(num.status == CheckStatus::fail);
    CHECK(num.witness == "expected 5 <= 4");
}

TEST_CASE("failures carry witnesses and sort by graph id", "[verifier]")
{
    // A stricter bound than the true one must produce sorted, witnessed failures.
    std::vector<CheckResult> failures;
    for (const Graph& g : corpus_upto(4))
    {
        GraphContext ctx(g);
        if (!ctx.has_edges())
            continue;
        CheckResult r = detail::start("probe", ctx, {});
        detail::compare_int(r, ctx.reg_edge(), ctx.invariants().ind_match, detail::Relation::le);
        if (r.status == CheckStatus::fail)
            failures.push_back(r);
    }
    CHECK(failures.size() > 5);
    for (const auto& f : failures)
        CHECK_FALSE(f.witness.empty());
}

TEST_CASE("conjecture exploration", "[verifier]")
{
    const auto c5 = explore_conjecture({cycle_graph(5)}, 3, 3);
    CHECK(c5.violations.empty());
    REQUIRE(c5.tight.size() == 1);
    CHECK(c5.tight[0].lhs == "5");

    const auto p4 = explore_conjecture({path_graph(4)});
    bool s2_tight = false;
    for (const auto& t : p4.tight)
        s2_tight = s2_tight || t.param("s") == "2";
    CHECK(s2_tight);

    SuiteOptions opts;
    opts.jobs = 2;
    const auto all6 = explore_conjecture(corpus_upto(6), std::nullopt, std::nullopt, opts);
    CHECK(all6.violations.empty());
    CHECK(all6.checks[0].fail == 0);
    CHECK_FALSE(all6.tight.empty());
}

TEST_CASE("worker cap environment variable", "[verifier]")
{
    ::setenv("SQFSYM_MAX_JOBS", "2", 1);
    CHECK(effective_jobs(8) == 2);
    CHECK(effective_jobs(1) == 1);
    ::unsetenv("SQFSYM_MAX_JOBS");
    CHECK(effective_jobs(8) == 8);
    CHECK(effective_jobs(0) >= 1);
}

TEST_CASE("JSON report layout", "[verifier][json]")
{
    SuiteOptions opts;
    opts.corpus_label = "enumerate:3";
    opts.check.seed = 9;
    const auto j = to_json(run_suite(corpus_upto(3), {"chk-conj", "chk-del"}, opts));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"tool_version", "corpus", "seed", "checks", "wall_ms", "graphs"});
    CHECK(j["corpus"] == "enumerate:3");
    CHECK(j["seed"] == 9);
    CHECK(j["checks"][0]["check_id"] == "chk-conj");
    CHECK(j["checks"][0]["failures"].is_array());
    std::vector<std::string> ck;
    for (const auto& [k, v] : j["checks"][0].items())
        ck.push_back(k);
    CHECK(ck == std::vector<std::string>{"check_id", "pass", "fail", "skip", "failures"});

    const auto e = to_json(explore_conjecture({path_graph(4)}), true);
    CHECK(e.contains("tight"));
    CHECK(e.contains("violations"));
}
