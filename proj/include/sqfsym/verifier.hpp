#ifndef SQFSYM_VERIFIER_HPP
#define SQFSYM_VERIFIER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "ideal.hpp"
#include "invariants.hpp"

namespace sqfsym {

enum class CheckStatus
{
    pass,
    fail,
    skipped,
};

inline const char* status_name(CheckStatus s)
{
    switch (s)
    {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

/// Outcome of one instantiation of one check on one graph.
struct CheckResult
{
    std::string check_id;
    std::string graph_id;   // graph6 of the graph as supplied
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::skipped;
    std::string reason;     // set when skipped
    std::string lhs;
    std::string rhs;
    std::string witness;    // set when failed
    std::optional<std::pair<long, long>> values;   // integer comparisons only

    bool tight() const { return values && values->first == values->second; }

    std::string param(const std::string& key) const
    {
        for (const auto& [k, v] : params)
            if (k == key)
                return v;
        return {};
    }
};

struct CheckOptions
{
    /// Optional clamp on the s values a check instantiates.
    std::optional<int> s_min;
    std::optional<int> s_max;
    /// Seed for induced-subgraph sampling.
    std::uint64_t seed = 0;
    /// Induced subgraphs sampled per graph once the graph has more than 5 vertices.
    int mono_samples = 20;
    FieldSpec field;

    static CheckOptions only_s(int s)
    {
        CheckOptions o;
        o.s_min = s;
        o.s_max = s;
        return o;
    }
};

/**
 * Per-graph memo of invariants, ideals and regularities.  Values are pure
 * functions of the graph, so the cache never changes an answer.
 */
class GraphContext
{
    public:
        explicit GraphContext(Graph g, FieldSpec field = {})
            : graph_(std::move(g)), id_(to_graph6(graph_)), field_(field), inv_(classify(graph_))
        {
        }

        const Graph& graph() const { return graph_; }
        const std::string& id() const { return id_; }
        const InvariantReport& invariants() const { return inv_; }
        FieldSpec field() const { return field_; }
        int order() const { return graph_.order(); }
        bool has_edges() const { return graph_.edge_count() > 0; }

        const SqfIdeal& edge() { return symbolic(1); }

        /// I(G)^{s}; zero past the height.
        const SqfIdeal& symbolic(int s)
        {
            auto it = symbolic_.find(s);
            if (it == symbolic_.end())
                it = symbolic_.emplace(s, graph_symbolic(graph_, s)).first;
            return it->second;
        }

        /// I(G)^[s]
        const SqfIdeal& power(int s)
        {
            auto it = power_.find(s);
            if (it == power_.end())
                it = power_.emplace(s, sqf_power(graph_, s)).first;
            return it->second;
        }

        const BettiTable& betti_symbolic(int s)
        {
            auto it = betti_.find(s);
            if (it == betti_.end())
                it = betti_.emplace(s, betti_table(symbolic(s), field_)).first;
            return it->second;
        }

        int reg_symbolic(int s) { return betti_symbolic(s).reg_ideal(); }
        int reg_edge() { return reg_symbolic(1); }

        bool unmixed()
        {
            if (!unmixed_)
                unmixed_ = is_unmixed(edge());
            return *unmixed_;
        }

    private:
        Graph graph_;
        std::string id_;
        FieldSpec field_;
        InvariantReport inv_;
        std::map<int, SqfIdeal> symbolic_;
        std::map<int, SqfIdeal> power_;
        std::map<int, BettiTable> betti_;
        std::optional<bool> unmixed_;
};

namespace detail {

using Params = std::vector<std::pair<std::string, std::string>>;

inline CheckResult start(const std::string& id, const GraphContext& ctx, Params params)
{
    CheckResult r;
    r.check_id = id;
    r.graph_id = ctx.id();
    r.params = std::move(params);
    return r;
}

inline std::vector<CheckResult> skipped(const std::string& id, const GraphContext& ctx, const std::string& reason)
{
    CheckResult r = start(id, ctx, {});
    r.status = CheckStatus::skipped;
    r.reason = reason;
    return {r};
}

inline std::string edge_name(int i, int j)
{
    return "x" + std::to_string(i) + "x" + std::to_string(j);
}

/// Valid s in [lo, hi] intersected with the caller's clamp.
inline std::vector<int> s_values(int lo, int hi, const CheckOptions& o)
{
    if (o.s_min)
        lo = std::max(lo, *o.s_min);
    if (o.s_max)
        hi = std::min(hi, *o.s_max);
    std::vector<int> out;
    for (int s = lo; s <= hi; ++s)
        out.push_back(s);
    return out;
}

inline bool s_clamped(const CheckOptions& o) { return o.s_min.has_value() || o.s_max.has_value(); }

inline std::string s_skip_reason(const CheckOptions& o, const std::string& natural)
{
    return s_clamped(o) ? "requested s outside valid range" : natural;
}

inline void compare_equal(CheckResult& r, const SqfIdeal& lhs, const SqfIdeal& rhs)
{
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    if (lhs == rhs)
    {
        r.status = CheckStatus::pass;
        return;
    }
    r.status = CheckStatus::fail;
    for (VertexSet g : lhs.generators())
        if (!rhs.contains(g))
        {
            r.witness = "lhs generator " + monomial_string(g) + " not in rhs";
            return;
        }
    for (VertexSet g : rhs.generators())
        if (!lhs.contains(g))
        {
            r.witness = "rhs generator " + monomial_string(g) + " not in lhs";
            return;
        }
    r.witness = "generating sets differ";
}

inline void compare_contained(CheckResult& r, const SqfIdeal& small, const SqfIdeal& big)
{
    r.lhs = small.str();
    r.rhs = big.str();
    for (VertexSet g : small.generators())
        if (!big.contains(g))
        {
            r.status = CheckStatus::fail;
            r.witness = "generator " + monomial_string(g) + " not in rhs";
            return;
        }
    r.status = CheckStatus::pass;
}

enum class Relation
{
    le,
    ge,
    eq,
};

inline void compare_int(CheckResult& r, long lhs, long rhs, Relation rel)
{
    r.values = std::make_pair(lhs, rhs);
    r.lhs = std::to_string(lhs);
    r.rhs = std::to_string(rhs);
    bool ok = false;
    const char* op = "";
    switch (rel)
    {
        case Relation::le: ok = lhs <= rhs; op = "<="; break;
        case Relation::ge: ok = lhs >= rhs; op = ">="; break;
        case Relation::eq: ok = lhs == rhs; op = "=="; break;
    }
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok)
        r.witness = "expected " + r.lhs + " " + op + " " + r.rhs;
}

/// (J : m) with (0 : m) = 0.
inline SqfIdeal colon_or_zero(const SqfIdeal& j, VertexSet m)
{
    return j.is_zero() ? j : colon(j, m);
}

// ---------------------------------------------------------------- checks

inline std::vector<CheckResult> check_prop_zero(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-prop-zero";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const int h = ctx.invariants().height;
    std::vector<CheckResult> out;
    for (int s : s_values(1, h + 1, o))
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}, {"part", "nonzero-iff"}});
        const bool nonzero = !ctx.symbolic(s).is_zero();
        r.lhs = nonzero ? "nonzero" : "zero";
        r.rhs = (s <= h) ? "nonzero" : "zero";
        r.status = (nonzero == (s <= h)) ? CheckStatus::pass : CheckStatus::fail;
        if (r.status == CheckStatus::fail)
            r.witness = "I^{" + std::to_string(s) + "} = " + ctx.symbolic(s).str() + " with height " +
                        std::to_string(h);
        out.push_back(std::move(r));
    }
    const auto hs = s_values(h, h, o);
    if (!hs.empty() && ctx.unmixed())
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(h)}, {"part", "unmixed-principal"}});
        const auto& top = ctx.symbolic(h);
        compare_int(r, static_cast<long>(top.generators().size()), 1, Relation::eq);
        if (r.status == CheckStatus::fail)
            r.witness = "I^{" + std::to_string(h) + "} = " + top.str() + " is not principal";
        out.push_back(std::move(r));
    }
    if (out.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    return out;
}

inline std::vector<CheckResult> check_del(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-del";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, ctx.invariants().height, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    const int n = ctx.order();
    std::vector<CheckResult> out;
    for (int x = 0; x < n; ++x)
    {
        const SqfIdeal var = SqfIdeal::variables(n, VertexSet::singleton(x));
        const Graph rest = ctx.graph().isolate(VertexSet::singleton(x));
        for (int s : ss)
        {
            CheckResult r = start(id, ctx, {{"x", std::to_string(x)}, {"s", std::to_string(s)}});
            compare_equal(r, sum(ctx.symbolic(s), var), sum(graph_symbolic(rest, s), var));
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<VertexSet> mono_subsets(const GraphContext& ctx, const CheckOptions& o)
{
    const Graph& g = ctx.graph();
    std::vector<VertexSet> candidates;
    for_each_subset(g.vertices(), [&](VertexSet keep) {
        if (keep != g.vertices() && g.induced_on(keep).edge_count() > 0)
            candidates.push_back(keep);
    });
    if (g.order() <= 5 || static_cast<int>(candidates.size()) <= o.mono_samples)
        return candidates;
    std::uint64_t h = 1469598103934665603ULL;   // FNV-1a over the graph id
    for (char c : ctx.id())
        h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    std::mt19937_64 rng(o.seed ^ h);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(static_cast<std::size_t>(o.mono_samples));
    std::sort(candidates.begin(), candidates.end(), canonical_less);
    return candidates;
}

inline std::vector<CheckResult> check_betti_mono(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-betti-mono";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    std::vector<CheckResult> out;
    for (VertexSet keep : mono_subsets(ctx, o))
    {
        const Graph h = ctx.graph().induced_on(keep);
        const int hh = cover_height(h);
        for (int s : s_values(1, hh, o))
        {
            CheckResult r = start(id, ctx, {{"H", set_string(keep)}, {"s", std::to_string(s)}});
            const BettiTable small = betti_table(graph_symbolic(h, s), ctx.field());
            const BettiTable& big = ctx.betti_symbolic(s);
            r.status = CheckStatus::pass;
            for (const auto& [ij, v] : small.entries())
            {
                if (ij.first < 1)
                    continue;
                const long w = big.quotient(ij.first, ij.second);
                if (v > w)
                {
                    r.status = CheckStatus::fail;
                    r.witness = "beta_{" + std::to_string(ij.first - 1) + "," + std::to_string(ij.second) +
                                "}: " + std::to_string(v) + " > " + std::to_string(w);
                    break;
                }
            }
            r.lhs = "reg " + std::to_string(small.reg_ideal());
            r.rhs = "reg " + std::to_string(big.reg_ideal());
            out.push_back(std::move(r));
        }
    }
    if (out.empty())
        return skipped(id, ctx, s_clamped(o) ? "requested s outside valid range" : "no induced subgraph with edges");
    return out;
}

inline std::vector<CheckResult> check_lower(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-lower";
    const int t = ctx.invariants().ind_match;
    if (t == 0)
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, t, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds induced matching number"));
    std::vector<CheckResult> out;
    for (int s : ss)
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}});
        compare_int(r, ctx.reg_symbolic(s), s + t, Relation::ge);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> check_chordcolon(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-chordcolon";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, ctx.invariants().height, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    const Graph& g = ctx.graph();
    std::vector<CheckResult> out;
    for (int x : simplicial_vertices(g))
    {
        if (g.degree(x) == 0)
            continue;
        const VertexSet closed = g.closed_neighborhood(x);
        const int d = closed.size();
        const Graph rest = g.isolate(closed);
        for (int s : ss)
        {
            CheckResult r = start(id, ctx, {{"x", std::to_string(x)}, {"s", std::to_string(s)}});
            compare_equal(r, colon(ctx.symbolic(s), closed), graph_symbolic(rest, s - d + 1));
            out.push_back(std::move(r));
        }
    }
    if (out.empty())
        return skipped(id, ctx, "no simplicial vertex with neighbours");
    return out;
}

inline std::vector<CheckResult> check_chordal_bound(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-chordal-bound";
    if (!ctx.invariants().is_chordal)
        return skipped(id, ctx, "graph not chordal");
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, ctx.invariants().height, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    std::vector<CheckResult> out;
    for (int s : ss)
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}});
        compare_int(r, ctx.reg_symbolic(s), s + ctx.invariants().ord_match, Relation::le);
        out.push_back(std::move(r));
    }
    return out;
}

inline bool has_degree(const SqfIdeal& j, int degree)
{
    return std::any_of(j.generators().begin(), j.generators().end(),
                       [&](VertexSet g) { return g.size() == degree; });
}

inline std::vector<CheckResult> check_gen_degree(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-gen-degree";
    const auto& inv = ctx.invariants();
    const int t = inv.ind_match;
    if (t == 0)
        return skipped(id, ctx, "graph has no edges");
    std::vector<CheckResult> out;
    if (!s_values(t, t, o).empty())
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(t)}, {"part", "ind-match"}});
        const auto& j = ctx.symbolic(t);
        r.lhs = j.str();
        r.rhs = "degree " + std::to_string(2 * t);
        r.status = has_degree(j, 2 * t) ? CheckStatus::pass : CheckStatus::fail;
        if (r.status == CheckStatus::fail)
            r.witness = "no minimal generator of degree " + std::to_string(2 * t);
        out.push_back(std::move(r));
    }
    if (inv.is_cameron_walker)
    {
        for (int s : s_values(t, inv.height, o))
        {
            CheckResult r = start(id, ctx, {{"s", std::to_string(s)}, {"part", "cameron-walker"}});
            const auto& j = ctx.symbolic(s);
            r.lhs = j.str();
            r.rhs = "degree " + std::to_string(s + t);
            r.status = has_degree(j, s + t) ? CheckStatus::pass : CheckStatus::fail;
            if (r.status == CheckStatus::fail)
                r.witness = "no minimal generator of degree " + std::to_string(s + t);
            out.push_back(std::move(r));
        }
    }
    if (out.empty())
        return skipped(id, ctx, "requested s outside valid range");
    return out;
}

inline std::vector<CheckResult> check_cw_eq(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-cw-eq";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    if (!ctx.invariants().is_cameron_walker)
        return skipped(id, ctx, "graph not Cameron-Walker");
    const auto ss = s_values(1, ctx.invariants().height, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    std::vector<CheckResult> out;
    for (int s : ss)
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}});
        compare_int(r, ctx.reg_symbolic(s), s + ctx.invariants().ind_match, Relation::eq);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> check_bipartite_eq(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-bipartite-eq";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    if (!ctx.invariants().is_bipartite)
        return skipped(id, ctx, "graph not bipartite");
    const auto ss = s_values(1, ctx.invariants().match, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds matching number"));
    std::vector<CheckResult> out;
    for (int s : ss)
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}});
        compare_equal(r, ctx.symbolic(s), ctx.power(s));
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> check_intsec(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-intsec";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, ctx.invariants().height - 1, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    const Graph& g = ctx.graph();
    std::vector<CheckResult> out;
    for (const Edge& e : g.edges())
    {
        const Graph minus_j = g.isolate(VertexSet::singleton(e.v));
        const Graph minus_i = g.isolate(VertexSet::singleton(e.u));
        for (int s : ss)
        {
            CheckResult r = start(id, ctx, {{"edge", edge_name(e.u, e.v)}, {"s", std::to_string(s)}});
            const SqfIdeal lhs = colon(ctx.symbolic(s + 1), e.ends());
            const SqfIdeal rhs = intersect(colon_or_zero(graph_symbolic(minus_j, s), VertexSet::singleton(e.u)),
                                           colon_or_zero(graph_symbolic(minus_i, s), VertexSet::singleton(e.v)));
            compare_equal(r, lhs, rhs);
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// The explicit generating set of (I(G)^{2} : x_i x_j).
inline SqfIdeal second_colon_description(const Graph& g, int i, int j)
{
    const int n = g.order();
    std::vector<SqfMonomial> gens = edge_ideal(g.isolate(VertexSet{i, j})).generators();
    const VertexSet ni = g.neighbors(i) - VertexSet::singleton(j);
    const VertexSet nj = g.neighbors(j) - VertexSet::singleton(i);
    for (int p : ni)
        for (int q : nj)
            if (p != q)
                gens.push_back(VertexSet{p, q});
    for (int t : g.neighbors(i) & g.neighbors(j))
        gens.push_back(VertexSet::singleton(t));
    return SqfIdeal::minimalize(n, std::move(gens));
}

inline std::vector<CheckResult> check_seccoldesc(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-seccoldesc";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    std::vector<CheckResult> out;
    for (const Edge& e : ctx.graph().edges())
    {
        CheckResult r = start(id, ctx, {{"edge", edge_name(e.u, e.v)}});
        compare_equal(r, colon_or_zero(ctx.symbolic(2), e.ends()), second_colon_description(ctx.graph(), e.u, e.v));
        out.push_back(std::move(r));
    }
    return out;
}

/**
 * (I^(2) : x_i x_j) + (x_i, x_j) rebuilt from the membership oracle over
 * squarefree u only.  This relies on (I(G)^(2) : x_i x_j) being generated
 * by squarefree monomials, which is a known property of edge ideals; a
 * non-squarefree generator would not be seen here.
 */
inline SqfIdeal symbolic_colon_plus_edge(const GraphContext& ctx, const SqfIdeal& edge_ideal_, int i, int j)
{
    const int n = ctx.order();
    std::vector<SqfMonomial> gens{VertexSet::singleton(i), VertexSet::singleton(j)};
    for_each_subset(ctx.graph().vertices() - VertexSet{i, j}, [&](VertexSet u) {
        Monomial m = Monomial::from_support(n, u);
        m.exponents[i] += 1;
        m.exponents[j] += 1;
        if (symbolic_member(m, edge_ideal_, 2))
            gens.push_back(u);
    });
    return SqfIdeal::minimalize(n, std::move(gens));
}

inline std::vector<CheckResult> check_symor(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-symor";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    std::vector<CheckResult> out;
    for (const Edge& e : ctx.graph().edges())
    {
        CheckResult r = start(id, ctx, {{"edge", edge_name(e.u, e.v)}});
        const SqfIdeal ends = SqfIdeal::variables(ctx.order(), e.ends());
        const SqfIdeal lhs = symbolic_colon_plus_edge(ctx, ctx.edge(), e.u, e.v);
        const SqfIdeal rhs = sum(colon_or_zero(ctx.symbolic(2), e.ends()), ends);
        compare_equal(r, lhs, rhs);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> check_colsy(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-colsy";
    if (ctx.invariants().match < 2)
        return skipped(id, ctx, "matching number below 2");
    if (ctx.invariants().height < 2)
        return skipped(id, ctx, "s exceeds height");
    const auto edges = ctx.graph().edges();
    std::vector<CheckResult> out;
    for (const Edge& e1 : edges)
    {
        const SqfIdeal first = colon(ctx.symbolic(2), e1.ends());
        const SqfIdeal first_sq = sqf_symbolic(first, 2);
        for (const Edge& e2 : edges)
        {
            if (e1.ends().intersects(e2.ends()))
                continue;
            CheckResult r = start(id, ctx, {{"e1", edge_name(e1.u, e1.v)}, {"e2", edge_name(e2.u, e2.v)}});
            const SqfIdeal lhs = colon_or_zero(ctx.symbolic(3), e1.ends() | e2.ends());
            const SqfIdeal rhs = colon_or_zero(first_sq, e2.ends());
            compare_equal(r, lhs, rhs);
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<CheckResult> check_ttsym(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-ttsym";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    if (ctx.invariants().height < 3)
        return skipped(id, ctx, "s exceeds height");
    CheckResult r = start(id, ctx, {{"s", "3"}});
    compare_contained(r, ctx.symbolic(3), ctx.power(2));
    return {r};
}

inline std::vector<CheckResult> check_sym2(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-sym2";
    if (ctx.invariants().height < 2)
        return skipped(id, ctx, "s exceeds height");
    CheckResult r = start(id, ctx, {{"s", "2"}});
    const long bound = std::min(ctx.reg_edge() + 2, ctx.invariants().match + 2);
    compare_int(r, ctx.reg_symbolic(2), bound, Relation::le);
    return {r};
}

inline std::vector<CheckResult> check_po3(GraphContext& ctx, const CheckOptions&)
{
    const std::string id = "chk-po3";
    if (ctx.invariants().height < 3)
        return skipped(id, ctx, "s exceeds height");
    CheckResult r = start(id, ctx, {{"s", "3"}});
    const long bound = std::min(ctx.order() / 2 + 3, ctx.reg_edge() + 4);
    compare_int(r, ctx.reg_symbolic(3), bound, Relation::le);
    return {r};
}

inline std::vector<CheckResult> check_conj(GraphContext& ctx, const CheckOptions& o)
{
    const std::string id = "chk-conj";
    if (!ctx.has_edges())
        return skipped(id, ctx, "graph has no edges");
    const auto ss = s_values(1, ctx.invariants().height, o);
    if (ss.empty())
        return skipped(id, ctx, s_skip_reason(o, "s exceeds height"));
    std::vector<CheckResult> out;
    for (int s : ss)
    {
        CheckResult r = start(id, ctx, {{"s", std::to_string(s)}});
        compare_int(r, ctx.reg_symbolic(s), ctx.invariants().match + s, Relation::le);
        out.push_back(std::move(r));
    }
    return out;
}

using CheckFn = std::vector<CheckResult> (*)(GraphContext&, const CheckOptions&);

inline const std::vector<std::pair<std::string, CheckFn>>& catalog()
{
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"chk-prop-zero", check_prop_zero},
        {"chk-del", check_del},
        {"chk-betti-mono", check_betti_mono},
        {"chk-lower", check_lower},
        {"chk-chordcolon", check_chordcolon},
        {"chk-chordal-bound", check_chordal_bound},
        {"chk-gen-degree", check_gen_degree},
        {"chk-cw-eq", check_cw_eq},
        {"chk-bipartite-eq", check_bipartite_eq},
        {"chk-intsec", check_intsec},
        {"chk-seccoldesc", check_seccoldesc},
        {"chk-symor", check_symor},
        {"chk-colsy", check_colsy},
        {"chk-ttsym", check_ttsym},
        {"chk-sym2", check_sym2},
        {"chk-po3", check_po3},
        {"chk-conj", check_conj},
    };
    return table;
}

inline CheckFn find_check(const std::string& id)
{
    for (const auto& [name, fn] : catalog())
        if (name == id)
            return fn;
    throw ParameterError("unknown check id '" + id + "'");
}

}   // namespace detail

/// All check ids in catalog order.
inline std::vector<std::string> check_ids()
{
    std::vector<std::string> ids;
    for (const auto& entry : detail::catalog())
        ids.push_back(entry.first);
    return ids;
}

inline std::vector<CheckResult> run_check(const std::string& check_id, GraphContext& ctx,
                                          const CheckOptions& options = {})
{
    return detail::find_check(check_id)(ctx, options);
}

inline std::vector<CheckResult> run_check(const std::string& check_id, const Graph& g,
                                          const CheckOptions& options = {})
{
    GraphContext ctx(g, options.field);
    return run_check(check_id, ctx, options);
}

// --------------------------------------------------------------------------
// Suites
// --------------------------------------------------------------------------

struct CheckTally
{
    std::string check_id;
    long pass = 0;
    long fail = 0;
    long skip = 0;
    std::vector<CheckResult> failures;
};

struct Report
{
    std::string tool_version;
    std::string corpus;
    std::uint64_t seed = 0;
    long graphs = 0;
    std::vector<CheckTally> checks;
    long long wall_ms = 0;
    /// Populated by explore_conjecture only.
    std::vector<CheckResult> tight;
    std::vector<CheckResult> violations;

    long total_failures() const
    {
        long f = 0;
        for (const auto& c : checks)
            f += c.fail;
        return f;
    }
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Worker count: requested (0 = hardware), capped by SQFSYM_MAX_JOBS when set.
inline unsigned effective_jobs(unsigned requested)
{
    unsigned jobs = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
    if (const char* cap = std::getenv("SQFSYM_MAX_JOBS"))
    {
        const long c = std::strtol(cap, nullptr, 10);
        if (c >= 1)
            jobs = std::min(jobs, static_cast<unsigned>(c));
    }
    return jobs;
}

struct SuiteOptions
{
    CheckOptions check;
    unsigned jobs = 1;
    std::string corpus_label;
};

namespace detail {

/// Evaluates fn on every corpus graph; results come back in corpus order.
template <typename R>
std::vector<R> map_corpus(const std::vector<Graph>& corpus, unsigned jobs, const std::function<R(const Graph&)>& fn)
{
    std::vector<R> results(corpus.size());
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1))));
    if (jobs == 1)
    {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            results[i] = fn(corpus[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
    {
        pool.emplace_back([&, w] {
            try
            {
                for (std::size_t i = next++; i < corpus.size(); i = next++)
                    results[i] = fn(corpus[i]);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
                next = corpus.size();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

inline bool failure_order(const CheckResult& a, const CheckResult& b)
{
    if (a.graph_id != b.graph_id)
        return a.graph_id < b.graph_id;
    return a.params < b.params;
}

}   // namespace detail

/**
 * Runs the named checks over every corpus graph.  Totals and the sorted
 * failure lists are independent of the worker count.
 */
inline Report run_suite(const std::vector<Graph>& corpus, const std::vector<std::string>& ids,
                        const SuiteOptions& options = {})
{
    for (const auto& id : ids)
        detail::find_check(id);
    const auto started = std::chrono::steady_clock::now();
    using PerGraph = std::vector<std::vector<CheckResult>>;
    const std::function<PerGraph(const Graph&)> evaluate = [&](const Graph& g) {
        GraphContext ctx(g, options.check.field);
        PerGraph per;
        for (const auto& id : ids)
            per.push_back(run_check(id, ctx, options.check));
        return per;
    };
    const auto all = detail::map_corpus<PerGraph>(corpus, options.jobs, evaluate);

    Report report;
    report.tool_version = kToolVersion;
    report.corpus = options.corpus_label;
    report.seed = options.check.seed;
    report.graphs = static_cast<long>(corpus.size());
    for (std::size_t c = 0; c < ids.size(); ++c)
    {
        CheckTally tally;
        tally.check_id = ids[c];
        for (const auto& per : all)
        {
            for (const auto& r : per[c])
            {
                switch (r.status)
                {
                    case CheckStatus::pass: ++tally.pass; break;
                    case CheckStatus::skipped: ++tally.skip; break;
                    case CheckStatus::fail:
                        ++tally.fail;
                        tally.failures.push_back(r);
                        break;
                }
            }
        }
        std::stable_sort(tally.failures.begin(), tally.failures.end(), detail::failure_order);
        report.checks.push_back(std::move(tally));
    }
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

/**
 * Evaluates reg(I(G)^{s}) <= match(G) + s across the corpus and lists the
 * tight instances and any violations.  Reports only; a violation is data.
 */
inline Report explore_conjecture(const std::vector<Graph>& corpus, std::optional<int> s_min = std::nullopt,
                                 std::optional<int> s_max = std::nullopt, const SuiteOptions& options = {})
{
    SuiteOptions opts = options;
    opts.check.s_min = s_min;
    opts.check.s_max = s_max;
    const auto started = std::chrono::steady_clock::now();
    const std::function<std::vector<CheckResult>(const Graph&)> evaluate = [&](const Graph& g) {
        return run_check("chk-conj", g, opts.check);
    };
    const auto all = detail::map_corpus<std::vector<CheckResult>>(corpus, opts.jobs, evaluate);

    Report report;
    report.tool_version = kToolVersion;
    report.corpus = opts.corpus_label;
    report.seed = opts.check.seed;
    report.graphs = static_cast<long>(corpus.size());
    CheckTally tally;
    tally.check_id = "chk-conj";
    for (const auto& per : all)
    {
        for (const auto& r : per)
        {
            if (r.status == CheckStatus::skipped)
                ++tally.skip;
            else if (r.status == CheckStatus::pass)
                ++tally.pass;
            else
            {
                ++tally.fail;
                tally.failures.push_back(r);
                report.violations.push_back(r);
            }
            if (r.status != CheckStatus::skipped && r.tight())
                report.tight.push_back(r);
        }
    }
    std::stable_sort(tally.failures.begin(), tally.failures.end(), detail::failure_order);
    std::stable_sort(report.violations.begin(), report.violations.end(), detail::failure_order);
    std::stable_sort(report.tight.begin(), report.tight.end(), detail::failure_order);
    report.checks.push_back(std::move(tally));
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}   // namespace sqfsym

#endif
