#ifndef SQFSYM_TOOLS_CLI_HPP
#define SQFSYM_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sqfsym/report_json.hpp>
#include <sqfsym/sqfsym.hpp>

namespace sqfsym::cli {

enum ExitCode
{
    kOk = 0,
    kCheckFailure = 1,
    kUsage = 2,
    kCapability = 3,
};

/// "x0x3x4" -> {0,3,4}; "1" -> {}.
inline VertexSet parse_monomial(std::string_view text, int n)
{
    text = detail::trim(text);
    if (text == "1")
        return {};
    VertexSet m;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        if (text[pos] != 'x')
            throw ParseError("expected 'x' in monomial '" + std::string(text) + "'", pos);
        std::size_t end = pos + 1;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9')
            ++end;
        int v = 0;
        if (!detail::parse_int(text.substr(pos + 1, end - pos - 1), v) || v < 0 || v >= n)
            throw ParseError("bad variable index in monomial '" + std::string(text) + "'", pos);
        m.insert(v);
        pos = end;
    }
    return m;
}

/// "ideal:N:x0x1,x1x2" -> the ideal those generators span in N variables.
inline SqfIdeal parse_ideal_arg(const std::string& arg)
{
    const std::string body = arg.substr(std::string("ideal:").size());
    const auto colon = body.find(':');
    int n = 0;
    if (colon == std::string::npos || !detail::parse_int(body.substr(0, colon), n))
        throw ParseError("ideal argument must look like ideal:N:x0x1,x1x2", 0);
    std::vector<SqfMonomial> gens;
    std::string_view rest = std::string_view(body).substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size())
    {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string_view::npos)
            comma = rest.size();
        if (comma > pos)
            gens.push_back(parse_monomial(rest.substr(pos, comma - pos), n));
        pos = comma + 1;
    }
    return SqfIdeal::minimalize(n, std::move(gens));
}

inline SqfIdeal ideal_of_kind(const Graph& g, const std::string& kind, int s)
{
    if (kind == "edge")
        return edge_ideal(g);
    if (kind == "sqf-power")
        return sqf_power(g, s);
    if (kind == "sqf-symbolic")
        return graph_symbolic(g, s);
    throw ParameterError("unknown ideal kind '" + kind + "'");
}

inline FieldSpec parse_field(const std::string& f)
{
    if (f == "Q" || f == "0")
        return FieldSpec::rationals();
    int p = 0;
    if (!detail::parse_int(f, p) || p < 2)
        throw ParameterError("field must be Q or a prime, got '" + f + "'");
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

inline void write_json(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-")
    {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw ParameterError("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

inline void print_summary(const Report& r, std::ostream& out)
{
    out << "corpus " << r.corpus << ": " << r.graphs << " graphs, " << r.wall_ms << " ms\n";
    for (const auto& c : r.checks)
    {
        out << "  " << c.check_id << "  pass " << c.pass << "  fail " << c.fail << "  skip " << c.skip << "\n";
        for (const auto& f : c.failures)
        {
            out << "    FAIL " << f.graph_id;
            for (const auto& [k, v] : f.params)
                out << " " << k << "=" << v;
            out << ": " << f.witness << "\n";
        }
    }
}

inline std::vector<std::string> split_ids(const std::string& text)
{
    if (text == "all")
        return check_ids();
    std::vector<std::string> ids;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        if (comma > pos)
            ids.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return ids;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Squarefree symbolic powers of edge ideals: invariants, ideals, Betti tables, checks"};
    app.require_subcommand(1);

    std::string graph_arg;
    std::string kind = "edge";
    int s = 1;
    std::string field = "Q";
    bool json = false;

    auto* inv = app.add_subcommand("invariants", "Print graph invariants");
    inv->add_option("graph", graph_arg, "g6:<code>, path:4, cycle:5, complete:4, kbip:3,5, star:3, startri:2, or a file")
        ->required();
    inv->add_flag("--json", json, "Emit JSON");

    auto* idl = app.add_subcommand("ideal", "Print minimal generators of an ideal built from a graph");
    idl->add_option("graph", graph_arg, "Graph argument")->required();
    idl->add_option("--kind", kind, "edge | sqf-power | sqf-symbolic")
        ->check(CLI::IsMember({"edge", "sqf-power", "sqf-symbolic"}));
    idl->add_option("-s", s, "Power");
    idl->add_flag("--json", json, "Emit JSON");

    auto* bet = app.add_subcommand("betti", "Print the Betti table and regularity");
    bet->add_option("target", graph_arg, "Graph argument or ideal:N:x0x1,x1x2")->required();
    bet->add_option("--kind", kind, "edge | sqf-power | sqf-symbolic")
        ->check(CLI::IsMember({"edge", "sqf-power", "sqf-symbolic"}));
    bet->add_option("-s", s, "Power");
    bet->add_option("--field", field, "Q or a prime p");
    bet->add_flag("--json", json, "Emit JSON");

    std::string checks = "all";
    std::string corpus;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    auto* ver = app.add_subcommand("verify", "Run catalog checks over a corpus");
    ver->add_option("--checks", checks, "Comma-separated check ids or 'all'");
    ver->add_option("--corpus", corpus, "enumerate:N[..M], graph6:PATH, edges:PATH or a graph argument, "
                                        "with optional +connected +chordal +bipartite +cameron_walker +height>=K")
        ->required();
    ver->add_option("--jobs", jobs, "Worker threads (0 = hardware); capped by SQFSYM_MAX_JOBS");
    ver->add_option("--seed", seed, "Seed for induced-subgraph sampling");
    ver->add_option("--out", out_path, "Write the JSON report here ('-' for stdout)");
    ver->add_option("--field", field, "Q or a prime p");

    int max_n = 5;
    std::optional<int> s_min, s_max;
    auto* exp = app.add_subcommand("explore", "Report tight instances and violations of reg <= match + s");
    exp->add_option("--max-n", max_n, "Enumerate all graphs on 1..N vertices (N <= 6)");
    exp->add_option("--corpus", corpus, "Corpus instead of --max-n");
    exp->add_option("--s-min", s_min, "Smallest s");
    exp->add_option("--s-max", s_max, "Largest s");
    exp->add_option("--jobs", jobs, "Worker threads (0 = hardware)");
    exp->add_option("--out", out_path, "Write the JSON report here ('-' for stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try
    {
        if (app.got_subcommand(inv))
        {
            const Graph g = parse_graph_arg(graph_arg);
            const InvariantReport r = classify(g);
            Json j;
            j["graph6"] = to_graph6(g);
            j["n"] = g.order();
            j["edges"] = g.edge_count();
            j["match"] = r.match;
            j["ind_match"] = r.ind_match;
            j["ord_match"] = r.ord_match;
            j["height"] = r.height;
            j["is_bipartite"] = r.is_bipartite;
            j["is_chordal"] = r.is_chordal;
            j["is_cameron_walker"] = r.is_cameron_walker;
            j["is_connected"] = r.is_connected;
            if (json)
                out << j.dump(2) << "\n";
            else
                for (const auto& [k, v] : j.items())
                    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            return kOk;
        }
        if (app.got_subcommand(idl))
        {
            const Graph g = parse_graph_arg(graph_arg);
            const SqfIdeal j = ideal_of_kind(g, kind, s);
            if (json)
            {
                Json o;
                o["n"] = j.ambient();
                Json gens = Json::array();
                for (VertexSet m : j.generators())
                    gens.push_back(monomial_string(m));
                o["generators"] = gens;
                out << o.dump(2) << "\n";
            }
            else
            {
                out << j.str() << "\n";
                const auto d = generator_degrees(j);
                out << "generators: " << j.generators().size();
                if (!j.generators().empty())
                    out << ", degrees " << d.min_degree << ".." << d.max_degree;
                out << "\n";
            }
            return kOk;
        }
        if (app.got_subcommand(bet))
        {
            const SqfIdeal j = graph_arg.rfind("ideal:", 0) == 0 ? parse_ideal_arg(graph_arg)
                                                                   : ideal_of_kind(parse_graph_arg(graph_arg), kind, s);
            const FieldSpec k = parse_field(field);
            const BettiTable t = betti_table(j, k);
            if (json)
            {
                Json o;
                o["field"] = k.name();
                Json entries = Json::array();
                for (const auto& [ij, v] : t.entries())
                    if (ij.first >= 1)
                        entries.push_back({{"i", ij.first - 1}, {"j", ij.second}, {"beta", v}});
                o["ideal_betti"] = entries;
                o["regularity"] = t.reg_ideal();
                out << o.dump(2) << "\n";
            }
            else
            {
                out << "ideal " << j.str() << " over " << k.name() << "\n";
                out << "Betti table of S/J:\n" << t.render();
                out << "regularity: " << t.reg_ideal() << "\n";
            }
            return kOk;
        }
        if (app.got_subcommand(ver))
        {
            const CorpusSpec spec = CorpusSpec::parse(corpus);
            SuiteOptions opts;
            opts.jobs = effective_jobs(jobs);
            opts.check.seed = seed;
            opts.check.field = parse_field(field);
            opts.corpus_label = corpus;
            const Report r = run_suite(spec.load(), split_ids(checks), opts);
            print_summary(r, out_path == "-" ? err : out);
            if (!out_path.empty())
                write_json(to_json(r), out_path, out);
            return r.total_failures() == 0 ? kOk : kCheckFailure;
        }
        if (app.got_subcommand(exp))
        {
            const std::string label = corpus.empty() ? "enumerate:" + std::to_string(max_n) : corpus;
            const CorpusSpec spec = CorpusSpec::parse(label);
            SuiteOptions opts;
            opts.jobs = effective_jobs(jobs);
            opts.corpus_label = label;
            const Report r = explore_conjecture(spec.load(), s_min, s_max, opts);
            std::ostream& summary = out_path == "-" ? err : out;
            print_summary(r, summary);
            summary << "tight instances: " << r.tight.size() << ", violations: " << r.violations.size() << "\n";
            if (!out_path.empty())
                write_json(to_json(r, true), out_path, out);
            return r.violations.empty() ? kOk : kCheckFailure;
        }
    }
    catch (const CapabilityError& e)
    {
        err << "capability error: " << e.what() << "\n";
        return kCapability;
    }
    catch (const ParseError& e)
    {
        err << "parse error at " << e.position() << ": " << e.what() << "\n";
        return kUsage;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}   // namespace sqfsym::cli

#endif
