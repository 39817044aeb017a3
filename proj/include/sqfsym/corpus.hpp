#ifndef SQFSYM_CORPUS_HPP
#define SQFSYM_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "invariants.hpp"

namespace sqfsym {

/**
 * A graph corpus: where the graphs come from plus conjunctive filters.
 *
 * Text form: SOURCE[+FILTER...] with SOURCE one of
 *   enumerate:N        every isomorphism class on 1..N vertices
 *   enumerate:A..B     every isomorphism class on A..B vertices
 *   graph6:PATH        every line of a graph6 file
 *   edges:PATH         a single edge-list file
 *   any graph argument accepted by parse_graph_arg
 * and FILTER one of connected, chordal, bipartite, cameron_walker, height>=K.
 */
struct CorpusSpec
{
    enum class Source
    {
        enumerate,
        graph6_file,
        edge_list_file,
        named,
    };

    struct Filter
    {
        std::string name;
        int bound = 0;   // height>=K only

        bool accepts(const Graph& g) const
        {
            if (name == "connected")
                return is_connected(g);
            if (name == "chordal")
                return is_chordal(g);
            if (name == "bipartite")
                return is_bipartite(g);
            if (name == "cameron_walker")
                return matching_number(g) == induced_matching_number(g);
            return cover_height(g) >= bound;
        }
    };

    Source source = Source::enumerate;
    int min_order = 1;
    int max_order = 1;
    std::string argument;
    std::vector<Filter> filters;
    std::string text;

    static Filter parse_filter(const std::string& f)
    {
        static const char* plain[] = {"connected", "chordal", "bipartite", "cameron_walker"};
        for (const char* p : plain)
            if (f == p)
                return {f, 0};
        const std::string prefix = "height>=";
        if (f.rfind(prefix, 0) == 0)
        {
            int k = 0;
            if (detail::parse_int(f.substr(prefix.size()), k))
                return {"height", k};
        }
        throw ParameterError("unknown corpus filter '" + f + "'");
    }

    static CorpusSpec parse(const std::string& spec)
    {
        CorpusSpec c;
        c.text = spec;
        std::string head = spec;
        if (auto plus = spec.find('+'); plus != std::string::npos)
        {
            head = spec.substr(0, plus);
            std::size_t pos = plus + 1;
            while (pos <= spec.size())
            {
                std::size_t next = spec.find('+', pos);
                if (next == std::string::npos)
                    next = spec.size();
                c.filters.push_back(parse_filter(spec.substr(pos, next - pos)));
                pos = next + 1;
            }
        }
        const auto colon = head.find(':');
        const std::string key = colon == std::string::npos ? "" : head.substr(0, colon);
        const std::string rest = colon == std::string::npos ? head : head.substr(colon + 1);
        if (key == "enumerate")
        {
            c.source = Source::enumerate;
            int lo = 1, hi = 0;
            if (auto dots = rest.find(".."); dots != std::string::npos)
            {
                if (!detail::parse_int(rest.substr(0, dots), lo) || !detail::parse_int(rest.substr(dots + 2), hi))
                    throw ParameterError("bad enumeration range '" + rest + "'");
            }
            else if (!detail::parse_int(rest, hi))
                throw ParameterError("bad enumeration order '" + rest + "'");
            if (lo < 1 || hi < lo)
                throw ParameterError("empty enumeration range '" + rest + "'");
            detail::check_enumeration_order(hi);
            c.min_order = lo;
            c.max_order = hi;
        }
        else if (key == "graph6")
        {
            c.source = Source::graph6_file;
            c.argument = rest;
        }
        else if (key == "edges")
        {
            c.source = Source::edge_list_file;
            c.argument = rest;
        }
        else
        {
            c.source = Source::named;
            c.argument = head;
        }
        return c;
    }

    bool accepts(const Graph& g) const
    {
        for (const auto& f : filters)
            if (!f.accepts(g))
                return false;
        return true;
    }

    /// Materializes the corpus in a fixed order.
    std::vector<Graph> load() const
    {
        std::vector<Graph> raw;
        switch (source)
        {
            case Source::enumerate:
                for (int n = min_order; n <= max_order; ++n)
                    for (auto& g : enumerate_graphs(n))
                        raw.push_back(std::move(g));
                break;
            case Source::graph6_file: raw = read_graph6_file(argument); break;
            case Source::edge_list_file: raw.push_back(parse_edge_list(detail::read_file(argument))); break;
            case Source::named: raw.push_back(parse_graph_arg(argument)); break;
        }
        std::vector<Graph> out;
        for (auto& g : raw)
            if (accepts(g))
                out.push_back(std::move(g));
        return out;
    }
};

}   // namespace sqfsym

#endif
