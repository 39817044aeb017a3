#ifndef SQFSYM_GRAPH_IO_HPP
#define SQFSYM_GRAPH_IO_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sqfsym {

// --------------------------------------------------------------------------
// graph6
// --------------------------------------------------------------------------

/// Largest order representable in the single-byte graph6 size form.
inline constexpr int kMaxGraph6Order = 62;

/**
 * Encodes g as graph6: one size byte n + 63, then the upper triangle in
 * column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into
 * 6-bit groups, high bit first, zero padded, each group + 63.
 */
inline std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxGraph6Order)
        throw CapabilityError("graph6 output supports at most " + std::to_string(kMaxGraph6Order) + " vertices");
    std::string out(1, static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
    {
        for (int i = 0; i < j; ++i)
        {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6)
            {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view line)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t offset = 0;
    if (line.substr(0, header.size()) == header)
        offset = header.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);

    if (offset >= line.size())
        throw ParseError("graph6: missing size byte at offset " + std::to_string(offset), offset);
    const auto byte_at = [&](std::size_t pos) {
        const int b = static_cast<unsigned char>(line[pos]);
        if (b < 63 || b > 126)
            throw ParseError("graph6: byte " + std::to_string(b) + " out of range 63..126 at offset " +
                                 std::to_string(pos),
                             pos);
        return b - 63;
    };
    const int n = byte_at(offset);
    if (n == 63)
        throw ParseError("graph6: multi-byte size form (more than " + std::to_string(kMaxGraph6Order) +
                             " vertices) is not supported, offset " + std::to_string(offset),
                         offset);
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t groups = (bits + 5) / 6;
    const std::size_t body = offset + 1;
    if (line.size() < body + groups)
        throw ParseError("graph6: truncated adjacency data, expected " + std::to_string(groups) +
                             " byte(s) after offset " + std::to_string(offset),
                         line.size());
    if (line.size() > body + groups)
        throw ParseError("graph6: trailing data at offset " + std::to_string(body + groups), body + groups);

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
    {
        for (int i = 0; i < j; ++i, ++k)
        {
            const int group = byte_at(body + k / 6);
            if ((group >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0)
    {
        const std::size_t last = body + groups - 1;
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (byte_at(last) & pad_mask)
            throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(last), last);
    }
    return g;
}

// --------------------------------------------------------------------------
// Edge lists
// --------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size())
    {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_int(std::string_view s, int& value)
{
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}   // namespace detail

/**
 * Edge-list text: a header line "n <count>", then one "i j" per line.
 * '#' starts a comment.  Errors carry the 1-based line number.
 */
inline Graph parse_edge_list(std::string_view text)
{
    std::optional<Graph> g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto w = detail::words(line);
        auto fail = [&](const std::string& what) -> ParseError {
            return ParseError("edge list line " + std::to_string(line_no) + ": " + what, line_no);
        };
        if (!g)
        {
            int n = 0;
            if (w.size() != 2 || w[0] != "n" || !detail::parse_int(w[1], n))
                throw fail("expected header 'n <count>'");
            if (n < 0 || n > kMaxVertices)
                throw fail("vertex count " + std::string(w[1]) + " outside 0.." + std::to_string(kMaxVertices));
            g.emplace(n);
            continue;
        }
        int a = 0, b = 0;
        if (w.size() != 2 || !detail::parse_int(w[0], a) || !detail::parse_int(w[1], b))
            throw fail("expected 'i j'");
        if (a == b)
            throw fail("self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= g->order() || b >= g->order())
            throw fail("vertex out of range 0.." + std::to_string(g->order() - 1));
        if (g->has_edge(a, b))
            throw fail("duplicate edge " + std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)));
        g->add_edge(a, b);
    }
    if (!g)
        throw ParseError("edge list: missing header 'n <count>'", line_no);
    return *g;
}

inline std::string to_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// --------------------------------------------------------------------------
// Canonical forms and exhaustive enumeration
// --------------------------------------------------------------------------

/// Largest order the exhaustive enumerator accepts.
inline constexpr int kMaxEnumerationOrder = 6;

namespace detail {

// Pair (i, j), i < j, at graph6 position k = j(j-1)/2 + i; the first pair is the
// most significant bit so numeric order equals bit-string order.
inline int pair_position(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

class PermutationTable
{
    public:
        explicit PermutationTable(int n) : n_(n), pairs_(n * (n - 1) / 2)
        {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do
            {
                std::vector<int> image(static_cast<std::size_t>(pairs_));
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        image[pair_position(i, j)] = pair_position(perm[i], perm[j]);
                images_.push_back(std::move(image));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        int pairs() const { return pairs_; }

        std::uint32_t bit(int position) const { return std::uint32_t{1} << (pairs_ - 1 - position); }

        std::uint32_t apply(std::size_t p, std::uint32_t mask) const
        {
            std::uint32_t out = 0;
            for (int k = 0; k < pairs_; ++k)
                if (mask & bit(k))
                    out |= bit(images_[p][k]);
            return out;
        }

        /// True if no relabeling produces a smaller mask.
        bool is_canonical(std::uint32_t mask) const
        {
            for (std::size_t p = 0; p < images_.size(); ++p)
                if (apply(p, mask) < mask)
                    return false;
            return true;
        }

        std::uint32_t canonical(std::uint32_t mask) const
        {
            std::uint32_t best = mask;
            for (std::size_t p = 0; p < images_.size(); ++p)
                best = std::min(best, apply(p, mask));
            return best;
        }

        std::uint32_t mask_of(const Graph& g) const
        {
            std::uint32_t mask = 0;
            for (const Edge& e : g.edges())
                mask |= bit(pair_position(e.u, e.v));
            return mask;
        }

        Graph graph_of(std::uint32_t mask) const
        {
            Graph g(n_);
            for (int j = 1; j < n_; ++j)
                for (int i = 0; i < j; ++i)
                    if (mask & bit(pair_position(i, j)))
                        g.add_edge(i, j);
            return g;
        }

    private:
        int n_;
        int pairs_;
        std::vector<std::vector<int>> images_;
};

inline void check_enumeration_order(int n)
{
    if (n < 0)
        throw ParameterError("vertex count must be nonnegative");
    if (n > kMaxEnumerationOrder)
        throw CapabilityError("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationOrder) +
                              " vertices; supply larger corpora as a graph6 file");
}

}   // namespace detail

/// Isomorphism-class representative with the minimal adjacency bit string.
inline Graph canonical_form(const Graph& g)
{
    detail::check_enumeration_order(g.order());
    const detail::PermutationTable table(g.order());
    return table.graph_of(table.canonical(table.mask_of(g)));
}

/// One graph per isomorphism class on exactly n vertices, in increasing canonical order.
inline std::vector<Graph> enumerate_graphs(int n)
{
    detail::check_enumeration_order(n);
    if (n < 1)
        throw ParameterError("enumeration needs at least 1 vertex");
    const detail::PermutationTable table(n);
    std::vector<Graph> out;
    const std::uint32_t limit = std::uint32_t{1} << table.pairs();
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (table.is_canonical(mask))
            out.push_back(table.graph_of(mask));
    return out;
}

// --------------------------------------------------------------------------
// Graph arguments
// --------------------------------------------------------------------------

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool looks_like_edge_list(std::string_view text)
{
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            return line.size() >= 2 && line[0] == 'n' && (line[1] == ' ' || line[1] == '\t');
    }
    return false;
}

inline std::vector<int> parse_int_list(std::string_view s, const std::string& context)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size())
    {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos)
            comma = s.size();
        int v = 0;
        if (!parse_int(trim(s.substr(pos, comma - pos)), v))
            throw ParseError("bad integer list in '" + context + "'", pos);
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}   // namespace detail

/// Every graph in a graph6 file (one per nonblank line).
inline std::vector<Graph> read_graph6_file(const std::string& path)
{
    const std::string text = detail::read_file(path);
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (detail::trim(line).empty())
            continue;
        out.push_back(parse_graph6(detail::trim(line)));
    }
    return out;
}

/**
 * Resolves a graph argument: "g6:<graph6>", a named family
 * ("path:4", "cycle:5", "complete:4", "kbip:3,5", "star:3", "startri:2"),
 * or a path to an edge-list or single-graph graph6 file.
 */
inline Graph parse_graph_arg(const std::string& arg)
{
    const auto colon = arg.find(':');
    if (colon != std::string::npos)
    {
        const std::string key = arg.substr(0, colon);
        const std::string rest = arg.substr(colon + 1);
        if (key == "g6")
            return parse_graph6(rest);
        static const std::vector<std::pair<std::string, Family>> families = {
            {"path", Family::path},       {"cycle", Family::cycle}, {"complete", Family::complete},
            {"kbip", Family::complete_bipartite}, {"star", Family::star}, {"startri", Family::star_triangle},
        };
        for (const auto& [name, family] : families)
            if (key == name)
                return build_named(family, detail::parse_int_list(rest, arg));
    }
    const std::string text = detail::read_file(arg);
    if (detail::looks_like_edge_list(text))
        return parse_edge_list(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!detail::trim(line).empty())
            return parse_graph6(detail::trim(line));
    throw ParseError("file '" + arg + "' holds no graph", 0);
}

}   // namespace sqfsym

#endif
