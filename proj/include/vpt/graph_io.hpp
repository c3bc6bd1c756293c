#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace vpt {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<long> to_int(std::string_view tok)
{
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        return std::nullopt;
    return v;
}

// First line looks like an "n m" edge-list header.
inline bool looks_like_edge_list(std::string_view line)
{
    auto toks = split_ws(line);
    return toks.size() == 2 && to_int(toks[0]) && to_int(toks[1]);
}

} // namespace detail

inline constexpr std::string_view graph6_header = ">>graph6<<";

// McKay's graph6: N(n) then the upper triangle column by column, 6 bits per byte.
inline graph parse_graph6(std::string_view text, std::size_t line = 1)
{
    text = detail::trim(text);
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    if (text.empty())
        throw parse_error(line, 0, "empty graph6 string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error(line, i, std::string("byte outside graph6 range: '") + text[i] + "'");
    }

    std::size_t pos = 0;
    long n = static_cast<unsigned char>(text[0]) - 63;
    pos = 1;
    if (n == 63) {
        if (text.size() < 4 || text[1] == 126)
            throw parse_error(line, 1, "unsupported graph6 size prefix");
        n = 0;
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | (static_cast<unsigned char>(text[1 + static_cast<std::size_t>(k)]) - 63);
        pos = 4;
    }
    if (n > max_vertices)
        throw parse_error(line, 0, "graph6 order " + std::to_string(n) + " above supported maximum " + std::to_string(max_vertices));

    std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
    std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need)
        throw parse_error(line, pos, "expected " + std::to_string(need) + " adjacency bytes, found " + std::to_string(text.size() - pos));

    graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (vertex j = 1; j < n; ++j) {
        for (vertex i = 0; i < j; ++i, ++k) {
            auto byte = static_cast<unsigned>(static_cast<unsigned char>(text[pos + k / 6]) - 63);
            if (byte & (1u << (5 - k % 6)))
                g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (; k < need * 6; ++k) {
        auto byte = static_cast<unsigned>(static_cast<unsigned char>(text[pos + k / 6]) - 63);
        if (byte & (1u << (5 - k % 6)))
            throw parse_error(line, pos + k / 6, "non-zero graph6 padding bit");
    }
    return g;
}

inline std::string to_graph6(const graph& g)
{
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (vertex j = 1; j < n; ++j) {
        for (vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) {
        acc <<= (6 - filled);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

// "n m" header followed by m lines "u v", 0-based.
inline graph parse_edge_list(std::string_view text, std::size_t first_line = 1)
{
    std::vector<std::string_view> lines;
    std::vector<std::size_t> numbers;
    std::size_t line_no = first_line;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = detail::trim(text.substr(start, end - start));
        if (!line.empty()) {
            lines.push_back(line);
            numbers.push_back(line_no);
        }
        ++line_no;
        start = end + 1;
    }
    if (lines.empty())
        throw parse_error(first_line, 0, "empty edge list");

    auto header = detail::split_ws(lines[0]);
    if (header.size() != 2)
        throw parse_error(numbers[0], 0, "edge-list header must be \"n m\"");
    auto n = detail::to_int(header[0]);
    auto m = detail::to_int(header[1]);
    if (!n || !m || *n < 0 || *m < 0)
        throw parse_error(numbers[0], 0, "edge-list header must hold two non-negative integers");
    if (*n > max_vertices)
        throw parse_error(numbers[0], 0, "order " + std::to_string(*n) + " above supported maximum " + std::to_string(max_vertices));
    if (lines.size() - 1 != static_cast<std::size_t>(*m))
        throw parse_error(numbers.back(), 0, "header announces " + std::to_string(*m) + " edges, found " + std::to_string(lines.size() - 1));

    graph g(static_cast<int>(*n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = detail::split_ws(lines[i]);
        if (toks.size() != 2)
            throw parse_error(numbers[i], 0, "edge line must be \"u v\"");
        auto u = detail::to_int(toks[0]);
        auto v = detail::to_int(toks[1]);
        if (!u || !v)
            throw parse_error(numbers[i], 0, "edge endpoints must be integers");
        if (*u < 0 || *v < 0 || *u >= *n || *v >= *n)
            throw parse_error(numbers[i], 0, "edge endpoint out of range");
        if (*u == *v)
            throw parse_error(numbers[i], 0, "self-loop");
        if (g.adjacent(static_cast<vertex>(*u), static_cast<vertex>(*v)))
            throw parse_error(numbers[i], 0, "repeated edge");
        g.add_edge(static_cast<vertex>(*u), static_cast<vertex>(*v));
    }
    return g;
}

inline std::string to_edge_list(const graph& g)
{
    std::ostringstream os;
    auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        os << u << ' ' << v << '\n';
    return os.str();
}

// Single graph, format auto-detected.
inline graph parse_graph(std::string_view text)
{
    auto t = detail::trim(text);
    auto first = t.substr(0, t.find('\n'));
    if (detail::looks_like_edge_list(first))
        return parse_edge_list(t);
    if (t.find('\n') != std::string_view::npos)
        throw parse_error(2, 0, "graph6 input holds one graph per line; use a stream reader for several");
    return parse_graph6(t);
}

inline std::string serialize_graph(const graph& g) { return to_graph6(g); }

// One item of a graph stream: either a graph or the parse error for its line.
struct stream_item {
    std::size_t line = 0;
    std::string source;
    std::optional<graph> g;
    std::string error;
};

// Reads a stream of graph6 lines, or of concatenated edge-list blocks; the
// format is fixed by the first non-blank line.
class graph_reader {
public:
    explicit graph_reader(std::istream& in)
        : in_(in)
    {
    }

    std::optional<stream_item> next()
    {
        std::string line;
        while (read_line(line)) {
            auto t = detail::trim(line);
            if (t.empty() || t == graph6_header)
                continue;
            if (!mode_)
                mode_ = detail::looks_like_edge_list(t) ? mode::edge_list : mode::graph6;
            if (*mode_ == mode::graph6)
                return graph6_item(t);
            return edge_list_item(t);
        }
        return std::nullopt;
    }

private:
    enum class mode { graph6, edge_list };

    bool read_line(std::string& line)
    {
        if (!std::getline(in_, line))
            return false;
        ++line_no_;
        return true;
    }

    stream_item graph6_item(std::string_view t)
    {
        stream_item item{line_no_, std::string(t), std::nullopt, {}};
        try {
            item.g = parse_graph6(t, line_no_);
        } catch (const parse_error& e) {
            item.error = e.what();
        }
        return item;
    }

    stream_item edge_list_item(std::string_view header)
    {
        stream_item item{line_no_, std::string(header), std::nullopt, {}};
        auto toks = detail::split_ws(header);
        auto m = toks.size() == 2 ? detail::to_int(toks[1]) : std::nullopt;
        if (!m || *m < 0 || !detail::to_int(toks[0])) {
            item.error = parse_error(line_no_, 0, "expected edge-list header \"n m\"").what();
            return item;
        }
        std::string block(header);
        std::string line;
        for (long i = 0; i < *m && read_line(line); ++i)
            block += "\n" + line;
        try {
            item.g = parse_edge_list(block, item.line);
        } catch (const parse_error& e) {
            item.error = e.what();
        }
        return item;
    }

    std::istream& in_;
    std::size_t line_no_ = 0;
    std::optional<mode> mode_;
};

} // namespace vpt
