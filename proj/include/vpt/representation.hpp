#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "graph_io.hpp"

namespace vpt {

using host_node = int;
// Sorted, duplicate-free set of host nodes.
using node_set = std::vector<host_node>;

struct tree_edge {
    host_node a;
    host_node b;
    friend auto operator<=>(const tree_edge&, const tree_edge&) = default;
};

// A tree on nodes 0..node_count-1.
class host_tree {
public:
    host_tree()
        : host_tree(1, {})
    {
    }

    host_tree(int node_count, std::vector<tree_edge> edges)
        : adj_(static_cast<std::size_t>(std::max(node_count, 0)))
    {
        if (node_count < 1)
            throw precondition_error("host tree needs at least one node");
        if (edges.size() != static_cast<std::size_t>(node_count - 1))
            throw precondition_error("host tree on " + std::to_string(node_count) + " nodes needs " + std::to_string(node_count - 1) + " edges");
        for (auto& e : edges) {
            if (e.a < 0 || e.b < 0 || e.a >= node_count || e.b >= node_count || e.a == e.b)
                throw precondition_error("bad host edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
            if (e.a > e.b)
                std::swap(e.a, e.b);
            adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
            adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
        }
        for (auto& n : adj_)
            std::sort(n.begin(), n.end());
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
        if (component_of(0, -1).size() != static_cast<std::size_t>(node_count))
            throw precondition_error("host edges do not form a tree");
    }

    int node_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<tree_edge>& edges() const { return edges_; }
    const std::vector<host_node>& neighbors(host_node q) const { return adj_[check(q)]; }
    int degree(host_node q) const { return static_cast<int>(adj_[check(q)].size()); }

    int max_degree() const
    {
        int best = 0;
        for (auto& n : adj_)
            best = std::max(best, static_cast<int>(n.size()));
        return best;
    }

    bool adjacent(host_node a, host_node b) const
    {
        auto& n = adj_[check(a)];
        return std::binary_search(n.begin(), n.end(), b);
    }

    // Nodes reachable from `start` without passing through `blocked`, sorted.
    node_set component_of(host_node start, host_node blocked) const
    {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<host_node> stack{start};
        seen[check(start)] = 1;
        if (blocked >= 0)
            seen[check(blocked)] = 1;
        node_set out;
        while (!stack.empty()) {
            host_node x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (host_node y : adj_[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t check(host_node q) const
    {
        if (q < 0 || q >= node_count())
            throw precondition_error("host node " + std::to_string(q) + " out of range");
        return static_cast<std::size_t>(q);
    }

    friend bool operator==(const host_tree& a, const host_tree& b) { return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_; }

private:
    std::vector<std::vector<host_node>> adj_;
    std::vector<tree_edge> edges_;
};

struct representation {
    host_tree host;
    std::vector<node_set> paths; // paths[v] for each graph vertex v

    friend bool operator==(const representation&, const representation&) = default;
};

namespace detail {

inline bool contains(const node_set& s, host_node q) { return std::binary_search(s.begin(), s.end(), q); }

inline bool intersects(const node_set& a, const node_set& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        (*i < *j) ? ++i : ++j;
    }
    return false;
}

inline bool subset_of(const node_set& a, const node_set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace detail

// Non-empty node set inducing a path (single nodes included).
inline bool is_host_path(const host_tree& t, const node_set& s)
{
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        return false;
    for (host_node q : s)
        if (q < 0 || q >= t.node_count())
            return false;
    std::size_t inner_edges = 0;
    for (host_node q : s) {
        int d = 0;
        for (host_node r : t.neighbors(q))
            d += detail::contains(s, r) ? 1 : 0;
        if (d > 2)
            return false;
        inner_edges += static_cast<std::size_t>(d);
    }
    // a forest on |s| nodes is connected iff it has |s|-1 edges
    return inner_edges / 2 + 1 == s.size();
}

struct verdict {
    bool ok = true;
    std::string clause; // empty when ok
    std::string detail;

    static verdict pass() { return {}; }
    static verdict fail(std::string clause, std::string detail) { return {false, std::move(clause), std::move(detail)}; }
    explicit operator bool() const { return ok; }
};

// Checks the paths are paths, the intersection graph is g, and the host degree cap.
inline verdict verify_representation(const graph& g, const representation& r, std::optional<int> max_degree = std::nullopt)
{
    if (r.paths.size() != static_cast<std::size_t>(g.order()))
        return verdict::fail("vertex-count", std::to_string(r.paths.size()) + " paths for " + std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < r.paths.size(); ++v)
        if (!is_host_path(r.host, r.paths[v]))
            return verdict::fail("path-shape", "P_" + std::to_string(v) + " is not a path of the host tree");
    for (vertex u = 0; u < g.order(); ++u)
        for (vertex v = u + 1; v < g.order(); ++v) {
            bool meet = detail::intersects(r.paths[static_cast<std::size_t>(u)], r.paths[static_cast<std::size_t>(v)]);
            if (meet != g.adjacent(u, v))
                return verdict::fail("intersection", "vertices " + std::to_string(u) + "," + std::to_string(v) + (meet ? " not adjacent but paths meet" : " adjacent but paths disjoint"));
        }
    if (max_degree && r.host.max_degree() > *max_degree) {
        for (host_node q = 0; q < r.host.node_count(); ++q)
            if (r.host.degree(q) > *max_degree)
                return verdict::fail("degree", "host node " + std::to_string(q) + " has degree " + std::to_string(r.host.degree(q)) + " > " + std::to_string(*max_degree));
    }
    return verdict::pass();
}

// The set C_q of vertices whose path covers q.
inline vertex_set complete_at(const representation& r, host_node q)
{
    r.host.check(q);
    vertex_set out;
    for (std::size_t v = 0; v < r.paths.size(); ++v)
        if (detail::contains(r.paths[v], q))
            out.push_back(static_cast<vertex>(v));
    return out;
}

// Components of T - q; branch i holds the i-th neighbour of q (ascending).
inline std::vector<node_set> branches_at(const representation& r, host_node q)
{
    std::vector<node_set> out;
    for (host_node n : r.host.neighbors(q))
        out.push_back(r.host.component_of(n, q));
    return out;
}

// Vertices whose path holds both the i-th and j-th neighbours of q.
inline vertex_set links(const representation& r, host_node q, int i, int j)
{
    auto& nb = r.host.neighbors(q);
    if (i == j)
        throw precondition_error("links needs two distinct branches");
    if (i < 0 || j < 0 || i >= static_cast<int>(nb.size()) || j >= static_cast<int>(nb.size()))
        throw precondition_error("branch index out of range");
    vertex_set out;
    for (std::size_t v = 0; v < r.paths.size(); ++v)
        if (detail::contains(r.paths[v], nb[static_cast<std::size_t>(i)]) && detail::contains(r.paths[v], nb[static_cast<std::size_t>(j)]))
            out.push_back(static_cast<vertex>(v));
    return out;
}

// Index of the branch at q containing the whole node set, or -1.
inline int branch_containing(const std::vector<node_set>& branches, const node_set& nodes)
{
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (detail::subset_of(nodes, branches[i]))
            return static_cast<int>(i);
    return -1;
}

struct fullness {
    bool full = true;
    // first branch pair (i < j) with no linking path that meets paths inside both branches
    std::optional<std::pair<int, int>> missing;
    // for each pair in order, the linking vertex that witnessed it (when full)
    std::vector<vertex> witnesses;
};

inline fullness is_full_at(const representation& r, host_node q)
{
    auto branches = branches_at(r, q);
    std::vector<int> home(r.paths.size());
    for (std::size_t v = 0; v < r.paths.size(); ++v)
        home[v] = branch_containing(branches, r.paths[v]);

    fullness out;
    int d = static_cast<int>(branches.size());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            std::optional<vertex> found;
            for (vertex v : links(r, q, i, j)) {
                bool side_i = false, side_j = false;
                for (std::size_t w = 0; w < r.paths.size(); ++w) {
                    if (!detail::intersects(r.paths[w], r.paths[static_cast<std::size_t>(v)]))
                        continue;
                    side_i = side_i || home[w] == i;
                    side_j = side_j || home[w] == j;
                }
                if (side_i && side_j) {
                    found = v;
                    break;
                }
            }
            if (!found) {
                out.full = false;
                out.missing = std::pair{i, j};
                out.witnesses.clear();
                return out;
            }
            out.witnesses.push_back(*found);
        }
    }
    return out;
}

struct degree_reduction {
    representation result;
    host_node new_node;
    std::pair<int, int> merged_branches; // branch indices at q, lowest unlinked pair
};

// Splits off two unlinked branches at q behind a new node q' of degree 3.
inline degree_reduction reduce_degree(const representation& r, host_node q)
{
    int h = r.host.degree(q);
    if (h < 4)
        throw precondition_error("degree reduction needs deg(q) >= 4, got " + std::to_string(h));
    std::optional<std::pair<int, int>> pair;
    for (int i = 0; i < h && !pair; ++i)
        for (int j = i + 1; j < h && !pair; ++j)
            if (links(r, q, i, j).empty())
                pair = std::pair{i, j};
    if (!pair)
        throw precondition_error("every branch pair at node " + std::to_string(q) + " is linked");

    auto& nb = r.host.neighbors(q);
    host_node qi = nb[static_cast<std::size_t>(pair->first)];
    host_node qj = nb[static_cast<std::size_t>(pair->second)];
    host_node fresh = r.host.node_count();

    std::vector<tree_edge> edges;
    for (auto e : r.host.edges()) {
        bool cut = (e.a == q && (e.b == qi || e.b == qj)) || (e.b == q && (e.a == qi || e.a == qj));
        if (!cut)
            edges.push_back(e);
    }
    edges.push_back({q, fresh});
    edges.push_back({qi, fresh});
    edges.push_back({qj, fresh});

    representation out{host_tree(fresh + 1, std::move(edges)), r.paths};
    for (auto& p : out.paths) {
        if (detail::contains(p, q) && (detail::contains(p, qi) || detail::contains(p, qj)))
            p.push_back(fresh); // fresh is the largest id, order kept
    }
    return {std::move(out), fresh, *pair};
}

// Drops path end nodes that no intersection depends on, until nothing changes.
inline representation trim_paths(const representation& r)
{
    representation out = r;
    auto& paths = out.paths;
    auto needed = [&](std::size_t v, const node_set& shrunk) {
        for (std::size_t u = 0; u < paths.size(); ++u)
            if (u != v && detail::intersects(paths[u], paths[v]) && !detail::intersects(paths[u], shrunk))
                return true;
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < paths.size(); ++v) {
            if (paths[v].size() < 2)
                continue;
            for (host_node x : node_set(paths[v])) {
                if (paths[v].size() < 2)
                    break;
                // endpoints have exactly one neighbour inside the path
                int inside = 0;
                for (host_node y : out.host.neighbors(x))
                    inside += detail::contains(paths[v], y) ? 1 : 0;
                if (inside != 1)
                    continue;
                node_set shrunk;
                std::copy_if(paths[v].begin(), paths[v].end(), std::back_inserter(shrunk), [&](host_node y) { return y != x; });
                if (!needed(v, shrunk)) {
                    paths[v] = std::move(shrunk);
                    changed = true;
                }
            }
        }
    }
    return out;
}

// Text form: "host <nodes>", one "a b" line per tree edge, "paths <count>",
// then each vertex's path nodes in ascending order.
inline std::string serialize_representation(const representation& r)
{
    std::ostringstream os;
    os << "host " << r.host.node_count() << '\n';
    for (auto e : r.host.edges())
        os << e.a << ' ' << e.b << '\n';
    os << "paths " << r.paths.size() << '\n';
    for (auto& p : r.paths) {
        for (std::size_t i = 0; i < p.size(); ++i)
            os << (i ? " " : "") << p[i];
        os << '\n';
    }
    return os.str();
}

inline representation parse_representation(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    std::size_t at = 0;
    auto expect_header = [&](std::string_view word) -> long {
        if (at >= lines.size())
            throw parse_error(at + 1, 0, "missing \"" + std::string(word) + "\" header");
        auto toks = detail::split_ws(lines[at]);
        auto n = toks.size() == 2 ? detail::to_int(toks[1]) : std::nullopt;
        if (toks.size() != 2 || toks[0] != word || !n || *n < 0)
            throw parse_error(at + 1, 0, "expected \"" + std::string(word) + " <count>\"");
        ++at;
        return *n;
    };
    auto ints = [&](std::size_t line_idx) {
        std::vector<int> out;
        for (auto tok : detail::split_ws(lines[line_idx])) {
            auto v = detail::to_int(tok);
            if (!v)
                throw parse_error(line_idx + 1, 0, "expected integers");
            out.push_back(static_cast<int>(*v));
        }
        return out;
    };

    long nodes = expect_header("host");
    if (nodes < 1)
        throw parse_error(at, 0, "host tree needs at least one node");
    std::vector<tree_edge> edges;
    for (long i = 0; i + 1 < nodes; ++i, ++at) {
        if (at >= lines.size())
            throw parse_error(at + 1, 0, "missing host edge");
        auto e = ints(at);
        if (e.size() != 2)
            throw parse_error(at + 1, 0, "host edge line must be \"a b\"");
        edges.push_back({e[0], e[1]});
    }
    representation r;
    try {
        r.host = host_tree(static_cast<int>(nodes), std::move(edges));
    } catch (const precondition_error& e) {
        throw parse_error(at, 0, e.what());
    }
    long count = expect_header("paths");
    for (long v = 0; v < count; ++v, ++at) {
        if (at >= lines.size())
            throw parse_error(at + 1, 0, "missing path line");
        auto p = ints(at);
        node_set s(p.begin(), p.end());
        if (!is_host_path(r.host, s))
            throw parse_error(at + 1, 0, "not an ascending path of the host tree");
        r.paths.push_back(std::move(s));
    }
    for (; at < lines.size(); ++at)
        if (!detail::trim(lines[at]).empty())
            throw parse_error(at + 1, 0, "trailing content");
    return r;
}

} // namespace vpt
