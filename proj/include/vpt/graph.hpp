#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace vpt {

using vertex = int;
// Ordered, duplicate-free list of vertex indices.
using vertex_set = std::vector<vertex>;
// Bit i set <=> vertex i present.
using vertex_mask = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr vertex_mask bit(vertex v) { return vertex_mask{1} << v; }

inline constexpr vertex_mask low_bits(int n) { return n >= 64 ? ~vertex_mask{0} : (vertex_mask{1} << n) - 1; }

inline int popcount(vertex_mask m) { return std::popcount(m); }

inline vertex lowest(vertex_mask m) { return std::countr_zero(m); }

template <class F>
void for_each_bit(vertex_mask m, F&& f)
{
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

inline vertex_set to_set(vertex_mask m)
{
    vertex_set out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_bit(m, [&](vertex v) { out.push_back(v); });
    return out;
}

inline vertex_mask to_mask(const vertex_set& s)
{
    vertex_mask m = 0;
    for (vertex v : s)
        m |= bit(v);
    return m;
}

struct edge {
    vertex u;
    vertex v;
    friend auto operator<=>(const edge&, const edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1, at most 64 vertices.
// Labels are carried along for display but ignored by operator==.
class graph {
public:
    graph() = default;

    explicit graph(int n)
        : adj_(static_cast<std::size_t>(check_order(n)), 0)
    {
    }

    static graph from_edges(int n, const std::vector<edge>& edges)
    {
        graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    int order() const { return static_cast<int>(adj_.size()); }

    std::size_t size() const
    {
        std::size_t twice = 0;
        for (vertex_mask m : adj_)
            twice += static_cast<std::size_t>(popcount(m));
        return twice / 2;
    }

    vertex_mask vertices() const { return low_bits(order()); }

    bool adjacent(vertex u, vertex v) const { return (adj_[index(u)] & bit(v)) != 0; }

    vertex_mask neighbor_mask(vertex v) const { return adj_[index(v)]; }

    int degree(vertex v) const { return popcount(adj_[index(v)]); }

    void add_edge(vertex u, vertex v)
    {
        index(u);
        index(v);
        if (u == v)
            throw precondition_error("self-loop on vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    void remove_edge(vertex u, vertex v)
    {
        adj_[index(u)] &= ~bit(v);
        adj_[index(v)] &= ~bit(u);
    }

    // Edges with u < v in lexicographic order.
    std::vector<edge> edges() const
    {
        std::vector<edge> out;
        for (vertex u = 0; u < order(); ++u)
            for_each_bit(adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1), [&](vertex v) { out.push_back({u, v}); });
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }

    std::string label(vertex v) const
    {
        index(v);
        return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }

    void set_label(vertex v, std::string text)
    {
        index(v);
        if (labels_.empty())
            labels_.resize(adj_.size());
        labels_[static_cast<std::size_t>(v)] = std::move(text);
    }

    friend bool operator==(const graph& a, const graph& b) { return a.adj_ == b.adj_; }

    std::size_t index(vertex v) const
    {
        if (v < 0 || v >= order())
            throw precondition_error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(order()) + ")");
        return static_cast<std::size_t>(v);
    }

private:
    static int check_order(int n)
    {
        if (n < 0 || n > max_vertices)
            throw cap_exceeded("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
        return n;
    }

    std::vector<vertex_mask> adj_;
    std::vector<std::string> labels_;
};

// Result of taking an induced subgraph: new_to_old[i] is the original index of new vertex i.
struct subgraph {
    graph g;
    std::vector<vertex> new_to_old;

    vertex to_new(vertex old) const
    {
        auto it = std::lower_bound(new_to_old.begin(), new_to_old.end(), old);
        return (it != new_to_old.end() && *it == old) ? static_cast<vertex>(it - new_to_old.begin()) : -1;
    }
};

inline subgraph induced_subgraph(const graph& g, vertex_mask keep)
{
    keep &= g.vertices();
    subgraph out{graph(popcount(keep)), to_set(keep)};
    std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
        old_to_new[static_cast<std::size_t>(out.new_to_old[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
        vertex old = out.new_to_old[i];
        for_each_bit(g.neighbor_mask(old) & keep, [&](vertex w) {
            int j = old_to_new[static_cast<std::size_t>(w)];
            if (static_cast<int>(i) < j)
                out.g.add_edge(static_cast<vertex>(i), j);
        });
        if (g.has_labels())
            out.g.set_label(static_cast<vertex>(i), g.label(old));
    }
    return out;
}

inline subgraph delete_vertex(const graph& g, vertex v)
{
    g.index(v);
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

inline graph delete_edge(const graph& g, edge e)
{
    if (!g.adjacent(e.u, e.v))
        throw precondition_error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    graph out = g;
    out.remove_edge(e.u, e.v);
    return out;
}

inline vertex_set neighbors(const graph& g, vertex v) { return to_set(g.neighbor_mask(v)); }

inline vertex_set closed_neighbors(const graph& g, vertex v) { return to_set(g.neighbor_mask(v) | bit(v)); }

inline bool are_true_twins(const graph& g, vertex x, vertex y)
{
    if (x == y)
        throw precondition_error("true-twin test needs two distinct vertices");
    return g.adjacent(x, y) && (g.neighbor_mask(x) & ~bit(y)) == (g.neighbor_mask(y) & ~bit(x));
}

inline bool is_complete_set(const graph& g, vertex_mask s)
{
    bool ok = true;
    for_each_bit(s, [&](vertex v) { ok = ok && (s & ~bit(v) & ~g.neighbor_mask(v)) == 0; });
    return ok;
}

inline bool is_stable_set(const graph& g, vertex_mask s)
{
    bool ok = true;
    for_each_bit(s, [&](vertex v) { ok = ok && (g.neighbor_mask(v) & s) == 0; });
    return ok;
}

// Complete and not extendable by any outside vertex.
inline bool is_clique(const graph& g, vertex_mask s)
{
    if (s == 0 || !is_complete_set(g, s))
        return g.order() == 0 && s == 0;
    vertex_mask common = g.vertices();
    for_each_bit(s, [&](vertex v) { common &= g.neighbor_mask(v); });
    return common == 0;
}

// Vertex masks of connected components, ordered by lowest member.
inline std::vector<vertex_mask> components(const graph& g)
{
    std::vector<vertex_mask> out;
    vertex_mask left = g.vertices();
    while (left) {
        vertex_mask comp = bit(lowest(left));
        vertex_mask frontier = comp;
        while (frontier) {
            vertex_mask next = 0;
            for_each_bit(frontier, [&](vertex v) { next |= g.neighbor_mask(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline bool is_connected(const graph& g) { return g.order() > 0 && components(g).size() == 1; }

// Small named graphs used by fixtures, tools and tests.
namespace named {

inline graph complete(int n)
{
    graph g(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline graph path(int n)
{
    graph g(n);
    for (vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline graph cycle(int n)
{
    graph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

inline graph star(int leaves)
{
    graph g(leaves + 1);
    for (vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

// Cycle on 0..rim-1 plus hub `rim` adjacent to all of it.
inline graph wheel(int rim)
{
    graph g(rim + 1);
    for (vertex v = 0; v < rim; ++v) {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, rim);
    }
    return g;
}

inline graph petersen()
{
    graph g(10);
    for (vertex v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
    }
    return g;
}

} // namespace named

} // namespace vpt
