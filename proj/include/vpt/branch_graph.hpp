#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chordal.hpp"
#include "cliques.hpp"
#include "coloring.hpp"
#include "graph.hpp"

namespace vpt {

// B(G/C): vertices outside C with a neighbour in C; v ~ w when they are
// non-adjacent in G, share a neighbour in C, and each has a private one.
struct branch_graph {
    graph carrier;
    std::vector<vertex> back_map; // carrier vertex -> vertex of G, ascending
    vertex_set source_clique;

    vertex_set vertices_in_g() const { return back_map; }
};

namespace detail {

inline bool branch_adjacent(const graph& g, vertex_mask c, vertex v, vertex w)
{
    vertex_mask nv = g.neighbor_mask(v) & c;
    vertex_mask nw = g.neighbor_mask(w) & c;
    return !g.adjacent(v, w) && (nv & nw) && (nv & ~nw) && (nw & ~nv);
}

inline vertex_mask require_clique(const graph& g, const vertex_set& c)
{
    vertex_mask m = to_mask(c);
    for (vertex v : c)
        g.index(v);
    if (!is_complete_set(g, m))
        throw precondition_error("branch graph needs a complete set");
    if (!is_clique(g, m))
        throw precondition_error("branch graph needs a maximal complete set (clique)");
    return m;
}

} // namespace detail

inline branch_graph make_branch_graph(const graph& g, const vertex_set& c)
{
    vertex_mask cm = detail::require_clique(g, c);
    branch_graph b;
    b.source_clique = to_set(cm);
    for (vertex v = 0; v < g.order(); ++v)
        if (!(cm & bit(v)) && (g.neighbor_mask(v) & cm))
            b.back_map.push_back(v);
    b.carrier = graph(static_cast<int>(b.back_map.size()));
    for (std::size_t i = 0; i < b.back_map.size(); ++i) {
        if (g.has_labels())
            b.carrier.set_label(static_cast<vertex>(i), g.label(b.back_map[i]));
        for (std::size_t j = i + 1; j < b.back_map.size(); ++j)
            if (detail::branch_adjacent(g, cm, b.back_map[i], b.back_map[j]))
                b.carrier.add_edge(static_cast<vertex>(i), static_cast<vertex>(j));
    }
    return b;
}

// Re-derives every carrier pair from the four defining clauses.
inline bool audit_branch_graph(const graph& g, const branch_graph& b)
{
    vertex_mask cm = to_mask(b.source_clique);
    for (std::size_t i = 0; i < b.back_map.size(); ++i) {
        vertex v = b.back_map[i];
        if ((cm & bit(v)) || !(g.neighbor_mask(v) & cm))
            return false;
        for (std::size_t j = i + 1; j < b.back_map.size(); ++j)
            if (b.carrier.adjacent(static_cast<vertex>(i), static_cast<vertex>(j)) != detail::branch_adjacent(g, cm, v, b.back_map[j]))
                return false;
    }
    for (vertex v = 0; v < g.order(); ++v)
        if (!(cm & bit(v)) && (g.neighbor_mask(v) & cm) && !std::binary_search(b.back_map.begin(), b.back_map.end(), v))
            return false;
    return true;
}

// Edge set of a branch graph over G's own vertex ids.
inline std::vector<edge> edges_in_g(const branch_graph& b)
{
    std::vector<edge> out;
    for (auto [i, j] : b.carrier.edges())
        out.push_back({b.back_map[static_cast<std::size_t>(i)], b.back_map[static_cast<std::size_t>(j)]});
    std::sort(out.begin(), out.end());
    return out;
}

struct deletion_identity {
    bool holds = false;
    bool v_in_branch_graph = false;
    // both sides over G's vertex ids
    std::vector<vertex> lhs_vertices, rhs_vertices;
    std::vector<edge> lhs_edges, rhs_edges;
};

// B(G-v/C) against B(G/C) (v outside the branch graph) or B(G/C)-v (v inside).
inline deletion_identity branch_deletion_identity(const graph& g, const vertex_set& c, vertex v)
{
    vertex_mask cm = detail::require_clique(g, c);
    g.index(v);
    if (cm & bit(v))
        throw precondition_error("deleted vertex must lie outside the clique");

    branch_graph whole = make_branch_graph(g, c);
    auto smaller = delete_vertex(g, v);
    vertex_set c_small;
    for (vertex x : c)
        c_small.push_back(smaller.to_new(x));
    branch_graph after = make_branch_graph(smaller.g, c_small);

    deletion_identity out;
    out.v_in_branch_graph = std::binary_search(whole.back_map.begin(), whole.back_map.end(), v);
    for (vertex x : after.back_map)
        out.lhs_vertices.push_back(smaller.new_to_old[static_cast<std::size_t>(x)]);
    for (auto [a, b] : after.carrier.edges())
        out.lhs_edges.push_back({smaller.new_to_old[static_cast<std::size_t>(after.back_map[static_cast<std::size_t>(a)])],
                                 smaller.new_to_old[static_cast<std::size_t>(after.back_map[static_cast<std::size_t>(b)])]});
    std::sort(out.lhs_edges.begin(), out.lhs_edges.end());

    for (vertex x : whole.back_map)
        if (x != v)
            out.rhs_vertices.push_back(x);
    for (auto e : edges_in_g(whole))
        if (e.u != v && e.v != v)
            out.rhs_edges.push_back(e);
    out.holds = out.lhs_vertices == out.rhs_vertices && out.lhs_edges == out.rhs_edges;
    return out;
}

struct branch_chi {
    int h = 0;             // max over cliques of chi(B(G/C))
    vertex_set witness;    // first clique attaining it
    std::vector<int> per_clique; // chi for each clique in enumerate_cliques order
};

// Does not check VPT membership; callers that need it do so first.
inline branch_chi max_branch_chi_unchecked(const graph& g, int coloring_cap = default_coloring_cap)
{
    branch_chi out;
    for (const vertex_set& c : enumerate_cliques(g)) {
        int chi = chromatic_number(make_branch_graph(g, c).carrier, coloring_cap).chi;
        out.per_clique.push_back(chi);
        if (out.witness.empty() || chi > out.h) {
            out.h = chi;
            out.witness = c;
        }
    }
    return out;
}

inline branch_chi max_branch_chi(const graph& g, int coloring_cap = default_coloring_cap, std::uint64_t tree_budget = default_tree_budget)
{
    if (!is_vpt(g, tree_budget))
        throw not_vpt("max_branch_chi needs a VPT graph");
    return max_branch_chi_unchecked(g, coloring_cap);
}

} // namespace vpt
