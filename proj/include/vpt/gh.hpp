#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branch_graph.hpp"
#include "chordal.hpp"
#include "cliques.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "split.hpp"

namespace vpt {

enum class gh_role {
    stable,  // v_i, one per vertex of H
    edge,    // v_ij, one per edge ij of H
    pendant, // ~v_i, one per degree-1 vertex of H
};

inline const char* to_string(gh_role r)
{
    switch (r) {
    case gh_role::stable: return "stable";
    case gh_role::edge: return "edge";
    case gh_role::pendant: return "pendant";
    }
    return "?";
}

struct gh_tag {
    gh_role role;
    vertex i;      // H vertex
    vertex j = -1; // second H vertex for edge vertices
    friend bool operator==(const gh_tag&, const gh_tag&) = default;
};

// G_H with vertices laid out as: v_0..v_{n-1}, then v_ij in lexicographic
// edge order, then ~v_i in ascending i.
struct gh_graph {
    graph g;
    graph source;
    std::vector<gh_tag> roles;

    // K_H = edge and pendant vertices
    vertex_set central_clique() const
    {
        vertex_set out;
        for (std::size_t v = 0; v < roles.size(); ++v)
            if (roles[v].role != gh_role::stable)
                out.push_back(static_cast<vertex>(v));
        return out;
    }

    vertex_set stable_set() const
    {
        vertex_set out;
        for (std::size_t v = 0; v < roles.size(); ++v)
            if (roles[v].role == gh_role::stable)
                out.push_back(static_cast<vertex>(v));
        return out;
    }

    // C_{v_i} = {v_i} ∪ {v_ij : j ~ i in H} ∪ {~v_i if deg_H(i) = 1}
    vertex_set clique_of(vertex i) const
    {
        vertex_set out;
        for (std::size_t v = 0; v < roles.size(); ++v) {
            const auto& t = roles[v];
            if (t.i == i || (t.role == gh_role::edge && t.j == i))
                out.push_back(static_cast<vertex>(v));
        }
        return out;
    }
};

inline gh_graph build_gh(const graph& h)
{
    if (h.size() == 0)
        throw precondition_error("G_H needs a graph H with at least one edge");
    if (!is_connected(h))
        throw precondition_error("G_H is built only for connected H");

    gh_graph out;
    out.source = h;
    for (vertex i = 0; i < h.order(); ++i)
        out.roles.push_back({gh_role::stable, i});
    for (auto [i, j] : h.edges())
        out.roles.push_back({gh_role::edge, i, j});
    for (vertex i = 0; i < h.order(); ++i)
        if (h.degree(i) == 1)
            out.roles.push_back({gh_role::pendant, i});

    out.g = graph(static_cast<int>(out.roles.size()));
    // adjacency generated from the clique family {K_H} ∪ {C_{v_i}}
    auto join = [&](const vertex_set& clique) {
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                out.g.add_edge(clique[a], clique[b]);
    };
    join(out.central_clique());
    for (vertex i = 0; i < h.order(); ++i)
        join(out.clique_of(i));

    for (std::size_t v = 0; v < out.roles.size(); ++v) {
        const auto& t = out.roles[v];
        std::string name = t.role == gh_role::stable ? "v" + std::to_string(t.i)
            : t.role == gh_role::edge                ? "v" + std::to_string(t.i) + "-" + std::to_string(t.j)
                                                     : "~v" + std::to_string(t.i);
        out.g.set_label(static_cast<vertex>(v), std::move(name));
    }
    return out;
}

struct named_check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct gh_lemma_report {
    std::vector<named_check> checks;
    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const named_check& c) { return c.pass; });
    }
};

// VPT ∧ split with partition (S_H, K_H) ∧ no dominated stable vertex ∧
// B(G_H/K_H) equal to H on labels ∧ clique family {K_H} ∪ {C_{v_i}}.
inline gh_lemma_report verify_gh_lemma(const gh_graph& gh, std::uint64_t tree_budget = default_tree_budget)
{
    gh_lemma_report rep;
    const graph& g = gh.g;

    bool vpt = is_vpt(g, tree_budget).has_value();
    rep.checks.push_back({"vpt", vpt, vpt ? "" : "no clique tree with path-shaped vertex sets"});

    auto split = find_split_partition(g);
    rep.checks.push_back({"split", split.has_value(), split ? "" : "no split partition"});
    bool same_partition = split && split->stable == gh.stable_set() && split->clique == gh.central_clique();
    rep.checks.push_back({"partition-is-S_H-K_H", same_partition, same_partition ? "" : "canonical split partition differs from (S_H, K_H)"});

    auto by_construction = make_split_partition(g, gh.stable_set(), gh.central_clique());
    bool undominated = by_construction.dominated.empty();
    std::string dom_detail;
    if (!undominated)
        dom_detail = g.label(by_construction.dominated.front().first) + " dominated by " + g.label(by_construction.dominated.front().second);
    rep.checks.push_back({"no-dominated-stable", undominated, dom_detail});

    auto b = make_branch_graph(g, gh.central_clique());
    bool same_vertices = b.back_map == gh.stable_set();
    bool same_edges = same_vertices && b.carrier == gh.source;
    rep.checks.push_back({"branch-graph-equals-H", same_edges, same_edges ? "" : "B(G_H/K_H) differs from H"});

    std::vector<vertex_mask> expected{to_mask(gh.central_clique())};
    for (vertex i = 0; i < gh.source.order(); ++i)
        expected.push_back(to_mask(gh.clique_of(i)));
    std::sort(expected.begin(), expected.end(), detail::lex_less);
    bool family = clique_masks(g) == expected;
    rep.checks.push_back({"clique-family", family, family ? "" : "cliques differ from {K_H} ∪ {C_v}"});
    return rep;
}

struct h_extraction {
    graph h;                  // B(G/K), vertex i = i-th stable vertex of G
    vertex_set stable;        // S in ascending order
    gh_graph rebuilt;         // build_gh(h)
    vertex_bijection iso;     // G -> rebuilt.g
};

// Recovers H from a split graph without dominated stable vertices and the
// explicit isomorphism onto G_H: S maps to the v_i, and each k ∈ K with
// N(k) ∩ S = {s_i, s_j} maps to v_ij. nullopt when that map is not an isomorphism.
inline std::optional<h_extraction> extract_h(const graph& g)
{
    auto split = find_split_partition(g);
    if (!split)
        throw precondition_error("extract_h needs a split graph");
    if (!split->dominated.empty())
        throw precondition_error("extract_h needs a split graph without dominated stable vertices");

    auto b = make_branch_graph(g, split->clique);
    if (b.back_map != split->stable)
        return std::nullopt;
    h_extraction out;
    out.h = b.carrier;
    out.stable = split->stable;
    if (out.h.size() == 0 || !is_connected(out.h))
        return std::nullopt;
    out.rebuilt = build_gh(out.h);
    if (out.rebuilt.g.order() != g.order())
        return std::nullopt;

    std::map<std::pair<vertex, vertex>, vertex> edge_vertex;
    for (std::size_t v = 0; v < out.rebuilt.roles.size(); ++v)
        if (out.rebuilt.roles[v].role == gh_role::edge)
            edge_vertex[{out.rebuilt.roles[v].i, out.rebuilt.roles[v].j}] = static_cast<vertex>(v);

    out.iso.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.stable.size(); ++i)
        out.iso[static_cast<std::size_t>(out.stable[i])] = static_cast<vertex>(i);
    vertex_mask s_mask = to_mask(out.stable);
    for (vertex k : split->clique) {
        vertex_set ends;
        for_each_bit(g.neighbor_mask(k) & s_mask, [&](vertex s) {
            ends.push_back(static_cast<vertex>(std::lower_bound(out.stable.begin(), out.stable.end(), s) - out.stable.begin()));
        });
        if (ends.size() != 2)
            return std::nullopt;
        auto it = edge_vertex.find({ends[0], ends[1]});
        if (it == edge_vertex.end())
            return std::nullopt;
        out.iso[static_cast<std::size_t>(k)] = it->second;
    }
    if (!is_isomorphism(g, out.rebuilt.g, out.iso))
        return std::nullopt;
    return out;
}

} // namespace vpt
