#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "graph.hpp"

namespace vpt {

inline constexpr int default_coloring_cap = 24;

// colors[v] in 1..k
using color_assignment = std::vector<int>;

struct coloring_certificate {
    int chi = 0;
    color_assignment assignment;
    // A clique of size chi when one exists; otherwise empty and the bound
    // comes from the failed exhaustive (chi-1)-search.
    vertex_set clique_witness;
    bool lower_bound_by_search = false;
};

inline bool is_proper_coloring(const graph& g, const color_assignment& colors)
{
    if (colors.size() != static_cast<std::size_t>(g.order()))
        return false;
    for (auto [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
            return false;
    for (int c : colors)
        if (c < 1)
            return false;
    return true;
}

namespace detail {

class dsatur_search {
public:
    dsatur_search(const graph& g, int k)
        : g_(g)
        , k_(k)
        , colors_(static_cast<std::size_t>(g.order()), 0)
    {
    }

    std::optional<color_assignment> run()
    {
        if (extend(g_.vertices(), 0))
            return colors_;
        return std::nullopt;
    }

private:
    std::uint64_t forbidden(vertex v) const
    {
        std::uint64_t used = 0;
        for_each_bit(g_.neighbor_mask(v), [&](vertex w) {
            if (int c = colors_[static_cast<std::size_t>(w)])
                used |= std::uint64_t{1} << (c - 1);
        });
        return used;
    }

    // Uncolored vertex of maximum saturation, then maximum uncolored degree, then lowest index.
    vertex pick(vertex_mask uncolored) const
    {
        vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for_each_bit(uncolored, [&](vertex v) {
            int sat = popcount(forbidden(v));
            int deg = popcount(g_.neighbor_mask(v) & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        });
        return best;
    }

    bool extend(vertex_mask uncolored, int used_colors)
    {
        if (uncolored == 0)
            return true;
        vertex v = pick(uncolored);
        std::uint64_t blocked = forbidden(v);
        if (popcount(blocked) >= k_)
            return false;
        // a fresh color is interchangeable with any other fresh one
        int limit = std::min(k_, used_colors + 1);
        for (int c = 1; c <= limit; ++c) {
            if (blocked & (std::uint64_t{1} << (c - 1)))
                continue;
            colors_[static_cast<std::size_t>(v)] = c;
            if (extend(uncolored & ~bit(v), std::max(used_colors, c)))
                return true;
        }
        colors_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const graph& g_;
    int k_;
    color_assignment colors_;
};

inline void check_cap(const graph& g, int cap)
{
    if (g.order() > cap)
        throw cap_exceeded("coloring cap exceeded: " + std::to_string(g.order()) + " vertices > cap " + std::to_string(cap));
}

} // namespace detail

// Complete backtracking search in DSATUR order.
inline std::optional<color_assignment> is_k_colorable(const graph& g, int k)
{
    if (k < 1)
        throw precondition_error("k must be at least 1");
    if (g.order() == 0)
        return color_assignment{};
    if (k >= g.order()) {
        color_assignment trivial(static_cast<std::size_t>(g.order()));
        for (std::size_t v = 0; v < trivial.size(); ++v)
            trivial[v] = static_cast<int>(v) + 1;
        return trivial;
    }
    return detail::dsatur_search(g, k).run();
}

inline coloring_certificate chromatic_number(const graph& g, int cap = default_coloring_cap)
{
    detail::check_cap(g, cap);
    coloring_certificate cert;
    if (g.order() == 0)
        return cert;

    vertex_mask best_clique = 0;
    for (vertex_mask c : clique_masks(g))
        if (popcount(c) > popcount(best_clique))
            best_clique = c;

    for (int k = popcount(best_clique);; ++k) {
        if (auto colors = is_k_colorable(g, k)) {
            cert.chi = k;
            cert.assignment = std::move(*colors);
            break;
        }
    }
    if (popcount(best_clique) == cert.chi)
        cert.clique_witness = to_set(best_clique);
    else
        cert.lower_bound_by_search = true;
    return cert;
}

struct criticality_report {
    int chi = 0;
    bool vertex_critical = false;
    bool edge_critical = false;
    std::vector<vertex> failing_vertices;
    std::vector<edge> failing_edges;

    bool critical() const { return vertex_critical && edge_critical; }
};

// Every single deletion is evaluated, so the failing lists are complete.
inline criticality_report criticality(const graph& g, int cap = default_coloring_cap)
{
    criticality_report rep;
    rep.chi = chromatic_number(g, cap).chi;
    // chi(H) < chi; for chi == 1 only the empty graph qualifies
    auto drops = [&](const graph& smaller) {
        if (rep.chi <= 1)
            return smaller.order() == 0;
        return is_k_colorable(smaller, rep.chi - 1).has_value();
    };
    for (vertex v = 0; v < g.order(); ++v)
        if (!drops(delete_vertex(g, v).g))
            rep.failing_vertices.push_back(v);
    for (edge e : g.edges())
        if (!drops(delete_edge(g, e)))
            rep.failing_edges.push_back(e);
    rep.vertex_critical = rep.failing_vertices.empty();
    rep.edge_critical = rep.failing_edges.empty();
    return rep;
}

} // namespace vpt
