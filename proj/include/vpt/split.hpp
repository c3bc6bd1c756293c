#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliques.hpp"
#include "graph.hpp"

namespace vpt {

struct split_partition {
    vertex_set stable; // S
    vertex_set clique; // K, the central clique
    // ordered pairs (s, s') of distinct stable vertices with N(s) ⊆ N(s')
    std::vector<std::pair<vertex, vertex>> dominated;
};

inline std::vector<std::pair<vertex, vertex>> dominated_stable_vertices(const split_partition& p, const graph& g)
{
    std::vector<std::pair<vertex, vertex>> out;
    for (vertex s : p.stable)
        for (vertex t : p.stable)
            if (s != t && (g.neighbor_mask(s) & ~g.neighbor_mask(t)) == 0)
                out.emplace_back(s, t);
    return out;
}

inline bool is_valid_split_partition(const graph& g, const split_partition& p)
{
    vertex_mask s = to_mask(p.stable), k = to_mask(p.clique);
    return (s & k) == 0 && (s | k) == g.vertices() && popcount(s) == static_cast<int>(p.stable.size())
        && popcount(k) == static_cast<int>(p.clique.size()) && is_stable_set(g, s) && is_complete_set(g, k);
}

// Validates a caller-chosen (S, K) and fills in the dominated pairs.
inline split_partition make_split_partition(const graph& g, vertex_set stable, vertex_set clique)
{
    split_partition p{to_set(to_mask(stable)), to_set(to_mask(clique)), {}};
    if (!is_valid_split_partition(g, p))
        throw precondition_error("not a split partition: S must be stable, K complete, and together they partition V");
    p.dominated = dominated_stable_vertices(p, g);
    return p;
}

// Split partition with the largest possible K (a maximum clique), ties broken
// by the lexicographically smallest S; nullopt when g is not split.
inline std::optional<split_partition> find_split_partition(const graph& g)
{
    std::optional<vertex_mask> best;
    auto cliques = clique_masks(g);
    int omega = 0;
    for (vertex_mask c : cliques)
        omega = std::max(omega, popcount(c));
    for (vertex_mask c : cliques) {
        if (popcount(c) != omega)
            continue;
        vertex_mask s = g.vertices() & ~c;
        if (!is_stable_set(g, s))
            continue;
        if (!best || detail::lex_less(s, g.vertices() & ~*best))
            best = c;
    }
    if (!best)
        return std::nullopt;
    return make_split_partition(g, to_set(g.vertices() & ~*best), to_set(*best));
}

} // namespace vpt
