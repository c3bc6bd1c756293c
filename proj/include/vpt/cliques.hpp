#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace vpt {

namespace detail {

inline void bron_kerbosch(const graph& g, vertex_mask r, vertex_mask p, vertex_mask x, std::vector<vertex_mask>& out)
{
    if (p == 0) {
        if (x == 0)
            out.push_back(r);
        return;
    }
    // pivot: most neighbours inside P, lowest index on ties
    vertex pivot = -1;
    int best = -1;
    for_each_bit(p | x, [&](vertex u) {
        int c = popcount(p & g.neighbor_mask(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    vertex_mask candidates = p & ~g.neighbor_mask(pivot);
    for_each_bit(candidates, [&](vertex v) {
        vertex_mask nv = g.neighbor_mask(v);
        bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
        p &= ~bit(v);
        x |= bit(v);
    });
}

inline bool lex_less(vertex_mask a, vertex_mask b)
{
    // compare sorted member lists lexicographically
    while (a && b) {
        vertex la = lowest(a), lb = lowest(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

} // namespace detail

// All maximal complete sets, as masks, in lexicographic order of their sorted members.
inline std::vector<vertex_mask> clique_masks(const graph& g)
{
    std::vector<vertex_mask> out;
    if (g.order() == 0)
        return out;
    detail::bron_kerbosch(g, 0, g.vertices(), 0, out);
    std::sort(out.begin(), out.end(), detail::lex_less);
    return out;
}

inline std::vector<vertex_set> enumerate_cliques(const graph& g)
{
    std::vector<vertex_set> out;
    for (vertex_mask c : clique_masks(g))
        out.push_back(to_set(c));
    return out;
}

inline int clique_number(const graph& g)
{
    int best = 0;
    for (vertex_mask c : clique_masks(g))
        best = std::max(best, popcount(c));
    return best;
}

} // namespace vpt
