#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordal.hpp"
#include "cliques.hpp"
#include "graph.hpp"
#include "representation.hpp"
#include "trees.hpp"

namespace vpt {

struct oracle_verdict {
    bool exists = false;
    std::optional<representation> witness;
    std::uint64_t trees_examined = 0;
    std::uint64_t assignments_examined = 0;
    int bound_used = 0;
    // non-chordal input: no search was needed, the answer is "not VPT"
    bool refuted_by_chordality = false;

    // A negative answer without chordality refutation only covers hosts up to bound_used nodes.
    bool within_bound_only() const { return !exists && !refuted_by_chordality; }
};

// Twice the clique count: canonical representations use one host node per
// clique and each degree-reducing rewrite adds one node.
inline int default_oracle_bound(const graph& g) { return std::max(1, 2 * static_cast<int>(clique_masks(g).size())); }

namespace detail {

using node_mask = std::uint64_t;

// Path assignment search on one host tree. Trees are tried in increasing size,
// so only representations with the fewest host nodes matter, and those are
// "tight":
//   - every leaf is the whole path of some vertex (otherwise every path at
//     the leaf also holds its neighbour, and the leaf can be dropped); that
//     vertex is simplicial, since all its neighbours' paths meet the leaf;
//   - every degree-2 node ends some path (otherwise every path through it
//     holds both neighbours, and it can be contracted into one of them).
// Neither shrink changes an intersection or raises a degree.
class path_assignment_search {
public:
    path_assignment_search(const graph& g, const host_tree& t, const std::vector<vertex>& order)
        : g_(g)
        , order_(order)
        , assigned_(static_cast<std::size_t>(g.order()), 0)
        , simplicial_left_(order.size() + 1, 0)
    {
        for (std::size_t k = order.size(); k-- > 0;) {
            vertex v = order[k];
            simplicial_left_[k] = simplicial_left_[k + 1] + (is_complete_set(g, g.neighbor_mask(v)) ? 1 : 0);
        }
        int m = t.node_count();
        for (int q = 0; q < m; ++q)
            if (t.degree(q) <= 2)
                thin_ |= node_mask{1} << q;
        for (int q = 0; q < m; ++q)
            if (t.degree(q) == 1)
                leaves_ |= node_mask{1} << q;
        for (int a = 0; a < m; ++a) {
            // parents of a BFS from a give every a-b path
            std::vector<int> parent(static_cast<std::size_t>(m), -1);
            std::vector<int> queue{a};
            parent[static_cast<std::size_t>(a)] = a;
            for (std::size_t k = 0; k < queue.size(); ++k)
                for (int y : t.neighbors(queue[k]))
                    if (parent[static_cast<std::size_t>(y)] < 0) {
                        parent[static_cast<std::size_t>(y)] = queue[k];
                        queue.push_back(y);
                    }
            for (int b = a; b < m; ++b) {
                node_mask p = 0;
                for (int x = b; x != a; x = parent[static_cast<std::size_t>(x)])
                    p |= node_mask{1} << x;
                p |= node_mask{1} << a;
                paths_.push_back(p);
                ends_.push_back((node_mask{1} << a) | (node_mask{1} << b));
            }
        }
    }

    bool run(std::uint64_t& counter)
    {
        counter_ = &counter;
        return extend(0, 0, 0);
    }

    std::vector<node_set> witness() const
    {
        std::vector<node_set> out;
        for (node_mask p : assigned_) {
            node_set s;
            for (int q = 0; q < 64; ++q)
                if (p & (node_mask{1} << q))
                    s.push_back(q);
            out.push_back(std::move(s));
        }
        return out;
    }

private:
    bool extend(std::size_t depth, node_mask ends, node_mask singles)
    {
        std::size_t remaining = order_.size() - depth;
        if (static_cast<std::size_t>(std::popcount(thin_ & ~ends)) > 2 * remaining)
            return false;
        if (std::popcount(leaves_ & ~singles) > simplicial_left_[depth])
            return false;
        if (depth == order_.size())
            return true;
        vertex v = order_[depth];
        node_mask avoid = 0;
        for (std::size_t i = 0; i < depth; ++i) {
            vertex u = order_[i];
            if (!g_.adjacent(u, v))
                avoid |= assigned_[static_cast<std::size_t>(u)];
        }
        for (std::size_t k = 0; k < paths_.size(); ++k) {
            node_mask p = paths_[k];
            if (p & avoid)
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                vertex u = order_[i];
                if (g_.adjacent(u, v))
                    ok = (p & assigned_[static_cast<std::size_t>(u)]) != 0;
            }
            if (!ok)
                continue;
            ++*counter_;
            assigned_[static_cast<std::size_t>(v)] = p;
            node_mask single = std::has_single_bit(p) ? p : 0;
            if (extend(depth + 1, ends | ends_[k], singles | single))
                return true;
        }
        assigned_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const graph& g_;
    const std::vector<vertex>& order_;
    std::vector<node_mask> paths_, ends_;
    node_mask thin_ = 0;
    node_mask leaves_ = 0;
    std::vector<int> simplicial_left_; // simplicial vertices among order_[k..]
    std::vector<node_mask> assigned_;
    std::uint64_t* counter_ = nullptr;
};

// Most constrained first: each next vertex has the most already-placed neighbours.
inline std::vector<vertex> constrained_order(const graph& g)
{
    std::vector<vertex> order;
    vertex_mask placed = 0;
    while (static_cast<int>(order.size()) < g.order()) {
        vertex best = -1;
        std::pair<int, int> key{-1, -1};
        for_each_bit(g.vertices() & ~placed, [&](vertex v) {
            std::pair<int, int> k{popcount(g.neighbor_mask(v) & placed), g.degree(v)};
            if (k > key) {
                key = k;
                best = v;
            }
        });
        order.push_back(best);
        placed |= bit(best);
    }
    return order;
}

} // namespace detail

// Searches every free tree of at most `tree_size_bound` nodes and maximum
// degree at most h, and every assignment of one path per vertex.
inline oracle_verdict exists_representation(const graph& g, int h, int tree_size_bound)
{
    if (g.order() == 0)
        throw precondition_error("oracle needs a non-empty graph");
    if (h < 1 || tree_size_bound < 1)
        throw precondition_error("oracle needs h >= 1 and a positive tree size bound");
    if (tree_size_bound > 20)
        throw precondition_error("oracle tree size bound above 20 is not supported");

    oracle_verdict out;
    out.bound_used = tree_size_bound;
    if (!is_chordal(g)) {
        out.refuted_by_chordality = true;
        return out;
    }
    auto order = detail::constrained_order(g);
    for (int m = 1; m <= tree_size_bound; ++m) {
        for (const host_tree& t : free_trees(m)) {
            if (t.max_degree() > h)
                continue;
            ++out.trees_examined;
            detail::path_assignment_search search(g, t, order);
            if (search.run(out.assignments_examined)) {
                out.exists = true;
                out.witness = representation{t, search.witness()};
                return out;
            }
        }
    }
    return out;
}

// Smallest h >= 2 with a representation inside the bound, by binary search.
inline int min_h(const graph& g, int tree_size_bound)
{
    if (!is_chordal(g))
        throw not_vpt("not VPT: graph is not chordal");
    int lo = 2;
    int hi = std::max(2, tree_size_bound - 1);
    if (!exists_representation(g, hi, tree_size_bound).exists)
        throw bound_exhausted("not VPT within bound " + std::to_string(tree_size_bound));
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (exists_representation(g, mid, tree_size_bound).exists)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

inline int min_h(const graph& g) { return min_h(g, default_oracle_bound(g)); }

} // namespace vpt
