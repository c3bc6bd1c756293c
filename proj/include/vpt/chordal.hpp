#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "graph.hpp"
#include "representation.hpp"

namespace vpt {

inline constexpr std::uint64_t default_tree_budget = 1'000'000;

// Maximum cardinality search; returns a perfect elimination ordering when g is chordal.
inline std::optional<std::vector<vertex>> is_chordal(const graph& g)
{
    int n = g.order();
    std::vector<vertex> visit;
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    vertex_mask numbered = 0;
    for (int step = 0; step < n; ++step) {
        vertex best = -1;
        for_each_bit(g.vertices() & ~numbered, [&](vertex v) {
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;
        });
        visit.push_back(best);
        numbered |= bit(best);
        for_each_bit(g.neighbor_mask(best) & ~numbered, [&](vertex w) { ++weight[static_cast<std::size_t>(w)]; });
    }
    std::vector<vertex> peo(visit.rbegin(), visit.rend());
    // verify: the later neighbours of each vertex are complete
    vertex_mask later = g.vertices();
    for (vertex v : peo) {
        later &= ~bit(v);
        if (!is_complete_set(g, g.neighbor_mask(v) & later))
            return std::nullopt;
    }
    return peo;
}

struct clique_tree {
    std::vector<vertex_mask> cliques; // node i is cliques[i], in enumerate_cliques order
    std::vector<tree_edge> edges;
    std::vector<int> weights; // weights[k] = |C_a ∩ C_b| for edges[k]

    int total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }
};

// Every vertex's cliques induce a connected subtree.
inline bool has_induced_subtree_property(const graph& g, const clique_tree& t)
{
    host_tree host(static_cast<int>(t.cliques.size()), t.edges);
    for (vertex v = 0; v < g.order(); ++v) {
        node_set holding;
        for (std::size_t i = 0; i < t.cliques.size(); ++i)
            if (t.cliques[i] & bit(v))
                holding.push_back(static_cast<host_node>(i));
        if (holding.empty())
            return false;
        // connected inside `holding`: walk only through holding nodes
        std::vector<host_node> stack{holding.front()};
        node_set seen{holding.front()};
        while (!stack.empty()) {
            host_node x = stack.back();
            stack.pop_back();
            for (host_node y : host.neighbors(x))
                if (detail::contains(holding, y) && !detail::contains(seen, y)) {
                    seen.insert(std::upper_bound(seen.begin(), seen.end(), y), y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != holding.size())
            return false;
    }
    return true;
}

// Every vertex's cliques induce a path.
inline bool is_path_tree(const graph& g, const clique_tree& t)
{
    host_tree host(static_cast<int>(t.cliques.size()), t.edges);
    for (vertex v = 0; v < g.order(); ++v) {
        node_set holding;
        for (std::size_t i = 0; i < t.cliques.size(); ++i)
            if (t.cliques[i] & bit(v))
                holding.push_back(static_cast<host_node>(i));
        if (!is_host_path(host, holding))
            return false;
    }
    return true;
}

// Sum over edges of |C_a ∩ C_b| for any clique tree: each vertex's subtree on k_v nodes has k_v - 1 edges.
inline int clique_tree_weight_identity(const graph& g, const std::vector<vertex_mask>& cliques)
{
    int total = 0;
    for (vertex_mask c : cliques)
        total += popcount(c);
    return total - g.order();
}

enum class tree_shape {
    any,          // every maximum-weight spanning tree
    vertex_paths, // each vertex's cliques must induce a path
    host_path,    // the tree itself must be a path
};

namespace detail {

struct weighted_pair {
    int a, b, w;
};

struct union_find {
    std::vector<int> parent;
    explicit union_find(std::size_t n)
        : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

// Enumerates maximum-weight spanning trees of the clique intersection graph
// restricted to the cliques in `nodes` (which must induce a connected clique
// graph). Trees are produced weight level by weight level: within a level the
// chosen edges form a spanning forest of the graph contracted by heavier levels,
// and the choices at different levels are independent.
class mwst_search {
public:
    using visitor = std::function<bool(const std::vector<weighted_pair>&)>;

    mwst_search(const std::vector<vertex_mask>& cliques, const std::vector<int>& nodes, tree_shape shape, std::uint64_t& steps, std::uint64_t budget)
        : cliques_(cliques)
        , shape_(shape)
        , steps_(steps)
        , budget_(budget)
        , tree_degree_(cliques.size(), 0)
        , vertex_degree_(cliques.size(), std::vector<int>(max_vertices, 0))
    {
        std::map<int, std::vector<weighted_pair>, std::greater<>> by_weight;
        for (std::size_t x = 0; x < nodes.size(); ++x)
            for (std::size_t y = x + 1; y < nodes.size(); ++y) {
                int a = nodes[x], b = nodes[y];
                int w = popcount(cliques[static_cast<std::size_t>(a)] & cliques[static_cast<std::size_t>(b)]);
                if (w > 0)
                    by_weight[w].push_back({std::min(a, b), std::max(a, b), w});
            }
        for (auto& [w, level] : by_weight) {
            std::sort(level.begin(), level.end(), [](auto& l, auto& r) { return std::pair{l.a, l.b} < std::pair{r.a, r.b}; });
            levels_.push_back(std::move(level));
        }
    }

    // Calls `visit` per tree until it returns false; returns false if stopped early.
    bool run(const visitor& visit)
    {
        visit_ = &visit;
        union_find uf(cliques_.size());
        return next_level(0, uf);
    }

private:
    static int rank_gain(union_find uf, const std::vector<weighted_pair>& edges, std::size_t from)
    {
        int gain = 0;
        for (std::size_t k = from; k < edges.size(); ++k)
            gain += uf.unite(edges[k].a, edges[k].b) ? 1 : 0;
        return gain;
    }

    bool next_level(std::size_t level, const union_find& uf)
    {
        if (level == levels_.size())
            return (*visit_)(chosen_);
        int need = rank_gain(uf, levels_[level], 0);
        return pick(level, 0, uf, need);
    }

    bool allowed(const weighted_pair& e) const
    {
        auto ua = static_cast<std::size_t>(e.a), ub = static_cast<std::size_t>(e.b);
        if (shape_ == tree_shape::host_path)
            return tree_degree_[ua] < 2 && tree_degree_[ub] < 2;
        if (shape_ == tree_shape::vertex_paths) {
            bool ok = true;
            for_each_bit(cliques_[ua] & cliques_[ub], [&](vertex v) {
                auto uv = static_cast<std::size_t>(v);
                ok = ok && vertex_degree_[ua][uv] < 2 && vertex_degree_[ub][uv] < 2;
            });
            return ok;
        }
        return true;
    }

    void apply(const weighted_pair& e, int delta)
    {
        auto ua = static_cast<std::size_t>(e.a), ub = static_cast<std::size_t>(e.b);
        tree_degree_[ua] += delta;
        tree_degree_[ub] += delta;
        for_each_bit(cliques_[ua] & cliques_[ub], [&](vertex v) {
            vertex_degree_[ua][static_cast<std::size_t>(v)] += delta;
            vertex_degree_[ub][static_cast<std::size_t>(v)] += delta;
        });
    }

    bool pick(std::size_t level, std::size_t k, const union_find& uf, int need)
    {
        if (need == 0)
            return next_level(level + 1, uf);
        auto& edges = levels_[level];
        if (k == edges.size() || rank_gain(uf, edges, k) < need)
            return true;
        if (++steps_ > budget_)
            throw budget_exceeded("clique-tree search budget of " + std::to_string(budget_) + " steps exceeded");
        const auto& e = edges[k];
        union_find with = uf;
        if (with.find(e.a) != with.find(e.b) && allowed(e)) {
            with.unite(e.a, e.b);
            apply(e, +1);
            chosen_.push_back(e);
            bool go_on = pick(level, k + 1, with, need - 1);
            chosen_.pop_back();
            apply(e, -1);
            if (!go_on)
                return false;
        }
        return pick(level, k + 1, uf, need);
    }

    const std::vector<vertex_mask>& cliques_;
    tree_shape shape_;
    std::uint64_t& steps_;
    std::uint64_t budget_;
    std::vector<std::vector<weighted_pair>> levels_;
    std::vector<weighted_pair> chosen_;
    std::vector<int> tree_degree_;
    std::vector<std::vector<int>> vertex_degree_;
    const visitor* visit_ = nullptr;
};

// Clique indices grouped by the connected component of g they lie in.
inline std::vector<std::vector<int>> clique_groups(const graph& g, const std::vector<vertex_mask>& cliques)
{
    std::vector<std::vector<int>> out;
    for (vertex_mask comp : components(g)) {
        std::vector<int> group;
        for (std::size_t i = 0; i < cliques.size(); ++i)
            if (cliques[i] & comp)
                group.push_back(static_cast<int>(i));
        out.push_back(std::move(group));
    }
    return out;
}

// Joins per-component trees into one tree: the second end of each component
// is linked to the first end of the next. Ends are the lowest-index nodes of
// minimum degree, so no node gains more than one edge from the joining.
inline void join_components(const std::vector<std::vector<int>>& groups, std::vector<tree_edge>& edges, std::vector<int>& weights, std::size_t node_count)
{
    std::vector<int> degree(node_count, 0);
    for (auto e : edges) {
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
    }
    std::optional<int> previous_end;
    for (auto& group : groups) {
        std::vector<int> sorted = group;
        std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) { return degree[static_cast<std::size_t>(x)] < degree[static_cast<std::size_t>(y)]; });
        int first = sorted.front();
        int second = sorted.size() > 1 ? sorted[1] : first;
        if (previous_end) {
            edges.push_back({std::min(*previous_end, first), std::max(*previous_end, first)});
            weights.push_back(0);
        }
        previous_end = second;
    }
}

inline void require_chordal(const graph& g)
{
    if (!is_chordal(g))
        throw precondition_error("clique trees exist only for chordal graphs");
}

// First tree of the requested shape, or nullopt when none exists.
inline std::optional<clique_tree> first_tree(const graph& g, tree_shape shape, std::uint64_t budget)
{
    clique_tree out;
    out.cliques = clique_masks(g);
    std::uint64_t steps = 0;
    auto groups = clique_groups(g, out.cliques);
    for (auto& group : groups) {
        bool found = false;
        mwst_search search(out.cliques, group, shape, steps, budget);
        search.run([&](const std::vector<weighted_pair>& chosen) {
            for (auto& e : chosen) {
                out.edges.push_back({e.a, e.b});
                out.weights.push_back(e.w);
            }
            found = true;
            return false;
        });
        if (!found)
            return std::nullopt;
    }
    join_components(groups, out.edges, out.weights, out.cliques.size());
    return out;
}

} // namespace detail

// Calls `visit` on every clique tree (maximum-weight spanning tree of the
// clique intersection graph) in deterministic order until it returns false.
// Disconnected graphs get per-component trees joined by weight-0 edges.
inline void for_each_clique_tree(const graph& g, const std::function<bool(const clique_tree&)>& visit, std::uint64_t budget = default_tree_budget)
{
    detail::require_chordal(g);
    auto cliques = clique_masks(g);
    auto groups = detail::clique_groups(g, cliques);
    std::uint64_t steps = 0;
    std::vector<std::vector<detail::weighted_pair>> partial(groups.size());

    std::function<bool(std::size_t)> component = [&](std::size_t c) -> bool {
        if (c == groups.size()) {
            clique_tree t;
            t.cliques = cliques;
            for (auto& part : partial)
                for (auto& e : part) {
                    t.edges.push_back({e.a, e.b});
                    t.weights.push_back(e.w);
                }
            detail::join_components(groups, t.edges, t.weights, cliques.size());
            return visit(t);
        }
        detail::mwst_search search(cliques, groups[c], tree_shape::any, steps, budget);
        return search.run([&](const std::vector<detail::weighted_pair>& chosen) {
            partial[c] = chosen;
            return component(c + 1);
        });
    };
    component(0);
}

// Up to `limit` clique trees.
inline std::vector<clique_tree> clique_trees(const graph& g, std::size_t limit, std::uint64_t budget = default_tree_budget)
{
    std::vector<clique_tree> out;
    if (limit == 0)
        return out;
    for_each_clique_tree(g, [&](const clique_tree& t) {
        out.push_back(t);
        return out.size() < limit;
    }, budget);
    return out;
}

// A clique tree in which each vertex's cliques form a path, or nullopt.
// budget_exceeded is thrown when the search runs out of steps first.
inline std::optional<clique_tree> is_vpt(const graph& g, std::uint64_t budget = default_tree_budget)
{
    if (!is_chordal(g))
        return std::nullopt;
    return detail::first_tree(g, tree_shape::vertex_paths, budget);
}

// A clique tree that is itself a path (a clique path), or nullopt.
inline std::optional<clique_tree> is_interval(const graph& g, std::uint64_t budget = default_tree_budget)
{
    if (!is_chordal(g))
        return std::nullopt;
    return detail::first_tree(g, tree_shape::host_path, budget);
}

// Host tree = a path clique tree, P_v = the cliques holding v.
inline representation representation_from_tree(const graph& g, const clique_tree& t)
{
    representation r{host_tree(static_cast<int>(t.cliques.size()), t.edges), {}};
    for (vertex v = 0; v < g.order(); ++v) {
        node_set p;
        for (std::size_t i = 0; i < t.cliques.size(); ++i)
            if (t.cliques[i] & bit(v))
                p.push_back(static_cast<host_node>(i));
        r.paths.push_back(std::move(p));
    }
    return r;
}

inline representation canonical_representation(const graph& g, std::uint64_t budget = default_tree_budget)
{
    if (g.order() == 0)
        throw precondition_error("empty graph has no representation");
    auto t = is_vpt(g, budget);
    if (!t)
        throw not_vpt("graph is not VPT");
    return representation_from_tree(g, *t);
}

} // namespace vpt
