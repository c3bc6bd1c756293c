#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "representation.hpp"

namespace vpt {

namespace detail {

inline std::string ahu_code(const std::vector<std::vector<int>>& adj, int root, int parent)
{
    std::vector<std::string> kids;
    for (int c : adj[static_cast<std::size_t>(root)])
        if (c != parent)
            kids.push_back(ahu_code(adj, c, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids)
        out += k;
    return out + ")";
}

inline std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj)
{
    std::size_t n = adj.size();
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1)
            layer.push_back(static_cast<int>(v));
    }
    std::size_t left = n;
    while (left > 2) {
        left -= layer.size();
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace detail

// Isomorphism-invariant code of a free tree: AHU string from its centre(s).
inline std::string canonical_tree_code(const host_tree& t)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.node_count()));
    for (int v = 0; v < t.node_count(); ++v)
        adj[static_cast<std::size_t>(v)] = t.neighbors(v);
    std::string best;
    for (int c : detail::tree_centers(adj)) {
        std::string code = detail::ahu_code(adj, c, -1);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

// All free trees on `nodes` nodes, one per isomorphism class, ordered by
// canonical code. Built by leaf augmentation from the previous size and
// deduplicated on the canonical code; results are cached per size.
inline const std::vector<host_tree>& free_trees(int nodes)
{
    if (nodes < 1 || nodes > 20)
        throw precondition_error("free tree enumeration supports 1..20 nodes");
    static std::mutex lock;
    static std::deque<std::vector<host_tree>> cache; // deque keeps returned references valid
    std::lock_guard guard(lock);
    if (cache.empty())
        cache.push_back({host_tree(1, {})});
    while (static_cast<int>(cache.size()) < nodes) {
        int m = static_cast<int>(cache.size()) + 1;
        std::map<std::string, host_tree> unique;
        for (const host_tree& t : cache.back()) {
            for (int x = 0; x < t.node_count(); ++x) {
                auto edges = t.edges();
                edges.push_back({x, m - 1});
                host_tree grown(m, std::move(edges));
                unique.emplace(canonical_tree_code(grown), std::move(grown));
            }
        }
        std::vector<host_tree> level;
        level.reserve(unique.size());
        for (auto& [code, t] : unique)
            level.push_back(std::move(t));
        cache.push_back(std::move(level));
    }
    return cache[static_cast<std::size_t>(nodes - 1)];
}

} // namespace vpt
