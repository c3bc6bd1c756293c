#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace vpt {

inline constexpr int default_isomorphism_cap = 40;

// mapping[v] = image of v in the second graph
using vertex_bijection = std::vector<vertex>;

inline bool is_isomorphism(const graph& a, const graph& b, const vertex_bijection& f)
{
    if (a.order() != b.order() || f.size() != static_cast<std::size_t>(a.order()))
        return false;
    vertex_mask image = 0;
    for (vertex x : f) {
        if (x < 0 || x >= b.order() || (image & bit(x)))
            return false;
        image |= bit(x);
    }
    for (vertex u = 0; u < a.order(); ++u)
        for (vertex v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v) != b.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

namespace detail {

// Colour refinement run on both graphs at once so colour ids are comparable.
inline std::pair<std::vector<int>, std::vector<int>> refine_jointly(const graph& a, const graph& b)
{
    const graph* gs[2] = {&a, &b};
    std::vector<int> col[2];
    for (int s = 0; s < 2; ++s)
        col[s].assign(static_cast<std::size_t>(gs[s]->order()), 0);
    std::size_t classes = 1;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig[2];
        for (int s = 0; s < 2; ++s) {
            for (vertex v = 0; v < gs[s]->order(); ++v) {
                std::vector<int> around;
                for_each_bit(gs[s]->neighbor_mask(v), [&](vertex w) { around.push_back(col[s][static_cast<std::size_t>(w)]); });
                std::sort(around.begin(), around.end());
                sig[s].emplace_back(col[s][static_cast<std::size_t>(v)], std::move(around));
                ids.emplace(sig[s].back(), 0);
            }
        }
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        for (int s = 0; s < 2; ++s)
            for (std::size_t v = 0; v < sig[s].size(); ++v)
                col[s][v] = ids.at(sig[s][v]);
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return {std::move(col[0]), std::move(col[1])};
}

class iso_search {
public:
    iso_search(const graph& a, const graph& b, std::vector<int> ca, std::vector<int> cb)
        : a_(a)
        , b_(b)
        , ca_(std::move(ca))
        , cb_(std::move(cb))
        , f_(static_cast<std::size_t>(a.order()), -1)
    {
        // small colour classes first, then stay adjacent to what is already placed
        std::map<int, int> class_size;
        for (int c : ca_)
            ++class_size[c];
        vertex_mask placed = 0;
        while (static_cast<int>(order_.size()) < a.order()) {
            vertex best = -1;
            std::tuple<int, int, int> key{};
            for_each_bit(a.vertices() & ~placed, [&](vertex v) {
                std::tuple<int, int, int> k{-popcount(a.neighbor_mask(v) & placed), class_size[ca_[static_cast<std::size_t>(v)]], v};
                if (best < 0 || k < key) {
                    best = v;
                    key = k;
                }
            });
            order_.push_back(best);
            placed |= bit(best);
        }
    }

    std::optional<vertex_bijection> run()
    {
        if (extend(0, 0))
            return f_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth, vertex_mask used)
    {
        if (depth == order_.size())
            return true;
        vertex v = order_[depth];
        for (vertex w = 0; w < b_.order(); ++w) {
            if ((used & bit(w)) || cb_[static_cast<std::size_t>(w)] != ca_[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                vertex u = order_[i];
                ok = a_.adjacent(v, u) == b_.adjacent(w, f_[static_cast<std::size_t>(u)]);
            }
            if (!ok)
                continue;
            f_[static_cast<std::size_t>(v)] = w;
            if (extend(depth + 1, used | bit(w)))
                return true;
            f_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const graph& a_;
    const graph& b_;
    std::vector<int> ca_, cb_;
    std::vector<vertex> order_;
    vertex_bijection f_;
};

} // namespace detail

// Backtracking over colour-refined candidate classes.
inline std::optional<vertex_bijection> is_isomorphic(const graph& a, const graph& b, int cap = default_isomorphism_cap)
{
    if (a.order() > cap || b.order() > cap)
        throw cap_exceeded("isomorphism cap exceeded: " + std::to_string(std::max(a.order(), b.order())) + " vertices > cap " + std::to_string(cap));
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    auto [ca, cb] = detail::refine_jointly(a, b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return std::nullopt;
    return detail::iso_search(a, b, std::move(ca), std::move(cb)).run();
}

} // namespace vpt
