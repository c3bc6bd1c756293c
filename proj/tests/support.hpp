#pragma once

// Brute-force reference computations for small graphs. These deliberately
// share no code with the library beyond the graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "vpt/graph.hpp"
#include "vpt/representation.hpp"

namespace ref {

using vpt::graph;
using vpt::vertex;
using mask = std::uint64_t;

inline bool adj(const graph& g, int u, int v) { return g.adjacent(u, v); }

// smallest k with a proper k-coloring, by trying every assignment
inline int chi(const graph& g)
{
    int n = g.order();
    if (n == 0)
        return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        while (true) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (adj(g, u, v) && c[u] == c[v])
                        ok = false;
            if (ok)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

inline bool complete(const graph& g, mask s)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((s >> u & 1) && (s >> v & 1) && !adj(g, u, v))
                return false;
    return true;
}

// maximal cliques as masks, ascending numeric order
inline std::vector<mask> cliques(const graph& g)
{
    int n = g.order();
    std::vector<mask> out;
    for (mask s = 1; s < (mask{1} << n); ++s) {
        if (!complete(g, s))
            continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(s >> v & 1) && complete(g, s | mask{1} << v))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

// no induced cycle of length >= 4
inline bool chordal(const graph& g)
{
    int n = g.order();
    for (mask s = 1; s < (mask{1} << n); ++s) {
        int size = std::popcount(s);
        if (size < 4)
            continue;
        bool all_two = true;
        for (int v = 0; v < n && all_two; ++v) {
            if (!(s >> v & 1))
                continue;
            int d = 0;
            for (int w = 0; w < n; ++w)
                if ((s >> w & 1) && adj(g, v, w))
                    ++d;
            all_two = d == 2;
        }
        if (!all_two)
            continue;
        // 2-regular: a cycle iff connected
        int start = std::countr_zero(s);
        mask seen = mask{1} << start, frontier = seen;
        while (frontier) {
            mask next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1)
                    for (int w = 0; w < n; ++w)
                        if ((s >> w & 1) && adj(g, v, w) && !(seen >> w & 1))
                            next |= mask{1} << w;
            seen |= next;
            frontier = next;
        }
        if (seen == s)
            return false;
    }
    return true;
}

inline bool isomorphic(const graph& a, const graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                ok = adj(a, u, v) == adj(b, p[u], p[v]);
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Branch graph adjacency straight from its four clauses.
inline bool branch_edge(const graph& g, mask c, int v, int w)
{
    auto nc = [&](int x) {
        mask m = 0;
        for (int y = 0; y < g.order(); ++y)
            if ((c >> y & 1) && adj(g, x, y))
                m |= mask{1} << y;
        return m;
    };
    mask a = nc(v), b = nc(w);
    return !adj(g, v, w) && (a & b) && (a & ~b) && (b & ~a);
}

// carrier of B(G/C): outside vertices with a neighbour in C
inline std::vector<int> branch_vertices(const graph& g, mask c)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (c >> v & 1)
            continue;
        for (int y = 0; y < g.order(); ++y)
            if ((c >> y & 1) && adj(g, v, y)) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

inline graph random_graph(int n, double p, std::mt19937_64& rng)
{
    graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline graph relabel(const graph& g, const std::vector<int>& p)
{
    graph out(g.order());
    for (auto e : g.edges())
        out.add_edge(p[e.u], p[e.v]);
    return out;
}

// Random tree on m nodes: node k attaches to an earlier node, optionally
// forcing node 0 to degree `hub` first.
inline vpt::host_tree random_tree(int m, std::mt19937_64& rng, int hub = 0)
{
    std::vector<vpt::tree_edge> es;
    for (int k = 1; k < m; ++k) {
        int parent = k <= hub ? 0 : static_cast<int>(rng() % static_cast<unsigned>(k));
        es.push_back({parent, k});
    }
    return vpt::host_tree(m, es);
}

// Nodes on the tree path between a and b, ascending.
inline vpt::node_set tree_path(const vpt::host_tree& t, int a, int b)
{
    std::vector<int> parent(static_cast<std::size_t>(t.node_count()), -1);
    std::vector<int> queue{a};
    parent[a] = a;
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int y : t.neighbors(queue[k]))
            if (parent[y] < 0) {
                parent[y] = queue[k];
                queue.push_back(y);
            }
    vpt::node_set out{a};
    for (int x = b; x != a; x = parent[x])
        out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

inline vpt::representation random_representation(const vpt::host_tree& t, int vertices, std::mt19937_64& rng)
{
    vpt::representation r{t, {}};
    for (int v = 0; v < vertices; ++v) {
        int a = static_cast<int>(rng() % static_cast<unsigned>(t.node_count()));
        int b = static_cast<int>(rng() % static_cast<unsigned>(t.node_count()));
        r.paths.push_back(tree_path(t, a, b));
    }
    return r;
}

inline graph intersection_graph(const vpt::representation& r)
{
    int n = static_cast<int>(r.paths.size());
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = false;
            for (int x : r.paths[u])
                meet = meet || std::find(r.paths[v].begin(), r.paths[v].end(), x) != r.paths[v].end();
            if (meet)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace ref
