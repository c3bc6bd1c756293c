#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "vpt/chordal.hpp"
#include "vpt/gh.hpp"

using namespace vpt;

namespace {

using edge_set = std::set<std::pair<int, int>>;

edge_set as_set(const std::vector<tree_edge>& es)
{
    edge_set out;
    for (auto e : es)
        out.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    return out;
}

// Every spanning tree on the cliques with the induced-subtree property,
// found by trying all (k-1)-subsets of clique pairs.
std::set<edge_set> brute_clique_trees(const graph& g)
{
    auto cl = ref::cliques(g);
    std::sort(cl.begin(), cl.end(), detail::lex_less);
    int k = static_cast<int>(cl.size());
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            pairs.push_back({a, b});
    std::set<edge_set> out;
    if (k == 1) {
        out.insert(edge_set{});
        return out;
    }
    int p = static_cast<int>(pairs.size());
    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k - 1) {
            std::vector<tree_edge> es;
            for (int i : pick)
                es.push_back({pairs[i].first, pairs[i].second});
            // spanning tree check by union-find
            std::vector<int> parent(static_cast<std::size_t>(k));
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
            for (auto e : es) {
                int a = find(e.a), b = find(e.b);
                if (a == b)
                    return;
                parent[a] = b;
            }
            for (vertex v = 0; v < g.order(); ++v) {
                // cliques holding v must be connected through edges among them
                std::vector<int> holding;
                for (int i = 0; i < k; ++i)
                    if (cl[i] >> v & 1)
                        holding.push_back(i);
                std::iota(parent.begin(), parent.end(), 0);
                for (auto e : es)
                    if ((cl[e.a] >> v & 1) && (cl[e.b] >> v & 1))
                        parent[find(e.a)] = find(e.b);
                for (int i : holding)
                    if (find(i) != find(holding[0]))
                        return;
            }
            out.insert(as_set(es));
            return;
        }
        for (int i = start; i < p; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::set<edge_set> all_trees(const graph& g)
{
    std::set<edge_set> out;
    for_each_clique_tree(g, [&](const clique_tree& t) {
        out.insert(as_set(t.edges));
        return true;
    });
    return out;
}

graph random_chordal(int n, std::mt19937_64& rng)
{
    // add vertices one at a time, each joined to a clique of the current graph
    graph g(n);
    for (vertex v = 1; v < n; ++v) {
        vertex anchor = static_cast<vertex>(rng() % static_cast<unsigned>(v));
        vertex_mask nb = bit(anchor);
        for_each_bit(g.neighbor_mask(anchor) & low_bits(v), [&](vertex w) {
            if (rng() % 2 && is_complete_set(g, nb | bit(w)))
                nb |= bit(w);
        });
        for_each_bit(nb, [&](vertex w) { g.add_edge(v, w); });
    }
    return g;
}

} // namespace

TEST(Chordal, Recognition)
{
    EXPECT_TRUE(is_chordal(named::star(4)));
    EXPECT_TRUE(is_chordal(named::path(6)));
    EXPECT_FALSE(is_chordal(named::cycle(4)));
    EXPECT_FALSE(is_chordal(named::cycle(5)));
    auto peo = is_chordal(build_gh(named::complete(4)).g);
    ASSERT_TRUE(peo);
    EXPECT_EQ(peo->size(), 10u);
}

TEST(Chordal, PeoIsValid)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        graph g = ref::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
        auto peo = is_chordal(g);
        ASSERT_EQ(peo.has_value(), ref::chordal(g)) << to_graph6(g);
        if (!peo)
            continue;
        // each vertex's later neighbours form a complete set
        std::vector<int> pos(static_cast<std::size_t>(g.order()));
        for (std::size_t k = 0; k < peo->size(); ++k)
            pos[(*peo)[k]] = static_cast<int>(k);
        for (vertex v = 0; v < g.order(); ++v) {
            vertex_mask later = 0;
            for_each_bit(g.neighbor_mask(v), [&](vertex w) {
                if (pos[w] > pos[v])
                    later |= bit(w);
            });
            EXPECT_TRUE(ref::complete(g, later));
        }
    }
}

TEST(CliqueTrees, Fixtures)
{
    auto k4 = clique_trees(named::complete(4), 10);
    ASSERT_EQ(k4.size(), 1u);
    EXPECT_EQ(k4[0].cliques.size(), 1u);
    EXPECT_TRUE(k4[0].edges.empty());

    auto p4 = clique_trees(named::path(4), 10);
    ASSERT_EQ(p4.size(), 1u);
    EXPECT_EQ(p4[0].cliques.size(), 3u);
    EXPECT_EQ(p4[0].total_weight(), 2);
    EXPECT_TRUE(is_path_tree(named::path(4), p4[0]));

    // G_{K_2}: central clique plus two stable cliques, each meeting it in 2 vertices
    graph gk2 = build_gh(named::complete(2)).g;
    auto trees = clique_trees(gk2, 10);
    ASSERT_EQ(trees.size(), 1u);
    EXPECT_EQ(trees[0].cliques.size(), 3u);
    EXPECT_EQ(trees[0].total_weight(), clique_tree_weight_identity(gk2, trees[0].cliques));

    EXPECT_THROW(clique_trees(named::cycle(4), 1), precondition_error);
}

TEST(CliqueTrees, StarHasManyTrees)
{
    // K_{1,4}: four edge-cliques sharing the centre; any spanning tree works
    auto trees = clique_trees(named::star(4), 100);
    EXPECT_EQ(trees.size(), 16u); // Cayley: 4^(4-2)
    EXPECT_EQ(clique_trees(named::star(4), 5).size(), 5u);
}

TEST(CliqueTrees, EqualBruteForceEnumeration)
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 150; ++i) {
        graph g = random_chordal(2 + static_cast<int>(rng() % 7), rng);
        auto got = all_trees(g);
        if (is_connected(g))
            EXPECT_EQ(got, brute_clique_trees(g)) << to_graph6(g);
        for (auto& t : clique_trees(g, 50)) {
            EXPECT_TRUE(has_induced_subtree_property(g, t));
            EXPECT_EQ(t.total_weight(), clique_tree_weight_identity(g, t.cliques));
        }
    }
}

TEST(CliqueTrees, BudgetExceeded)
{
    EXPECT_THROW(clique_trees(named::star(8), 100000, 50), budget_exceeded);
}

TEST(Vpt, Recognition)
{
    EXPECT_TRUE(is_vpt(named::path(5)));
    EXPECT_TRUE(is_interval(named::path(5)));
    EXPECT_FALSE(is_vpt(named::cycle(4)));
    EXPECT_TRUE(is_vpt(build_gh(named::wheel(5)).g));
    EXPECT_FALSE(is_interval(build_gh(named::wheel(5)).g));
    // claw: three edge-cliques chained through the centre
    EXPECT_TRUE(is_interval(named::star(3)));
    EXPECT_TRUE(is_interval(named::star(4)));
    EXPECT_FALSE(is_interval(build_gh(named::path(3)).g));
}

TEST(Vpt, AgreesWithBruteForceTrees)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        graph g = random_chordal(2 + static_cast<int>(rng() % 7), rng);
        if (!is_connected(g))
            continue;
        bool any_path_tree = false, any_host_path = false;
        for (auto& es : brute_clique_trees(g)) {
            clique_tree t;
            t.cliques = clique_masks(g);
            std::vector<int> deg(t.cliques.size());
            for (auto [a, b] : es) {
                t.edges.push_back({a, b});
                ++deg[a];
                ++deg[b];
            }
            any_path_tree = any_path_tree || is_path_tree(g, t);
            any_host_path = any_host_path || *std::max_element(deg.begin(), deg.end()) <= 2;
        }
        EXPECT_EQ(is_vpt(g).has_value(), any_path_tree) << to_graph6(g);
        EXPECT_EQ(is_interval(g).has_value(), any_host_path) << to_graph6(g);
    }
}

TEST(Vpt, CanonicalRepresentation)
{
    auto k3 = canonical_representation(named::complete(3));
    EXPECT_EQ(k3.host.node_count(), 1);
    for (auto& p : k3.paths)
        EXPECT_EQ(p, (node_set{0}));

    auto p4 = canonical_representation(named::path(4));
    EXPECT_EQ(p4.host.node_count(), 3);
    EXPECT_LE(p4.host.max_degree(), 2);
    EXPECT_EQ(p4.paths[1].size(), 2u);
    EXPECT_EQ(p4.paths[2].size(), 2u);
    EXPECT_TRUE(verify_representation(named::path(4), p4));

    graph gk4 = build_gh(named::complete(4)).g;
    auto r = canonical_representation(gk4);
    EXPECT_EQ(r.host.node_count(), 5);
    EXPECT_TRUE(verify_representation(gk4, r));
    EXPECT_THROW(canonical_representation(named::cycle(4)), not_vpt);
}

TEST(Vpt, DisconnectedInputs)
{
    graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    auto r = canonical_representation(g);
    EXPECT_TRUE(verify_representation(g, r));
    EXPECT_TRUE(is_interval(g));
}
