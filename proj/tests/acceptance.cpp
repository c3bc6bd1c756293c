// Acceptance suite: one PASS/FAIL line per criterion.
// usage: vpt_acceptance <connected_upto7.g6>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "vpt/vpt.hpp"

using namespace vpt;

namespace {

struct outcome {
    bool pass = false;
    std::string detail;
};

struct fixture {
    std::string name;
    graph h;
    int host_degree; // h with G_H minimal non-[h,2,1]
};

std::vector<fixture> certified_fixtures()
{
    return {{"K4", named::complete(4), 3}, {"W5", named::wheel(5), 3}, {"K5", named::complete(5), 4}};
}

// every vertex and edge deletion lowers chi, by exhaustive coloring
bool critical_by_reference(const graph& h, int k)
{
    if (ref::chi(h) != k)
        return false;
    for (vertex v = 0; v < h.order(); ++v)
        if (ref::chi(delete_vertex(h, v).g) != k - 1)
            return false;
    for (auto e : h.edges()) {
        graph less = h;
        less.remove_edge(e.u, e.v);
        if (ref::chi(less) != k - 1)
            return false;
    }
    return true;
}

std::vector<graph> read_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    graph_reader reader(in);
    std::vector<graph> out;
    while (auto it = reader.next()) {
        if (!it->g)
            throw std::runtime_error("corpus line " + std::to_string(it->line) + ": " + it->error);
        out.push_back(*it->g);
    }
    return out;
}

outcome gh_construction()
{
    std::vector<std::pair<std::string, graph>> sources{
        {"K2", named::complete(2)}, {"P3", named::path(3)}, {"C5", named::cycle(5)}, {"K4", named::complete(4)},
        {"W5", named::wheel(5)}, {"K5", named::complete(5)}, {"Petersen", named::petersen()}};
    for (auto& [name, h] : sources) {
        auto gh = build_gh(h);
        auto rep = verify_gh_lemma(gh);
        for (auto& c : rep.checks)
            if (!c.pass)
                return {false, name + ": " + c.id + " " + c.detail};
        // B(G_H/K_H) against the clause definition, edge for edge
        auto stable = gh.stable_set();
        auto k = to_mask(gh.central_clique());
        if (ref::branch_vertices(gh.g, k) != std::vector<int>(stable.begin(), stable.end()))
            return {false, name + ": branch vertices differ from S_H"};
        for (std::size_t a = 0; a < stable.size(); ++a)
            for (std::size_t b = a + 1; b < stable.size(); ++b)
                if (ref::branch_edge(gh.g, k, stable[a], stable[b]) != h.adjacent(static_cast<vertex>(a), static_cast<vertex>(b)))
                    return {false, name + ": branch edge mismatch"};
    }
    return {true, std::to_string(sources.size()) + " sources"};
}

struct perturbation_tally {
    int total = 0, rejected = 0, outside_scope = 0, certified = 0, errors = 0;
    std::string first_error;

    void run(const graph& g, int h)
    {
        ++total;
        try {
            if (certify_minimal(g, h))
                ++certified;
            else
                ++rejected;
        } catch (const not_vpt&) {
            ++outside_scope;
        } catch (const std::exception& e) {
            if (errors++ == 0)
                first_error = to_graph6(g) + ": " + e.what();
        }
    }
};

outcome minimal_certification(std::vector<std::pair<graph, certification>>& certified)
{
    std::ostringstream detail;
    bool ok = true;
    for (auto& f : certified_fixtures()) {
        auto crit = criticality(f.h);
        if (!crit.critical() || crit.chi != f.host_degree + 1)
            return {false, f.name + " is not " + std::to_string(f.host_degree + 1) + "-critical"};
        graph g = build_gh(f.h).g;
        auto c = certify_minimal(g, f.host_degree);
        if (!c)
            return {false, f.name + ": " + c.reason};
        certified.emplace_back(g, std::move(c));

        perturbation_tally t;
        int n = g.order();
        for (vertex v = 0; v < n; ++v)
            t.run(delete_vertex(g, v).g, f.host_degree);
        for (vertex a = 0; a < n; ++a)
            for (vertex b = a + 1; b < n; ++b) {
                graph p = g;
                if (p.adjacent(a, b))
                    p.remove_edge(a, b);
                else
                    p.add_edge(a, b);
                t.run(p, f.host_degree);
            }
        // a new vertex with every possible neighbourhood
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            graph p(n + 1);
            for (auto e : g.edges())
                p.add_edge(e.u, e.v);
            for (vertex v = 0; v < n; ++v)
                if (m >> v & 1)
                    p.add_edge(n, v);
            t.run(p, f.host_degree);
        }
        ok = ok && t.certified == 0 && t.errors == 0;
        if (!detail.str().empty())
            detail << "; ";
        detail << f.name << " h=" << f.host_degree << ": " << t.total << " perturbations, " << t.rejected << " rejected, "
               << t.outside_scope << " non-VPT, " << t.certified << " certified, " << t.errors << " errors";
        if (t.errors)
            detail << " (" << t.first_error << ")";
    }
    return {ok, detail.str()};
}

outcome extract_round_trip(const std::vector<std::pair<graph, certification>>& certified)
{
    if (certified.size() != certified_fixtures().size())
        return {false, "missing certificates"};
    std::mt19937_64 rng(101);
    auto fixtures = certified_fixtures();
    for (std::size_t i = 0; i < certified.size(); ++i) {
        auto& f = fixtures[i];
        auto& [g, c] = certified[i];
        auto& x = c.certificate->characterization;
        if (!is_isomorphism(g, x.rebuilt.g, x.iso))
            return {false, f.name + ": certificate bijection is not an isomorphism"};
        if (!ref::isomorphic(x.h, f.h))
            return {false, f.name + ": recovered H differs"};
        if (!critical_by_reference(x.h, f.host_degree + 1))
            return {false, f.name + ": recovered H is not (h+1)-critical"};
        // again from a relabelled copy
        std::vector<int> p(static_cast<std::size_t>(g.order()));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        graph shuffled = ref::relabel(g, p);
        auto y = extract_h(shuffled);
        if (!y || !is_isomorphism(shuffled, y->rebuilt.g, y->iso) || !ref::isomorphic(y->h, f.h))
            return {false, f.name + ": relabelled copy does not round-trip"};
    }
    return {true, std::to_string(certified.size()) + " certificates"};
}

outcome battery_on_certificates(const std::vector<std::pair<graph, certification>>& certified)
{
    if (certified.empty())
        return {false, "no certificates"};
    for (auto& [g, c] : certified) {
        int h = c.certificate->h;
        const auto& b = c.certificate->battery;
        if (b.conditions.size() != 10 || !b.all_pass())
            return {false, to_graph6(g) + ": battery fails"};
        auto fresh = structural_battery(g, h);
        for (auto& cond : fresh.conditions)
            if (!cond.pass)
                return {false, to_graph6(g) + ": " + cond.id + " " + cond.witness};

        // split counts recomputed from the clause definition
        if (!fresh.split)
            return {false, "no split partition"};
        auto k = to_mask(fresh.split->clique);
        for (vertex x : fresh.split->clique) {
            int seen = 0;
            for (vertex y : fresh.split->stable)
                seen += g.adjacent(x, y);
            if (seen != 2)
                return {false, g.label(x) + " has " + std::to_string(seen) + " stable neighbours"};
        }
        auto bv = ref::branch_vertices(g, k);
        graph carrier(static_cast<int>(bv.size()));
        for (std::size_t a = 0; a < bv.size(); ++a)
            for (std::size_t d = a + 1; d < bv.size(); ++d)
                if (ref::branch_edge(g, k, bv[a], bv[d]))
                    carrier.add_edge(static_cast<vertex>(a), static_cast<vertex>(d));
        if (carrier.size() != fresh.split->clique.size())
            return {false, "|E(B(G/K))| != |K|"};
        if (!critical_by_reference(carrier, h + 1))
            return {false, "B(G/K) is not (h+1)-critical"};
        // K - {x} stays a clique of G - x
        for (vertex x : fresh.split->clique) {
            auto d = delete_vertex(g, x);
            vertex_mask rest = 0;
            for (vertex y : fresh.split->clique)
                if (y != x)
                    rest |= bit(d.to_new(y));
            auto cl = ref::cliques(d.g);
            if (std::find(cl.begin(), cl.end(), rest) == cl.end())
                return {false, "K - " + g.label(x) + " is not a maximal clique of G - " + g.label(x)};
        }
    }
    return {true, std::to_string(certified.size()) + " certificates, 10 conditions each"};
}

outcome oracle_equivalence(const std::vector<graph>& corpus, int jobs)
{
    struct row {
        int classified = 0; // h*, 0 for not VPT
        int oracle = 0;     // min h, 0 for no representation
        std::string error;
    };
    auto rows = parallel_map(corpus, jobs, [](const graph& g) {
        row r;
        try {
            r.classified = classify(g).h_star;
        } catch (const not_vpt&) {
        } catch (const std::exception& e) {
            r.error = std::string("classify: ") + e.what();
        }
        try {
            r.oracle = min_h(g);
        } catch (const not_vpt&) {
        } catch (const bound_exhausted&) {
        } catch (const std::exception& e) {
            r.error += std::string(" oracle: ") + e.what();
        }
        return r;
    });
    std::size_t vpt = 0, disagree = 0, errors = 0;
    std::map<int, int> hist;
    std::string first;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& r = rows[i];
        if (!r.error.empty()) {
            if (errors++ == 0)
                first = to_graph6(corpus[i]) + " " + r.error;
            continue;
        }
        if (r.classified != r.oracle) {
            if (disagree++ == 0 && first.empty())
                first = to_graph6(corpus[i]) + " classify " + std::to_string(r.classified) + " oracle " + std::to_string(r.oracle);
        }
        if (r.classified) {
            ++vpt;
            ++hist[r.classified];
        }
    }
    std::ostringstream detail;
    detail << corpus.size() << " graphs, " << vpt << " VPT (";
    for (auto it = hist.begin(); it != hist.end(); ++it)
        detail << (it == hist.begin() ? "" : " ") << "h*=" << it->first << ": " << it->second;
    detail << "), " << disagree << " disagreements, " << errors << " errors";
    if (!first.empty())
        detail << "; first: " << first;
    return {corpus.size() > 0 && disagree == 0 && errors == 0, detail.str()};
}

outcome branch_deletion_sweep()
{
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::size_t pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        graph g = ref::random_graph(1 + static_cast<int>(rng() % 8), density(rng), rng);
        for (auto c : enumerate_cliques(g)) {
            vertex_mask cm = to_mask(c);
            auto whole = ref::branch_vertices(g, cm);
            for (vertex v = 0; v < g.order(); ++v) {
                if (cm & bit(v))
                    continue;
                ++pairs;
                auto d = branch_deletion_identity(g, c, v);
                bool inside = std::find(whole.begin(), whole.end(), v) != whole.end();
                if (!d.holds || d.v_in_branch_graph != inside)
                    return {false, to_graph6(g) + ": identity fails at v=" + std::to_string(v)};
                // B(G-v/C) from the clause definition, back in G's ids
                auto s = delete_vertex(g, v);
                vertex_mask cs = 0;
                for (vertex x : c)
                    cs |= bit(s.to_new(x));
                std::vector<vertex> lhs_v;
                for (int x : ref::branch_vertices(s.g, cs))
                    lhs_v.push_back(s.new_to_old[static_cast<std::size_t>(x)]);
                std::vector<edge> lhs_e;
                for (std::size_t a = 0; a < lhs_v.size(); ++a)
                    for (std::size_t b = a + 1; b < lhs_v.size(); ++b)
                        if (ref::branch_edge(s.g, cs, s.to_new(lhs_v[a]), s.to_new(lhs_v[b])))
                            lhs_e.push_back({lhs_v[a], lhs_v[b]});
                // B(G/C), minus v when v belongs to it
                std::vector<vertex> rhs_v;
                for (int x : whole)
                    if (x != v)
                        rhs_v.push_back(x);
                std::vector<edge> rhs_e;
                for (std::size_t a = 0; a < rhs_v.size(); ++a)
                    for (std::size_t b = a + 1; b < rhs_v.size(); ++b)
                        if (ref::branch_edge(g, cm, rhs_v[a], rhs_v[b]))
                            rhs_e.push_back({rhs_v[a], rhs_v[b]});
                if (lhs_v != rhs_v || lhs_e != rhs_e || d.lhs_edges != lhs_e || d.lhs_vertices != lhs_v)
                    return {false, to_graph6(g) + ": reference sides differ at v=" + std::to_string(v)};
            }
        }
    }
    return {true, "1000 graphs, " + std::to_string(pairs) + " (clique, vertex) pairs"};
}

outcome degree_reduction_rewrite()
{
    std::mt19937_64 rng(107);
    int built = 0, attempts = 0;
    while (built < 100) {
        if (++attempts > 100000)
            return {false, "could only construct " + std::to_string(built) + " representations"};
        int hub = 4 + static_cast<int>(rng() % 3);
        auto t = ref::random_tree(hub + 1 + static_cast<int>(rng() % 6), rng, hub);
        hub = t.degree(0); // later nodes may attach to node 0 as well
        auto r = ref::random_representation(t, 4 + static_cast<int>(rng() % 8), rng);
        bool unlinked = false;
        for (int i = 0; i < hub && !unlinked; ++i)
            for (int j = i + 1; j < hub && !unlinked; ++j)
                unlinked = links(r, 0, i, j).empty();
        if (!unlinked)
            continue;
        ++built;
        graph g = ref::intersection_graph(r);
        auto red = reduce_degree(r, 0);
        auto& out = red.result;
        std::string tag = "representation " + std::to_string(built) + ": ";
        if (!verify_representation(g, out) || !(ref::intersection_graph(out) == g))
            return {false, tag + "represented graph changed"};
        if (out.host.node_count() != t.node_count() + 1 || red.new_node != t.node_count())
            return {false, tag + "expected exactly one new node"};
        if (out.host.degree(red.new_node) != 3 || out.host.degree(0) != hub - 1)
            return {false, tag + "degree of q or q' is off"};
        for (host_node x = 1; x < t.node_count(); ++x)
            if (out.host.degree(x) != t.degree(x))
                return {false, tag + "degree of node " + std::to_string(x) + " changed"};
    }
    return {true, "100 representations from " + std::to_string(attempts) + " draws"};
}

outcome branch_index_coloring(const std::vector<graph>& corpus, int jobs)
{
    struct row {
        int nodes = 0;
        std::string failure;
    };
    auto rows = parallel_map(corpus, jobs, [](const graph& g) {
        row out;
        if (!is_vpt(g))
            return out;
        auto r = canonical_representation(g);
        for (host_node q = 0; q < r.host.node_count(); ++q) {
            ++out.nodes;
            auto cq = to_mask(complete_at(r, q));
            auto branches = branches_at(r, q);
            auto bv = ref::branch_vertices(g, cq);
            std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
            std::set<int> used;
            for (int v : bv) {
                color[v] = branch_containing(branches, r.paths[v]);
                if (color[v] < 0) {
                    out.failure = "vertex " + std::to_string(v) + " spans several branches at node " + std::to_string(q);
                    return out;
                }
                used.insert(color[v]);
            }
            if (static_cast<int>(used.size()) > r.host.degree(q)) {
                out.failure = "more colours than deg(q) at node " + std::to_string(q);
                return out;
            }
            for (std::size_t a = 0; a < bv.size(); ++a)
                for (std::size_t b = a + 1; b < bv.size(); ++b)
                    if (ref::branch_edge(g, cq, bv[a], bv[b]) && color[bv[a]] == color[bv[b]]) {
                        out.failure = "B-adjacent " + std::to_string(bv[a]) + "," + std::to_string(bv[b]) + " share a branch at node " + std::to_string(q);
                        return out;
                    }
        }
        return out;
    });
    int nodes = 0, reps = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].failure.empty())
            return {false, to_graph6(corpus[i]) + ": " + rows[i].failure};
        nodes += rows[i].nodes;
        reps += rows[i].nodes > 0;
    }
    return {reps > 0, std::to_string(reps) + " representations, " + std::to_string(nodes) + " host nodes"};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: vpt_acceptance <connected_upto7.g6>\n";
        return 2;
    }
    const int jobs = 8;
    std::vector<graph> corpus;
    std::string corpus_error;
    try {
        corpus = read_corpus(argv[1]);
    } catch (const std::exception& e) {
        corpus_error = e.what();
    }
    std::vector<std::pair<graph, certification>> certified;

    struct criterion {
        std::string name;
        double limit_seconds; // 0: none
        std::function<outcome()> run;
    };
    std::vector<criterion> criteria{
        {"gh-construction", 10, gh_construction},
        {"minimal-certification", 300, [&] { return minimal_certification(certified); }},
        {"extract-round-trip", 0, [&] { return extract_round_trip(certified); }},
        {"battery-on-certificates", 0, [&] { return battery_on_certificates(certified); }},
        {"oracle-equivalence", 1800, [&] { return corpus_error.empty() ? oracle_equivalence(corpus, jobs) : outcome{false, corpus_error}; }},
        {"branch-deletion-sweep", 0, branch_deletion_sweep},
        {"degree-reduction", 0, degree_reduction_rewrite},
        {"branch-index-coloring", 0, [&] { return corpus_error.empty() ? branch_index_coloring(corpus, jobs) : outcome{false, corpus_error}; }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        failed += !o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << c.name << " [" << secs << " s] " << o.detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << "\n";
    return failed ? 1 : 0;
}
