#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "branch_graph.hpp"
#include "chordal.hpp"
#include "coloring.hpp"
#include "gh.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "split.hpp"

namespace vpt {

struct limits {
    int coloring_cap = default_coloring_cap;
    std::uint64_t tree_budget = default_tree_budget;
    // graphs at most this large fall back to the oracle when a coloring cap trips
    int oracle_fallback_order = 8;
};

enum class classification_method {
    interval_base_case,
    chi_criterion,
    oracle_fallback,
};

inline const char* to_string(classification_method m)
{
    switch (m) {
    case classification_method::interval_base_case: return "interval-base-case";
    case classification_method::chi_criterion: return "chi-criterion";
    case classification_method::oracle_fallback: return "oracle-fallback";
    }
    return "?";
}

struct classification_report {
    bool is_vpt = false;
    bool is_interval = false;
    int h_star = 0; // least h with G in [h,2,1]
    int max_branch_chi = 0;
    std::optional<vertex_set> witness_clique;
    classification_method method = classification_method::interval_base_case;
    // h_star = 3 was inferred from max_branch_chi <= 3 on a non-interval graph
    bool derived_at_three = false;
};

// h* from the branch-graph chromatic numbers:
//   interval                 -> 2
//   max chi(B(G/C)) = m >= 4 -> m
//   otherwise                -> 3
// The last rule holds because membership in [h,2,1]-[h-1,2,1] for any h >= 4
// forces m = h, and every VPT graph lies in some [h,2,1].
inline classification_report classify(const graph& g, const limits& lim = {})
{
    if (g.order() == 0)
        throw precondition_error("classify needs a non-empty graph");
    classification_report rep;
    if (!is_vpt(g, lim.tree_budget))
        throw not_vpt("graph is not VPT");
    rep.is_vpt = true;
    rep.is_interval = is_interval(g, lim.tree_budget).has_value();

    std::optional<branch_chi> chi;
    try {
        chi = max_branch_chi_unchecked(g, lim.coloring_cap);
    } catch (const cap_exceeded&) {
        if (g.order() > lim.oracle_fallback_order)
            throw;
    }
    if (chi) {
        rep.max_branch_chi = chi->h;
        rep.witness_clique = chi->witness;
    }

    if (rep.is_interval) {
        rep.h_star = 2;
        rep.method = classification_method::interval_base_case;
    } else if (!chi) {
        rep.h_star = min_h(g);
        rep.method = classification_method::oracle_fallback;
    } else if (chi->h >= 4) {
        rep.h_star = chi->h;
        rep.method = classification_method::chi_criterion;
    } else {
        rep.h_star = 3;
        rep.method = classification_method::chi_criterion;
        rep.derived_at_three = true;
    }
    return rep;
}

// Principal clique: the central clique of a split graph, otherwise the first
// clique maximising chi(B(G/C)).
inline vertex_set principal_clique(const graph& g, int coloring_cap = default_coloring_cap)
{
    if (auto split = find_split_partition(g))
        return split->clique;
    return max_branch_chi_unchecked(g, coloring_cap).witness;
}

struct battery_condition {
    std::string id;
    std::string statement;
    bool pass = false;
    std::string witness; // counterexample or supporting detail
};

struct battery_report {
    int h = 0;
    vertex_set principal;
    std::optional<split_partition> split;
    std::vector<battery_condition> conditions;

    bool all_pass() const
    {
        return std::all_of(conditions.begin(), conditions.end(), [](const battery_condition& c) { return c.pass; });
    }
    const battery_condition& at(const std::string& id) const
    {
        for (auto& c : conditions)
            if (c.id == id)
                return c;
        throw precondition_error("no battery condition " + id);
    }
};

namespace detail {

// chi(B) = target and every vertex (and, if asked, every edge) deletion drops it.
inline std::pair<bool, std::string> critical_at(const graph& b, int target, bool edges_too, int cap)
{
    auto rep = criticality(b, cap);
    if (rep.chi != target)
        return {false, "chi(B) = " + std::to_string(rep.chi) + ", expected " + std::to_string(target)};
    if (!rep.failing_vertices.empty())
        return {false, "deleting branch vertex " + b.label(rep.failing_vertices.front()) + " keeps chi"};
    if (edges_too && !rep.failing_edges.empty())
        return {false, "deleting branch edge " + b.label(rep.failing_edges.front().u) + "-" + b.label(rep.failing_edges.front().v) + " keeps chi"};
    return {true, ""};
}

} // namespace detail

// Every necessary condition a minimal non-[h,2,1] VPT graph satisfies,
// evaluated independently of one another.
inline battery_report structural_battery(const graph& g, int h, const limits& lim = {})
{
    if (h < 2)
        throw precondition_error("battery needs h >= 2");
    if (!is_vpt(g, lim.tree_budget))
        throw not_vpt("battery needs a VPT graph");

    battery_report rep;
    rep.h = h;
    rep.split = find_split_partition(g);
    rep.principal = principal_clique(g, lim.coloring_cap);
    const vertex_set& k = rep.principal;
    vertex_mask km = to_mask(k);
    auto b = make_branch_graph(g, k);
    auto add = [&](std::string id, std::string statement, bool pass, std::string witness) {
        rep.conditions.push_back({std::move(id), std::move(statement), pass, std::move(witness)});
    };

    {
        int hs = classify(g, lim).h_star;
        add("in-next-class", "G is in [h+1,2,1]", hs <= h + 1, "h* = " + std::to_string(hs));
    }
    {
        vertex_set outside = to_set(g.vertices() & ~km);
        bool pass = b.back_map == outside;
        std::string w;
        for (vertex v : outside)
            if (!std::binary_search(b.back_map.begin(), b.back_map.end(), v)) {
                w = g.label(v) + " has no neighbour in K";
                break;
            }
        add("branch-covers-outside", "V(B(G/K)) = V(G) - K", pass, w);
    }
    {
        bool pass = true;
        std::string w;
        for_each_bit(g.vertices() & ~km, [&](vertex v) {
            if (pass && popcount(g.neighbor_mask(v) & km) <= 1) {
                pass = false;
                w = g.label(v) + " has " + std::to_string(popcount(g.neighbor_mask(v) & km)) + " neighbour(s) in K";
            }
        });
        add("outside-multiply-attached", "|N(v) ∩ K| > 1 for every v outside K", pass, w);
    }
    {
        auto [pass, w] = detail::critical_at(b.carrier, h + 1, false, lim.coloring_cap);
        add("branch-vertex-critical", "B(G/K) is (h+1)-vertex-critical", pass, w);
    }
    {
        bool pass = true;
        std::string w;
        vertex_set outside = to_set(g.vertices() & ~km);
        for (std::size_t a = 0; a < outside.size() && pass; ++a)
            for (std::size_t c = a + 1; c < outside.size() && pass; ++c)
                if ((g.neighbor_mask(outside[a]) & km) == (g.neighbor_mask(outside[c]) & km)) {
                    pass = false;
                    w = g.label(outside[a]) + " and " + g.label(outside[c]) + " see the same part of K";
                }
        add("distinct-clique-traces", "N(s) ∩ K differs for distinct s outside K", pass, w);
    }
    {
        bool pass = true;
        std::string w;
        for (vertex x : k) {
            auto smaller = delete_vertex(g, x);
            vertex_mask rest = 0;
            for (vertex y : k)
                if (y != x)
                    rest |= bit(smaller.to_new(y));
            if (!is_clique(smaller.g, rest)) {
                pass = false;
                w = "K - " + g.label(x) + " is not a clique of G - " + g.label(x);
                break;
            }
        }
        add("clique-survives-deletion", "K - k is a clique of G - k for every k in K", pass, w);
    }
    {
        bool pass = rep.split && rep.split->dominated.empty();
        std::string w = !rep.split ? "not split"
            : pass                 ? ""
                                   : g.label(rep.split->dominated.front().first) + " dominated by " + g.label(rep.split->dominated.front().second);
        add("split-undominated", "G is split without dominated stable vertices", pass, w);
    }
    {
        bool pass = rep.split.has_value();
        std::string w = pass ? "" : "not split";
        if (rep.split) {
            vertex_mask sm = to_mask(rep.split->stable);
            for (vertex x : rep.split->clique)
                if (popcount(g.neighbor_mask(x) & sm) != 2) {
                    pass = false;
                    w = g.label(x) + " has " + std::to_string(popcount(g.neighbor_mask(x) & sm)) + " stable neighbour(s)";
                    break;
                }
        }
        add("two-stable-neighbours", "|N(k) ∩ S| = 2 for every k in K", pass, w);
    }
    {
        bool pass = b.carrier.size() == k.size();
        add("branch-edge-count", "|E(B(G/K))| = |K|", pass, std::to_string(b.carrier.size()) + " edges, |K| = " + std::to_string(k.size()));
    }
    {
        auto [pass, w] = detail::critical_at(b.carrier, h + 1, true, lim.coloring_cap);
        add("branch-critical", "B(G/K) is (h+1)-critical", pass, w);
    }
    return rep;
}

struct vertex_deletion_verdict {
    vertex v;
    int h_star; // of G - v
    bool inside; // h_star <= h
};

struct minimality_certificate {
    int h = 0;
    classification_report outside;               // G itself: h_star = h + 1
    std::vector<vertex_deletion_verdict> per_vertex;
    battery_report battery;
    h_extraction characterization;               // H, G_H and G -> G_H
    criticality_report h_criticality;            // of H
};

struct certification {
    std::optional<minimality_certificate> certificate;
    std::string reason; // why certification failed

    explicit operator bool() const { return certificate.has_value(); }
};

// G is minimal non-[h,2,1]: G is outside [h,2,1], every G - v is inside, the
// battery passes, and G ≅ G_H for an (h+1)-critical H.
inline certification certify_minimal(const graph& g, int h, const limits& lim = {})
{
    if (h < 3)
        throw precondition_error("certification covers h >= 3");
    certification out;
    minimality_certificate cert;
    cert.h = h;
    cert.outside = classify(g, lim);
    if (cert.outside.h_star != h + 1) {
        out.reason = "h* = " + std::to_string(cert.outside.h_star) + ", expected " + std::to_string(h + 1);
        return out;
    }
    for (vertex v = 0; v < g.order(); ++v) {
        int hs = classify(delete_vertex(g, v).g, lim).h_star;
        cert.per_vertex.push_back({v, hs, hs <= h});
        if (hs > h && out.reason.empty())
            out.reason = "G - " + g.label(v) + " has h* = " + std::to_string(hs);
    }
    if (!out.reason.empty())
        return out;
    cert.battery = structural_battery(g, h, lim);
    if (!cert.battery.all_pass()) {
        for (auto& c : cert.battery.conditions)
            if (!c.pass) {
                out.reason = "battery condition " + c.id + " fails: " + c.witness;
                break;
            }
        return out;
    }
    auto extraction = extract_h(g);
    if (!extraction) {
        out.reason = "G is not isomorphic to G_H for H = B(G/K)";
        return out;
    }
    cert.characterization = std::move(*extraction);
    cert.h_criticality = criticality(cert.characterization.h, lim.coloring_cap);
    if (!cert.h_criticality.critical() || cert.h_criticality.chi != h + 1) {
        out.reason = "H is not (h+1)-critical";
        return out;
    }
    out.certificate = std::move(cert);
    return out;
}

enum class search_status {
    certified,
    not_minimal,
    outside_scope, // not VPT; possibly one of the non-VPT minimal obstructions
    failed,        // parse error, cap or budget exceeded
};

inline const char* to_string(search_status s)
{
    switch (s) {
    case search_status::certified: return "certified";
    case search_status::not_minimal: return "not-minimal";
    case search_status::outside_scope: return "outside-scope";
    case search_status::failed: return "failed";
    }
    return "?";
}

struct search_outcome {
    std::size_t line = 0;
    std::string source;
    search_status status = search_status::failed;
    certification result;
    std::string message;
};

inline search_outcome search_one(const stream_item& item, int h, const limits& lim)
{
    search_outcome out;
    out.line = item.line;
    out.source = item.source;
    if (!item.g) {
        out.message = item.error;
        return out;
    }
    try {
        if (!is_vpt(*item.g, lim.tree_budget)) {
            out.status = search_status::outside_scope;
            out.message = "outside scope (possible non-VPT obstruction)";
            return out;
        }
        out.result = certify_minimal(*item.g, h, lim);
        out.status = out.result ? search_status::certified : search_status::not_minimal;
        out.message = out.result.reason;
    } catch (const std::exception& e) {
        out.status = search_status::failed;
        out.message = e.what();
    }
    return out;
}

// Certifies every item of a graph stream; per-item failures are reported in
// the outcome and never stop the stream. Outcomes keep input order.
template <class Sink>
void search_minimal(const std::vector<stream_item>& items, int h, Sink sink, int jobs = 1, const limits& lim = {})
{
    if (h < 3)
        throw precondition_error("certification covers h >= 3");
    ordered_map(items, jobs, [&](const stream_item& it) { return search_one(it, h, lim); }, sink);
}

inline std::vector<search_outcome> search_minimal(const std::vector<stream_item>& items, int h, int jobs = 1, const limits& lim = {})
{
    std::vector<search_outcome> out;
    search_minimal(items, h, [&](search_outcome o) { out.push_back(std::move(o)); }, jobs, lim);
    return out;
}

} // namespace vpt
