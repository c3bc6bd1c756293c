#pragma once

// JSON documents for reports and certificates (nlohmann::json).

#include <json.hpp>

#include "classifier.hpp"
#include "coloring.hpp"
#include "gh.hpp"
#include "graph_io.hpp"
#include "oracle.hpp"
#include "representation.hpp"
#include "split.hpp"

namespace vpt {

using json = nlohmann::ordered_json;

inline json edges_json(const std::vector<edge>& es)
{
    json out = json::array();
    for (auto e : es)
        out.push_back({e.u, e.v});
    return out;
}

inline json to_json(const coloring_certificate& c)
{
    return {{"chi", c.chi}, {"colors", c.assignment}, {"clique_witness", c.clique_witness}, {"lower_bound_by_search", c.lower_bound_by_search}};
}

inline json to_json(const criticality_report& r)
{
    return {
        {"chi", r.chi},
        {"vertex_critical", r.vertex_critical},
        {"edge_critical", r.edge_critical},
        {"critical", r.critical()},
        {"failing_vertices", r.failing_vertices},
        {"failing_edges", edges_json(r.failing_edges)},
    };
}

inline json to_json(const representation& r)
{
    json es = json::array();
    for (auto e : r.host.edges())
        es.push_back({e.a, e.b});
    return {{"host_nodes", r.host.node_count()}, {"host_edges", es}, {"paths", r.paths}};
}

inline json to_json(const classification_report& r)
{
    json out = {
        {"is_vpt", r.is_vpt},
        {"is_interval", r.is_interval},
        {"h_star", r.h_star},
        {"method", to_string(r.method)},
        {"max_branch_chi", r.max_branch_chi},
        {"witness_clique", r.witness_clique ? json(*r.witness_clique) : json(nullptr)},
    };
    if (r.derived_at_three)
        out["note"] = "derived at h=3: non-interval with max branch chi <= 3";
    return out;
}

inline json to_json(const oracle_verdict& v)
{
    return {
        {"exists", v.exists},
        {"within_bound_only", v.within_bound_only()},
        {"refuted_by_chordality", v.refuted_by_chordality},
        {"bound_used", v.bound_used},
        {"trees_examined", v.trees_examined},
        {"assignments_examined", v.assignments_examined},
        {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
    };
}

inline json to_json(const battery_report& b)
{
    json conds = json::array();
    for (auto& c : b.conditions)
        conds.push_back({{"id", c.id}, {"statement", c.statement}, {"pass", c.pass}, {"witness", c.witness}});
    json split = nullptr;
    if (b.split)
        split = {{"stable", b.split->stable}, {"clique", b.split->clique}};
    return {{"h", b.h}, {"principal_clique", b.principal}, {"split", split}, {"all_pass", b.all_pass()}, {"conditions", conds}};
}

inline json to_json(const gh_graph& gh)
{
    json roles = json::array();
    for (std::size_t v = 0; v < gh.roles.size(); ++v) {
        const auto& t = gh.roles[v];
        json r = {{"vertex", v}, {"label", gh.g.label(static_cast<vertex>(v))}, {"role", to_string(t.role)}, {"i", t.i}};
        if (t.role == gh_role::edge)
            r["j"] = t.j;
        roles.push_back(std::move(r));
    }
    return {{"h", to_graph6(gh.source)}, {"graph6", to_graph6(gh.g)}, {"order", gh.g.order()}, {"central_clique", gh.central_clique()}, {"roles", roles}};
}

inline json to_json(const gh_lemma_report& r)
{
    json checks = json::array();
    for (auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"ok", r.ok()}, {"checks", checks}};
}

inline json to_json(const minimality_certificate& c, const graph& g)
{
    json per_vertex = json::array();
    for (auto& d : c.per_vertex)
        per_vertex.push_back({{"vertex", d.v}, {"h_star", d.h_star}, {"inside", d.inside}});
    return {
        {"graph6", to_graph6(g)},
        {"h", c.h},
        {"h_star", c.outside.h_star},
        {"witness_clique", c.outside.witness_clique ? json(*c.outside.witness_clique) : json(nullptr)},
        {"per_vertex", per_vertex},
        {"battery", to_json(c.battery)},
        {"extracted_h", to_graph6(c.characterization.h)},
        {"stable_set", c.characterization.stable},
        {"h_criticality", to_json(c.h_criticality)},
        {"isomorphism", c.characterization.iso},
    };
}

} // namespace vpt
