// vptk: command-line driver for VPT classification, G_H construction and
// minimality certification over graph6 / edge-list streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vpt/report_json.hpp"
#include "vpt/vpt.hpp"

namespace {

using vpt::json;

struct run_config {
    std::string command;
    std::string input = "-";
    std::optional<int> h;
    std::optional<int> bound;
    int cap = vpt::default_coloring_cap;
    std::uint64_t budget = vpt::default_tree_budget;
    int jobs = 1;
    std::string format = "human";

    bool structured() const { return format == "json-lines"; }
    vpt::limits limits() const { return {cap, budget}; }
};

struct line_result {
    std::string text;
    bool failed = false; // error record (parse, cap, budget, precondition)
};

std::string set_text(const vpt::vertex_set& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

json head(const vpt::stream_item& it)
{
    return {{"line", it.line}, {"input", it.source}};
}

json do_classify(const run_config& cfg, const vpt::graph& g, std::string& human)
{
    try {
        auto r = vpt::classify(g, cfg.limits());
        human = "h*=" + std::to_string(r.h_star) + " method=" + vpt::to_string(r.method) + " max_branch_chi=" + std::to_string(r.max_branch_chi);
        if (r.witness_clique)
            human += " witness=" + set_text(*r.witness_clique);
        if (r.derived_at_three)
            human += " (derived at h=3)";
        return vpt::to_json(r);
    } catch (const vpt::not_vpt&) {
        human = "not VPT";
        return {{"is_vpt", false}};
    }
}

json do_build_gh(const run_config&, const vpt::graph& h, std::string& human)
{
    auto gh = vpt::build_gh(h);
    human = vpt::to_graph6(gh.g);
    return vpt::to_json(gh);
}

json do_certify(const run_config& cfg, const vpt::stream_item& it, std::string& human)
{
    auto out = vpt::search_one(it, *cfg.h, cfg.limits());
    if (out.status == vpt::search_status::failed)
        throw vpt::error(out.message);
    json doc = {{"status", vpt::to_string(out.status)}};
    human = vpt::to_string(out.status);
    if (out.result) {
        doc["certificate"] = vpt::to_json(*out.result.certificate, *it.g);
        human += " H=" + vpt::to_graph6(out.result.certificate->characterization.h);
    } else {
        doc["reason"] = out.message;
        human += ": " + out.message;
    }
    return doc;
}

json do_oracle(const run_config& cfg, const vpt::graph& g, std::string& human)
{
    int bound = cfg.bound.value_or(vpt::default_oracle_bound(g));
    if (cfg.h) {
        auto v = vpt::exists_representation(g, *cfg.h, bound);
        human = v.exists ? "exists on " + std::to_string(v.witness->host.node_count()) + " host nodes"
            : v.refuted_by_chordality ? "not VPT (not chordal)"
                                      : "none within bound " + std::to_string(bound);
        return vpt::to_json(v);
    }
    if (!vpt::is_chordal(g)) {
        human = "not VPT (not chordal)";
        return {{"min_h", nullptr}, {"refuted_by_chordality", true}, {"bound_used", bound}};
    }
    try {
        int m = vpt::min_h(g, bound);
        human = "min h=" + std::to_string(m) + " within bound " + std::to_string(bound);
        return {{"min_h", m}, {"refuted_by_chordality", false}, {"bound_used", bound}};
    } catch (const vpt::bound_exhausted&) {
        human = "none within bound " + std::to_string(bound);
        return {{"min_h", nullptr}, {"refuted_by_chordality", false}, {"within_bound_only", true}, {"bound_used", bound}};
    }
}

json do_battery(const run_config& cfg, const vpt::graph& g, std::string& human)
{
    try {
        auto b = vpt::structural_battery(g, *cfg.h, cfg.limits());
        human = b.all_pass() ? "all pass" : "fails:";
        for (auto& c : b.conditions)
            if (!c.pass)
                human += " " + c.id;
        return vpt::to_json(b);
    } catch (const vpt::not_vpt&) {
        human = "not VPT";
        return {{"is_vpt", false}};
    }
}

json do_critical(const run_config& cfg, const vpt::graph& g, std::string& human)
{
    auto r = vpt::criticality(g, cfg.cap);
    std::string chi = std::to_string(r.chi);
    human = r.critical() ? chi + "-critical"
        : r.vertex_critical ? chi + "-vertex-critical, not edge-critical"
                            : "chi=" + chi + ", not critical";
    return vpt::to_json(r);
}

json do_color(const run_config& cfg, const vpt::graph& g, std::string& human)
{
    auto c = vpt::chromatic_number(g, cfg.cap);
    human = "chi=" + std::to_string(c.chi) + " colors=";
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        human += (v ? " " : "") + std::to_string(c.assignment[v]);
    return vpt::to_json(c);
}

line_result process(const run_config& cfg, const vpt::stream_item& it)
{
    json doc = head(it);
    std::string human;
    try {
        if (!it.g)
            throw vpt::error(it.error);
        json body;
        const auto& g = *it.g;
        if (cfg.command == "classify")
            body = do_classify(cfg, g, human);
        else if (cfg.command == "build-gh")
            body = do_build_gh(cfg, g, human);
        else if (cfg.command == "certify")
            body = do_certify(cfg, it, human);
        else if (cfg.command == "oracle")
            body = do_oracle(cfg, g, human);
        else if (cfg.command == "battery")
            body = do_battery(cfg, g, human);
        else if (cfg.command == "critical")
            body = do_critical(cfg, g, human);
        else
            body = do_color(cfg, g, human);
        doc.update(body);
    } catch (const std::exception& e) {
        doc["error"] = e.what();
        std::string text = cfg.structured() ? doc.dump() : "line " + std::to_string(it.line) + ": error: " + e.what();
        return {text, true};
    }
    if (cfg.structured())
        return {doc.dump(), false};
    // build-gh output stays plain graph6 so it can be piped back in
    if (cfg.command == "build-gh")
        return {human, false};
    return {it.source + "\t" + human, false};
}

int run(const run_config& cfg)
{
    std::ifstream file;
    if (cfg.input != "-") {
        file.open(cfg.input);
        if (!file) {
            std::cerr << "vptk: cannot open " << cfg.input << "\n";
            return 2;
        }
    }
    std::istream& in = cfg.input == "-" ? std::cin : file;
    vpt::graph_reader reader(in);
    std::vector<vpt::stream_item> items;
    while (auto it = reader.next())
        items.push_back(std::move(*it));

    bool any_error = false;
    vpt::ordered_map(items, cfg.jobs, [&](const vpt::stream_item& it) { return process(cfg, it); },
        [&](line_result r) {
            any_error |= r.failed;
            std::cout << r.text << "\n";
        });
    std::cout.flush();
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vptk: VPT graph classification and minimality certification"};
    app.require_subcommand(1);
    // "--h" is the host degree, so help is long-form only
    app.set_help_flag("--help", "print this help and exit");
    run_config cfg;

    struct command_info {
        const char* name;
        const char* help;
        bool needs_h;
        bool takes_h;
    };
    const std::vector<command_info> commands{
        {"classify", "least h with G in [h,2,1]", false, false},
        {"build-gh", "build G_H for each input graph H", false, false},
        {"certify", "certify minimal non-[h,2,1] graphs", true, true},
        {"oracle", "brute-force representation search (min h, or existence at --h)", false, true},
        {"battery", "necessary conditions for minimal non-[h,2,1] graphs", true, true},
        {"critical", "chromatic number and criticality", false, false},
        {"color", "chromatic number with an optimal coloring", false, false},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->set_help_flag("--help", "print this help and exit");
        sub->add_option("input", cfg.input, "graph6 or edge-list file, '-' for stdin")->capture_default_str();
        if (c.takes_h) {
            auto* opt = sub->add_option("--h", cfg.h, "maximum host degree h (>= 2)")->check(CLI::Range(2, 64));
            if (c.needs_h)
                opt->required();
        }
        if (std::string(c.name) == "oracle")
            sub->add_option("--bound", cfg.bound, "largest host tree tried (default 2*|C(G)|, at most 20)")->check(CLI::Range(1, 20));
        sub->add_option("--cap", cfg.cap, "largest graph the exact coloring accepts")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--budget", cfg.budget, "clique-tree search step budget")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "json-lines"}))->capture_default_str();
        sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
    }
    CLI11_PARSE(app, argc, argv);
    if (cfg.command == "certify" && cfg.h && *cfg.h < 3) {
        std::cerr << "vptk: certify needs --h >= 3\n";
        return 2;
    }
    return run(cfg);
}
