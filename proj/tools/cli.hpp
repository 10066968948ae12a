#pragma once

// minorsat command line. Exit codes: 0 claim verified / success, 1 claim
// refuted, 2 usage or input error, 3 search budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "minorsat/minorsat.hpp"

namespace minorsat::cli {

enum Exit : int { ok = 0, refuted = 1, usage = 2, budget = 3 };

/// Built-in names (K6, K3,3, K1,4, C5, P4, GP(8,3), wagner) or an edge-list file.
inline Graph resolve_graph(const std::string& spec) {
    std::smatch m;
    static const std::regex complete_re(R"(K(\d+))"), bip_re(R"(K(\d+),(\d+))"), cycle_re(R"(C(\d+))"), path_re(R"(P(\d+))"),
        gp_re(R"(GP\(?(\d+),(\d+)\)?)");
    if (std::regex_match(spec, m, complete_re)) return complete(std::stoi(m[1]));
    if (std::regex_match(spec, m, bip_re)) return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, cycle_re)) return cycle(std::stoi(m[1]));
    if (std::regex_match(spec, m, path_re)) return path(std::stoi(m[1]));
    if (std::regex_match(spec, m, gp_re)) return generalized_petersen(std::stoi(m[1]), std::stoi(m[2]));
    if (spec == "wagner" || spec == "W8") return wagner();
    std::ifstream in(spec);
    if (!in) throw graph_error("'" + spec + "' is neither a built-in graph name nor a readable file");
    return parse_edge_list(in);
}

inline void emit_graph(std::ostream& out, const std::string& path, const Graph& g, const std::vector<std::string>& header) {
    if (path.empty()) {
        write_edge_list(out, g, header);
        return;
    }
    std::ofstream f(path);
    if (!f) throw graph_error("cannot write '" + path + "'");
    write_edge_list(f, g, header);
    out << "wrote " << path << " (n = " << g.order() << ", m = " << g.size() << ")\n";
}

inline nlohmann::json model_json(const MinorModel& m) { return m.branch_sets(); }

inline nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    if (v.model) j["witness"] = {{"branches", model_json(*v.model)}};
    if (v.edge) j["witness"] = {{"edge", {v.edge->u, v.edge->v}}};
    j["edges_checked"] = v.checks.size();
    j["nodes"] = v.nodes;
    j["wall_ms"] = v.wall_ms;
    return j;
}

inline int exit_for(SaturationStatus s) {
    switch (s) {
        case SaturationStatus::saturated: return ok;
        case SaturationStatus::inconclusive: return budget;
        default: return refuted;
    }
}

struct Options {
    bool verbose = false;
    unsigned jobs = default_jobs();
    std::uint64_t budget = SearchBudget{}.max_nodes;
};

// ---------------------------------------------------------------------------

inline int cmd_gen(std::ostream& out, const std::string& name, const std::vector<int>& p, const std::string& out_path) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi) throw graph_error("gen " + name + ": expected " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
    };
    auto at = [&](std::size_t i) { return p[i]; };
    std::vector<std::string> header{"gen " + name};
    for (int v : p) header.front() += " " + std::to_string(v);
    Graph g;
    if (name == "complete") { need(1, 1); g = complete(at(0)); }
    else if (name == "bipartite") { need(2, 2); g = complete_bipartite(at(0), at(1)); }
    else if (name == "kstar") { need(1, 1); g = star(at(0)); }
    else if (name == "path") { need(1, 1); g = path(at(0)); }
    else if (name == "cycle") { need(1, 1); g = cycle(at(0)); }
    else if (name == "wagner") { need(0, 0); g = wagner(); }
    else if (name == "gp") { need(2, 2); g = generalized_petersen(at(0), at(1)); }
    else if (name == "thm22") {
        need(2, 4);
        Thm22Params tp{at(0), at(1), p.size() > 2 ? at(2) : 1, p.size() > 3 ? at(3) : 1};
        g = p.size() > 2 ? thm22_family(tp) : thm22_core(tp.s, tp.d).graph;
        header.push_back("s=" + std::to_string(tp.s) + " d=" + std::to_string(tp.d) + " kappa=" + std::to_string(tp.kappa) +
                         " copies=" + std::to_string(tp.copies));
    } else if (name == "star") {
        need(2, 2);
        g = star_saturated(at(0), at(1));
        header.push_back("r=" + std::to_string(at(0)) + " path_len=" + std::to_string(at(1)));
    } else if (name == "gp-chain") {
        need(2, 2);
        if (at(0) < 6 || at(0) > 8) throw graph_error("gp-chain: r must be 6, 7 or 8");
        auto fam = parse_chain_family("gp" + std::to_string(at(0)));
        g = block_chain(fam, at(1));
        header.push_back(chain_block(fam).name + " blocks glued on x0x1, copies=" + std::to_string(at(1)));
    } else if (name == "wagner-chain") {
        need(1, 1);
        g = block_chain(ChainFamily::wagner, at(0));
        header.push_back("wagner blocks glued on 01, copies=" + std::to_string(at(0)));
    } else {
        need(0, 0);
        g = resolve_graph(name);
    }
    emit_graph(out, out_path, g, header);
    return ok;
}

inline int cmd_minor(std::ostream& out, const std::string& host_spec, const std::string& target_spec, const Options& o) {
    Graph host = resolve_graph(host_spec), target = resolve_graph(target_spec);
    auto r = find_minor(host, target, {o.budget, std::nullopt});
    switch (r.status) {
        case SearchStatus::model:
            out << "Model (" << r.nodes << " nodes)\n";
            write_model(out, *r.model);
            return ok;
        case SearchStatus::budget_exhausted:
            out << "BudgetExhausted after " << r.nodes << " nodes\n";
            return budget;
        case SearchStatus::no_minor: break;
    }
    out << "NoMinor (";
    if (r.reason == NoMinorReason::counting_bound && is_connected(host))
        out << "counting bound: " << host.size() << " < " << (host.order() - target.order()) + target.size();
    else if (r.reason == NoMinorReason::counting_bound)
        out << "counting bound, per component";
    else if (r.reason == NoMinorReason::too_few_vertices)
        out << "too few vertices: " << host.order() << " < " << target.order();
    else
        out << "exhaustive search, " << r.nodes << " nodes";
    out << ")\n";
    return refuted;
}

inline int cmd_saturated(std::ostream& out, const std::string& graph_spec, const std::string& target_spec, const std::string& group,
                         bool json, const Options& o) {
    Graph g = resolve_graph(graph_spec), h = resolve_graph(target_spec);
    SaturationOptions so{{o.budget, std::nullopt}, o.jobs};
    Verdict v;
    if (group == "dihedral") {
        if (g.order() % 2 != 0) throw graph_error("--group dihedral needs a GP(n,k) graph (even vertex count)");
        v = is_saturated_symmetric(g, h, gp_dihedral_group(g.order() / 2), so);
    } else if (group == "none") {
        v = is_saturated(g, h, so);
    } else {
        throw graph_error("--group must be 'dihedral' or 'none'");
    }
    if (json) out << verdict_json(v).dump(2) << '\n';
    else write_verdict(out, v, o.verbose);
    return exit_for(v.status);
}

inline void print_sat_conclusion(std::ostream& out, const Graph& g, const Graph& kr, const std::string& gname, int r) {
    auto lower = saturated_edge_lower_bound(g.order(), kr);
    auto inv = check_lower_bound_invariants(g, kr);
    for (const auto& c : inv.checks)
        if (c.applicable) out << "invariant " << c.name << ": " << (c.passed ? "holds" : "VIOLATED") << " (" << c.detail << ")\n";
    Rational upper(g.size());
    out << "sat(" << g.order() << ", M(K" << r << ")) ";
    if (lower == upper)
        out << "= " << g.size() << ": lower bound 3n/2 = " << lower << " (minimum degree of K" << r << " is at least 3), upper bound "
            << g.size() << " by exhibit " << gname << '\n';
    else
        out << "in [" << lower << ", " << g.size() << "]\n";
}

inline int cmd_verify_paper(std::ostream& out, int r, bool blind, const Options& o) {
    auto bundle = paper_bundle(r);
    const Graph g = bundle.graph();
    const Graph kr = complete(r);
    const std::string gname = "GP(" + std::to_string(bundle.n) + "," + std::to_string(bundle.k) + ")";

    auto rep = verify_saturation_by_certs(bundle);
    for (const auto& line : rep.lines)
        if (o.verbose || line.rfind("  + ", 0) != 0) out << line << '\n';
    if (!rep.ok) {
        out << "certificate verification FAILED\n";
        return refuted;
    }
    out << "certificates: " << gname << " is M(K" << r << ")-saturated\n";

    if (blind) {
        SaturationOptions so{{o.budget, std::nullopt}, o.jobs};
        auto v = is_saturated_symmetric(g, kr, gp_dihedral_group(bundle.n), so);
        out << "blind search: " << to_string(v.status) << " after " << v.checks.size() << " orbit checks, " << v.nodes << " nodes\n";
        std::map<Edge, int> cert_for;
        for (const auto& c : bundle.coverage) cert_for[c.canonical] = c.cert;
        bool agree = v.status == SaturationStatus::saturated;
        for (const auto& c : v.checks) {
            bool model = c.status == SearchStatus::model && verify_model(*c.model);
            bool covered = cert_for.count(c.edge) != 0;
            agree = agree && model && covered;
            out << "  " << pair_label(c.edge, bundle.n) << ": search " << (model ? "Model" : to_string(c.status)) << ", certificate "
                << (covered ? cert_name(cert_for[c.edge]) : std::string("none")) << '\n';
            if (o.verbose && c.model) write_model(out, *c.model);
        }
        out << "blind search " << (agree ? "agrees" : "DISAGREES") << " with the certificates on every orbit\n";
        if (v.status == SaturationStatus::inconclusive) return budget;
        if (!agree) return refuted;
    }
    print_sat_conclusion(out, g, kr, gname, r);
    return ok;
}

inline int cmd_sat_exact(std::ostream& out, int n, const std::string& target_spec, bool count, const Options& o) {
    Graph h = resolve_graph(target_spec);
    CensusLimits lim;
    lim.budget.max_nodes = o.budget;
    lim.jobs = o.jobs;
    lim.count_all = count;
    CensusResult res;
    try {
        res = exact_sat(n, h, lim);
    } catch (const budget_exhausted& e) {
        out << "BudgetExhausted: " << e.what() << '\n';
        return budget;
    }
    out << "n = " << n << ", target " << target_spec << '\n';
    out << "sat = " << res.sat << '\n';
    if (res.saturated_count) out << "saturated labeled graphs with " << res.sat << " edges: " << *res.saturated_count << '\n';
    out << "witness:\n";
    write_edge_list(out, res.witness);
    return ok;
}

inline int cmd_density(std::ostream& out, const std::vector<int>& thm22, const std::string& block, int shared) {
    if (!thm22.empty()) {
        if (thm22.size() != 2) throw graph_error("--thm22 takes two values: s d");
        out << "density = " << thm22_density(thm22[0], thm22[1]) << '\n';
        return ok;
    }
    if (block.empty()) throw graph_error("density needs --thm22 s d or --block FILE --shared k");
    out << "density = " << block_density(resolve_graph(block), shared) << '\n';
    return ok;
}

inline int cmd_chain(std::ostream& out, const std::string& family, int copies, const std::string& out_path) {
    auto fam = parse_chain_family(family);
    auto b = chain_block(fam);
    Graph g = block_chain(fam, copies);
    bool free_by_count = chain_minor_free_by_count(fam);
    std::vector<std::string> header{
        "chain " + family + ": " + std::to_string(copies) + " x " + b.name + " glued on one edge",
        "n = " + std::to_string(g.order()) + ", m = " + std::to_string(g.size()) + ", per-block density " + block_density(b.block, 2).str(),
        "K" + std::to_string(b.r) + "-minor-free by per-block counting bound: " + (free_by_count ? "yes" : "no")};
    emit_graph(out, out_path, g, header);
    return ok;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Graph-minor containment and saturation checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("-v,--verbose", o.verbose, "Dump minor models and certificate evidence");
    app.add_option("--jobs", o.jobs, "Parallel workers")->check(CLI::PositiveNumber);
    app.add_option("--budget", o.budget, "Node expansions per minor search")->check(CLI::PositiveNumber);

    std::string gen_name, gen_out;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "Emit a named graph or construction as an edge list");
    gen->add_option("name", gen_name, "complete|bipartite|kstar|path|cycle|wagner|gp|thm22|star|gp-chain|wagner-chain|<built-in>")->required();
    gen->add_option("params", gen_params, "Integer parameters");
    gen->add_option("--out", gen_out, "Output file");

    std::string host, target;
    auto* minor = app.add_subcommand("minor", "Decide whether HOST has TARGET as a minor");
    minor->add_option("--host", host)->required();
    minor->add_option("--target", target)->required();

    std::string sat_graph, sat_target, group = "none";
    bool json = false;
    auto* saturated = app.add_subcommand("saturated", "Decide M(TARGET)-saturation of GRAPH");
    saturated->add_option("--graph", sat_graph)->required();
    saturated->add_option("--target", sat_target)->required();
    saturated->add_option("--group", group, "dihedral|none");
    saturated->add_flag("--json", json, "Structured JSON record");

    int r = 0;
    bool blind = false;
    auto* verify = app.add_subcommand("verify-paper", "Verify saturation of GP(8,3), GP(13,5), GP(19,7) for K6, K7, K8");
    verify->add_option("--r", r)->required()->check(CLI::IsMember({6, 7, 8}));
    verify->add_flag("--blind", blind, "Also run the unseeded search on every orbit");

    int census_n = 0;
    std::string census_target;
    bool count = false;
    auto* census = app.add_subcommand("sat-exact", "Exact saturation number by exhaustive census");
    census->add_option("--n", census_n)->required();
    census->add_option("--target", census_target)->required();
    census->add_flag("--count", count, "Count saturated labeled graphs at the minimum");

    std::vector<int> thm22;
    std::string block;
    int shared = 2;
    auto* density = app.add_subcommand("density", "Exact per-block edge density");
    density->add_option("--thm22", thm22, "s d")->expected(2);
    density->add_option("--block", block);
    density->add_option("--shared", shared);

    std::string family, chain_out;
    int copies = 2;
    auto* chain = app.add_subcommand("chain", "Blocks glued along a common edge");
    chain->add_option("--family", family, "gp6|gp7|gp8|wagner")->required();
    chain->add_option("--copies", copies)->check(CLI::PositiveNumber);
    chain->add_option("--out", chain_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage;
    }

    try {
        if (*gen) return cmd_gen(out, gen_name, gen_params, gen_out);
        if (*minor) return cmd_minor(out, host, target, o);
        if (*saturated) return cmd_saturated(out, sat_graph, sat_target, group, json, o);
        if (*verify) return cmd_verify_paper(out, r, blind, o);
        if (*census) return cmd_sat_exact(out, census_n, census_target, count, o);
        if (*density) return cmd_density(out, thm22, block, shared);
        if (*chain) return cmd_chain(out, family, copies, chain_out);
    } catch (const budget_exhausted& e) {
        err << e.what() << '\n';
        return budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace minorsat::cli
