// Command-line front end: generate example clutters, analyze files, run the
// precore / solution / search / obstruction pipelines with text or JSON reports.
//
// Exit codes: 0 ok, 1 --assert failed, 2 usage or parse error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clutterkit/clutter.hpp"
#include "clutterkit/conditions.hpp"
#include "clutterkit/generators.hpp"
#include "clutterkit/io.hpp"
#include "clutterkit/json_report.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/polytope.hpp"
#include "clutterkit/solution.hpp"

namespace ck = clutterkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GlobalOptions {
    int max_elements = 0;  // 0: library defaults
    bool json = false;
};

ck::Caps caps_from(const GlobalOptions& g) {
    ck::Caps caps = ck::default_caps();
    if (g.max_elements > 0) {
        caps.minor_sweep_max_elements = g.max_elements;
        caps.separability_max_elements = g.max_elements;
        caps.polytope_max_elements = g.max_elements;
    }
    return caps;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ck::ParseError("cannot write file: " + out_path);
    out << text;
}

void emit_json(ck::Json j, const std::string& command) {
    ck::Json wrapped;
    wrapped["schema_version"] = ck::kSchemaVersion;
    wrapped["command"] = command;
    wrapped["report"] = std::move(j);
    std::cout << wrapped.dump(2) << "\n";
}

int run_generate(const std::string& kind, const std::string& param, const std::string& out_path) {
    ck::Clutter c;
    if (kind == "q6") {
        c = ck::q6();
    } else if (kind == "fano") {
        c = ck::projective_plane(2);
    } else if (kind == "pg" || kind == "ag") {
        if (param.empty()) {
            std::cerr << "error: generate " << kind << " needs a prime order\n";
            return kExitUsage;
        }
        int q = 0;
        try {
            q = std::stoi(param);
        } catch (const std::exception&) {
            std::cerr << "error: order must be an integer, got " << param << "\n";
            return kExitUsage;
        }
        c = kind == "pg" ? ck::projective_plane(q) : ck::affine_plane(q);
    } else if (kind == "vertex-cut") {
        if (param.empty()) {
            std::cerr << "error: generate vertex-cut needs a graph file\n";
            return kExitUsage;
        }
        c = ck::vertex_cut_clutter(ck::load_graph(param));
    } else {
        std::cerr << "error: unknown generator kind: " << kind << "\n";
        return kExitUsage;
    }
    write_output(ck::emit_clt(c), out_path);
    return kExitOk;
}

int run_analyze(const std::string& path, const GlobalOptions& g) {
    ck::Caps caps = caps_from(g);
    ck::Clutter c = ck::load_clutter(path);
    if (c.degenerate()) throw ck::ParseError("degenerate clutter (no edges, or an empty edge)");
    ck::Clutter blk = ck::blocker(c, caps);
    auto minb = ck::min_transversals_of(blk.edges());
    int bn = ck::set_size(minb.front());
    int pn = ck::packing_number(c);
    ck::Rational fpn_value = ck::fpn(c);
    bool does_pack = pn == bn;
    auto ideal = ck::is_ideal(c, caps);
    bool mtc = ck::is_minimum_transversal_covered(c, caps);
    ck::Clutter til = ck::tilde(c, caps);
    bool unique = ck::is_unique_max_packing(c);

    if (g.json) {
        ck::Json j;
        j["clutter"] = ck::clutter_to_json(c);
        j["bn"] = bn;
        j["pn"] = pn;
        j["fpn"] = ck::rational_to_string(fpn_value);
        j["packs"] = does_pack;
        j["ideal"] = ideal.ideal;
        if (ideal.fractional_vertex) j["ideal_fractional_vertex"] = ck::rvec_json(*ideal.fractional_vertex);
        j["minimum_transversal_covered"] = mtc;
        j["tilde"] = ck::clutter_to_json(til);
        j["minb"] = ck::mask_list_json(c, minb);
        j["blocker_size"] = blk.edge_count();
        j["unique_max_packing"] = unique;
        emit_json(std::move(j), "analyze");
    } else {
        std::cout << "elements: " << c.ground_size() << "  edges: " << c.edge_count() << "\n";
        std::cout << "bn: " << bn << "  pn: " << pn << "  fpn: " << ck::rational_to_string(fpn_value)
                  << "  packs: " << (does_pack ? "yes" : "no") << "\n";
        std::cout << "ideal: " << (ideal.ideal ? "yes" : "no");
        if (ideal.fractional_vertex) std::cout << "  fractional vertex: " << ck::rvec_to_string(*ideal.fractional_vertex);
        std::cout << "\n";
        std::cout << "minimum-transversal-covered: " << (mtc ? "yes" : "no") << "\n";
        std::cout << "blocker size: " << blk.edge_count() << "\n";
        std::cout << "minb:";
        for (ck::Mask b : minb) std::cout << " " << c.set_to_string(b);
        std::cout << "\n";
        std::cout << "tilde:";
        for (ck::Mask e : til.edges()) std::cout << " " << c.set_to_string(e);
        std::cout << "\n";
        std::cout << "unique max packing: " << (unique ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_check_precore(const std::string& path, const GlobalOptions& g, bool assert_flag) {
    ck::Caps caps = caps_from(g);
    ck::Clutter c = ck::load_clutter(path);
    ck::PrecoreReport r = ck::is_precore(c, caps);
    if (g.json) {
        emit_json(ck::precore_json(c, r), "check-precore");
    } else {
        auto line = [](const std::string& name, const std::string& value) {
            std::cout << "  " << name << ": " << value << "\n";
        };
        std::cout << "precore report\n";
        line("minimum-transversal-covered", r.mtc ? "yes" : "no");
        line("integral blocking (fpn=bn)",
             std::string(r.ibc ? "yes" : "no") + "  (fpn " + ck::rational_to_string(r.fpn_value) + ", bn " +
                 std::to_string(r.bn) + ")");
        line("tilde-fixed (C = tilde C)", r.tilde_fixed ? "yes" : "no");
        line("I(C) polytope", r.ic_polytope ? "yes" : "no");
        line("I(C) integral", r.ic_integral ? "yes" : "no");
        if (r.ic_fractional_vertex) line("fractional vertex", ck::rvec_to_string(*r.ic_fractional_vertex));
        line("non-separable", r.nonseparable ? "yes" : "no");
        if (r.separating_partition)
            line("separating partition", c.set_to_string(r.separating_partition->first) + " / " +
                                             c.set_to_string(r.separating_partition->second));
        line("tilde-full", r.tilde_full_holds ? "yes" : "no");
        line("dimension condition", r.dimension_condition_holds
                                        ? std::string(*r.dimension_condition_holds ? "yes" : "no") + "  (" +
                                              std::to_string(r.dim_tilde) + " + " + std::to_string(r.dim_minb) + ")"
                                        : "n/a");
        line("hyperedge-nonseparable",
             r.hyperedge_nonseparable ? (*r.hyperedge_nonseparable ? "yes" : "no") : "n/a");
        line("unique max packing", r.unique_max_packing ? "yes" : "no");
        line("is precore", r.precore ? "yes" : "no");
    }
    return (assert_flag && !r.precore) ? kExitAssertFailed : kExitOk;
}

int run_check_solution(const std::string& cpath, const std::string& dpath, const GlobalOptions& g,
                       bool assert_flag) {
    ck::Caps caps = caps_from(g);
    ck::Clutter c = ck::load_clutter(cpath);
    ck::Clutter d = ck::load_clutter(dpath);
    ck::SolutionReport r = ck::check_solution(c, d, caps);
    bool headline = r.tilde_matches && r.ideal && r.mnp && r.im && r.if_holds && r.h && r.b;
    if (g.json) {
        ck::Json j = ck::solution_json(c, r);
        j["all_pass"] = headline;
        emit_json(std::move(j), "check-solution");
    } else {
        std::cout << "solution report\n";
        std::cout << "  C precore: " << (r.c_precore ? (*r.c_precore ? "yes" : "no") : "skipped") << "\n";
        std::cout << "  tilde(D) = C: " << (r.tilde_matches ? "yes" : "no") << "\n";
        std::cout << "  D ideal: " << (r.ideal ? "yes" : "no") << "\n";
        std::cout << "  D minimally non-packing: " << (r.mnp ? "yes" : "no") << "\n";
        std::cout << "  condition IM: " << (r.im ? "yes" : "no") << "\n";
        std::cout << "  condition IF: " << (r.if_holds ? "yes" : "no") << "\n";
        std::cout << "  condition H: " << (r.h ? "yes" : "no") << "\n";
        std::cout << "  condition B: " << (r.b ? "yes" : "no") << "\n";
        std::cout << "  all pass: " << (headline ? "yes" : "no") << "\n";
    }
    return (assert_flag && !headline) ? kExitAssertFailed : kExitOk;
}

int run_search(const std::string& path, const GlobalOptions& g, const ck::SearchLimits& limits,
               bool assert_flag) {
    ck::Caps caps = caps_from(g);
    ck::Clutter c = ck::load_clutter(path);
    ck::SearchOutcome o = ck::search_solutions(c, limits, caps);
    if (g.json) {
        emit_json(ck::search_json(o), "search");
    } else {
        std::cout << "search status: " << ck::to_string(o.status) << "\n";
        std::cout << "nodes explored: " << o.nodes_explored << "  pool size: " << o.pool_size << "\n";
        if (o.found) {
            std::cout << "found solution clutter:\n" << ck::emit_clt(*o.found);
        }
        for (const auto& [k, v] : o.prune_stats) std::cout << "  pruned[" << k << "]: " << v << "\n";
    }
    // --assert here means "a solution was found"
    return (assert_flag && o.status != ck::SearchOutcome::Status::Found) ? kExitAssertFailed : kExitOk;
}

int run_obstruction(const std::string& path, const GlobalOptions& g, bool all_triples, bool assert_flag) {
    ck::Caps caps = caps_from(g);
    ck::Clutter c = ck::load_clutter(path);
    try {
        ck::ObstructionReport r = ck::affine_obstruction(c, all_triples, caps);
        if (g.json) {
            emit_json(ck::obstruction_json(c, r), "obstruction");
        } else {
            std::cout << "blocking number: " << r.bn << "\n";
            std::cout << "triples analyzed: " << r.triples.size() << "\n";
            for (const auto& t : r.triples) {
                std::cout << "  triple " << c.set_to_string(t.edge_a) << " " << c.set_to_string(t.edge_b) << " "
                          << c.set_to_string(t.edge_c) << ": restriction bn " << t.restriction_bn << ", "
                          << t.star_components << " star components, " << t.candidates.size()
                          << " candidate 2-packings, verified " << (t.verified ? "yes" : "no") << "\n";
            }
            std::cout << "obstruction verified: " << (r.obstruction_verified ? "yes" : "no") << "\n";
        }
        return (assert_flag && !r.obstruction_verified) ? kExitAssertFailed : kExitOk;
    } catch (const ck::NotApplicableError& e) {
        if (g.json) {
            ck::Json j;
            j["status"] = "not applicable";
            j["reason"] = e.what();
            emit_json(std::move(j), "obstruction");
        } else {
            std::cout << "not applicable: " << e.what() << "\n";
        }
        return assert_flag ? kExitAssertFailed : kExitOk;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clutter theory toolkit: blockers, packings, precore and solution pipelines"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--max-elements", g.max_elements, "override element-count caps");
    app.add_flag("--json", g.json, "emit JSON reports");

    auto* gen = app.add_subcommand("generate", "emit an example clutter as .clt");
    std::string gen_kind, gen_param, gen_out;
    gen->add_option("kind", gen_kind, "q6|fano|pg|ag|vertex-cut")->required();
    gen->add_option("param", gen_param, "prime order for pg/ag, graph file for vertex-cut");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    auto* ana = app.add_subcommand("analyze", "bn/pn/fpn, idealness, tilde, blocker summary");
    std::string ana_file;
    ana->add_option("file", ana_file, "clutter file (.clt or JSON)")->required();

    auto* pre = app.add_subcommand("check-precore", "run the full precore pipeline");
    std::string pre_file;
    bool pre_assert = false;
    pre->add_option("file", pre_file)->required();
    pre->add_flag("--assert", pre_assert, "exit 1 when not precore");

    auto* sol = app.add_subcommand("check-solution", "certify D as a solution clutter over C");
    std::string sol_c, sol_d;
    bool sol_assert = false;
    sol->add_option("cfile", sol_c)->required();
    sol->add_option("dfile", sol_d)->required();
    sol->add_flag("--assert", sol_assert, "exit 1 unless all checks pass");

    auto* sea = app.add_subcommand("search", "bounded search for solution clutters over C");
    std::string sea_file;
    ck::SearchLimits limits;
    bool sea_assert = false;
    bool no_require_mnp = false;
    sea->add_option("cfile", sea_file)->required();
    sea->add_option("--max-extra-edges", limits.max_extra_edges, "DFS depth bound (default 4)");
    sea->add_option("--node-cap", limits.node_cap, "node budget (default 100000)");
    sea->add_option("--time-cap-secs", limits.time_cap_secs, "wall-clock budget, 0 = none");
    sea->add_option("--max-edge-size", limits.max_edge_size, "candidate edge size bound, 0 = |E|-bn+1");
    sea->add_option("--jobs", limits.jobs, "worker threads (default 1)");
    sea->add_flag("--require-mnp,!--no-require-mnp", limits.require_mnp,
                  "demand a minimally non-packing solution (default on)");
    sea->add_flag("--assert", sea_assert, "exit 1 unless a solution was found");

    auto* obs = app.add_subcommand("obstruction", "mechanized affine-plane obstruction analysis");
    std::string obs_file;
    bool obs_assert = false, obs_all = false;
    obs->add_option("file", obs_file)->required();
    obs->add_flag("--all-triples", obs_all, "sweep every hyperedge triple");
    obs->add_flag("--assert", obs_assert, "exit 1 unless the obstruction is verified");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_generate(gen_kind, gen_param, gen_out);
        if (ana->parsed()) return run_analyze(ana_file, g);
        if (pre->parsed()) return run_check_precore(pre_file, g, pre_assert);
        if (sol->parsed()) return run_check_solution(sol_c, sol_d, g, sol_assert);
        if (sea->parsed()) return run_search(sea_file, g, limits, sea_assert);
        if (obs->parsed()) return run_obstruction(obs_file, g, obs_all, obs_assert);
    } catch (const ck::CapExceededError& e) {
        std::cerr << "error (cap): " << e.what() << "\n";
        return kExitCap;
    } catch (const ck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
