// xfc: build paper-scale gadget graphs, slack matrices and UDISJ
// embeddings, bound nonnegative ranks, and run seeded random-graph
// experiments with machine-readable output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xfc/embed.hpp"
#include "xfc/errors.hpp"
#include "xfc/gadget.hpp"
#include "xfc/gnp.hpp"
#include "xfc/lp.hpp"
#include "xfc/matrix.hpp"
#include "xfc/mc.hpp"
#include "xfc/nmf.hpp"
#include "xfc/nnrank.hpp"
#include "xfc/problem.hpp"
#include "xfc/rectangle.hpp"
#include "xfc/regime.hpp"
#include "xfc/stable.hpp"
#include "xfc/udisj.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::ordered_json;
using namespace xfc;

// exit codes: 0 all checks pass, 1 check failure, 2 usage error
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("XFC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(std::string("bad XFC_SEED value '") + env + "'");
        }
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

/// "K<t>", "C<t>", "P<t>", or a path to a graph file (.json or edge list).
Graph parse_template(const std::string& spec) {
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P')) {
        bool numeric = true;
        for (std::size_t i = 1; i < spec.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(spec[i]))) numeric = false;
        if (numeric) {
            int t = std::stoi(spec.substr(1));
            switch (spec[0]) {
                case 'K': return Graph::complete(t);
                case 'C': return Graph::cycle(t);
                case 'P': return Graph::path(t);
            }
        }
    }
    std::string text = read_file(spec);
    if (!text.empty() && text.find('{') != std::string::npos &&
        spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return graph_from_json(text);
    return graph_from_edge_list(text);
}

std::string config_comment(const ordered_json& config) {
    return "# xfc " + std::string(kVersion) + "\n# config: " + config.dump() + "\n";
}

ordered_json report_skeleton(const std::string& command, const ordered_json& config) {
    ordered_json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config;
    return j;
}

std::string na_or(double v, bool valid) { return valid ? format_double(v) : "NA"; }

// ---------------------------------------------------------------- gadget

int cmd_gadget(const std::string& tmpl_spec, int ell, std::uint64_t seed,
               const std::string& out) {
    Graph tmpl = parse_template(tmpl_spec);
    GadgetGraph gg = GadgetGraph::build(tmpl, ell);
    ordered_json config{{"template", tmpl_spec}, {"ell", ell}, {"seed", seed}};
    ordered_json j = report_skeleton("gadget", config);
    j["gadget"] = nlohmann::json::parse(gg.to_json());
    j["v"] = gg.graph().vertex_count();
    j["e"] = gg.graph().edge_count();
    j["alpha"] = stability_number(gg.graph());
    write_output(out, j.dump(2) + "\n");
    return kOk;
}

// ----------------------------------------------------------- embed-check

int cmd_embed_check(int t, int ell, std::uint64_t seed, const std::string& out) {
    ordered_json config{{"t", t}, {"ell", ell}, {"seed", seed}};
    ordered_json j = report_skeleton("embed-check", config);
    bool pass = true;
    std::string detail;
    try {
        GadgetGraph gg = GadgetGraph::build(Graph::complete(t), ell);
        EmbedResult res = embed_udisj_via_gadget(gg);
        j["N"] = nlohmann::json::parse(matrix_to_json(res.N));
        ordered_json coords;
        coords["rows"] = res.N.row_labels();   // nonempty subsets a of [t]
        coords["cols"] = res.N.col_labels();   // all subsets b of [t]
        coords["note"] = "N(a,b) = (1-|a∩b|)^2; equals UDISJ(t) wherever |a∩b| <= 1, "
                         "with the empty-set row absent";
        j["udisj_submatrix"] = coords;
        ordered_json prov;
        prov["gadget_vertices_per_row"] = res.row_gadget_vertices;
        prov["small_gadget_vertices_per_row"] = res.row_small_vertices;
        prov["stable_extension_per_col"] = res.col_stable_sets;
        j["provenance"] = prov;
    } catch (const IdentityViolation& e) {
        pass = false;
        detail = e.what();
    }
    j["verdict"] = pass ? "pass" : "fail";
    if (!pass) j["detail"] = detail;
    write_output(out, j.dump(2) + "\n");
    return pass ? kOk : kCheckFailed;
}

// ------------------------------------------------------------ bounds/sweep

ordered_json regime_json(const RegimeParams& rp) {
    ordered_json j;
    j["regime"] = regime_name(rp.regime);
    j["t"] = rp.t;
    j["ell"] = rp.ell;
    j["gamma"] = rat_to_string(rp.gamma);
    j["d"] = rat_to_string(rp.d);
    j["v"] = rp.v;
    j["g"] = rp.g_valid ? ordered_json(rp.g) : ordered_json(nullptr);
    j["predicted_exponent"] = rp.predicted_exponent;
    j["flags"] = rp.flags;
    return j;
}

int cmd_bounds(double n, double p, double c, double delta, std::uint64_t seed,
               const std::string& out) {
    ordered_json config{{"n", n}, {"p", p}, {"c", c}, {"delta", delta}, {"seed", seed}};
    XcBoundReport rep = xc_bound_report(n, p, c, delta);
    ordered_json j = report_skeleton("bounds", config);
    j["params"] = regime_json(rep.params);
    j["lower_exponent"] = rep.lower_exponent;
    j["upper_exponent"] = rep.upper_exponent;
    j["caveat"] = rep.caveat;
    write_output(out, j.dump(2) + "\n");
    return kOk;
}

int cmd_sweep(double n, int points, const std::string& grid_spec, double c, double delta,
              std::uint64_t seed, const std::string& out) {
    std::vector<double> grid;
    if (!grid_spec.empty()) {
        std::istringstream ss(grid_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
    } else {
        grid = default_sweep_grid(n, points);
    }
    ordered_json config{{"n", n}, {"points", points}, {"p_grid", grid_spec},
                        {"c", c}, {"delta", delta}, {"seed", seed}};
    auto rows = xc_bound_sweep(n, grid, c, delta);
    std::ostringstream csv;
    csv << config_comment(config);
    csv << "p,regime,t,ell,gamma,d,v,predicted_exponent,t_high,t_mid,t_low,"
           "exp_high,exp_mid,exp_low,upper_exponent,flags\n";
    for (const auto& row : rows) {
        const auto& rp = row.selected;
        csv << format_double(row.p) << ',' << regime_name(rp.regime) << ',' << rp.t << ','
            << rp.ell << ',' << rat_to_string(rp.gamma) << ',' << rat_to_string(rp.d) << ','
            << rp.v << ',' << format_double(rp.predicted_exponent) << ','
            << format_double(row.t_high) << ',' << format_double(row.t_mid) << ','
            << format_double(row.t_low) << ',' << format_double(row.exp_high) << ','
            << format_double(row.exp_mid) << ',' << format_double(row.exp_low) << ','
            << format_double(row.upper_exponent) << ',';
        for (std::size_t i = 0; i < rp.flags.size(); ++i)
            csv << (i ? "; " : "") << rp.flags[i];
        csv << '\n';
    }
    write_output(out, csv.str());
    return kOk;
}

// ------------------------------------------------- experiment CSV helpers

std::string experiment_csv(const ordered_json& config, double n, double p,
                           const McEstimate& est, double g, double c0g2, bool g_valid,
                           const std::string& regime, int t, int ell,
                           double predicted_exponent, bool params_valid,
                           const std::string& extra_header, const std::string& extra_row) {
    std::ostringstream csv;
    csv << config_comment(config);
    csv << "n,p,seed,trials,successes,undecided,point,ci_low,ci_high,g,c0g2,regime,t,ell,"
           "predicted_exponent"
        << extra_header << "\n";
    csv << format_double(n) << ',' << format_double(p) << ',' << est.seed << ','
        << est.trials << ',' << est.successes << ',' << est.undecided << ','
        << format_double(est.point) << ',' << format_double(est.ci_low) << ','
        << format_double(est.ci_high) << ',' << na_or(g, g_valid) << ','
        << na_or(c0g2, g_valid) << ',' << regime << ','
        << (params_valid ? std::to_string(t) : std::string("NA")) << ','
        << (params_valid ? std::to_string(ell) : std::string("NA")) << ','
        << na_or(predicted_exponent, params_valid) << extra_row << "\n";
    return csv.str();
}

int cmd_gnp_contain(const std::string& tmpl_spec, int ell, bool auto_params, double n,
                    double p, int trials, std::uint64_t seed, std::uint64_t budget,
                    int threads, const std::string& out) {
    int ni = static_cast<int>(n);
    Graph tmpl;
    int used_ell = ell;
    std::string regime = "manual";
    if (auto_params) {
        RegimeParams rp = select_parameters(n, p);
        tmpl = Graph::complete(rp.t);
        used_ell = rp.ell;
        regime = regime_name(rp.regime);
    } else {
        tmpl = parse_template(tmpl_spec);
    }
    GadgetGraph gg = GadgetGraph::build(tmpl, used_ell);
    int t = tmpl.vertex_count();
    // Closed-form average-degree cap for gadgets: 3 at ell=0, else 2+1/(ell+1)
    double d = used_ell == 0 ? 3.0 : 2.0 + 1.0 / (used_ell + 1);

    ordered_json config{{"template", auto_params ? "auto" : tmpl_spec},
                        {"ell", used_ell},   {"n", n},
                        {"p", p},            {"trials", trials},
                        {"seed", seed},      {"budget", budget},
                        {"threads", threads}};
    ContainmentReport rep =
        containment_probability_mc(gg.graph(), ni, p, trials, seed, budget, d, threads);
    double predicted = t * std::log2(1.5);
    write_output(out, experiment_csv(config, n, p, rep.estimate, rep.g, rep.c0_g_squared,
                                     rep.bound_valid, regime, t, used_ell, predicted, true,
                                     ",d_used", "," + format_double(rep.d_used)));
    // check: when the bound applies, the observed non-containment frequency
    // stays below c0 g^2 + 3 sqrt(c0 g^2 / trials)
    if (rep.estimate.flagged) return kCheckFailed;
    if (rep.bound_valid && rep.c0_g_squared < 1.0) {
        double cap = rep.c0_g_squared +
                     3.0 * std::sqrt(rep.c0_g_squared / static_cast<double>(trials));
        if (rep.estimate.point > cap) return kCheckFailed;
    }
    return kOk;
}

int cmd_alpha_tail(int n, double p, int threshold, int trials, std::uint64_t seed,
                   int threads, const std::string& out) {
    ordered_json config{{"n", n},       {"p", p},          {"threshold", threshold},
                        {"trials", trials}, {"seed", seed}, {"threads", threads}};
    AlphaTailReport rep = alpha_tail_experiment(n, p, threshold, trials, seed, threads);
    write_output(out, experiment_csv(config, n, p, rep.estimate, 0, 0, false, "NA", 0, 0, 0,
                                     false, ",threshold,analytic_bound",
                                     "," + std::to_string(threshold) + "," +
                                         format_double(rep.analytic_bound)));
    return kOk;
}

// ------------------------------------------------------------------- nnr

int cmd_nnr(const std::string& matrix_path, int rmax, int restarts, int iters,
            std::uint64_t seed, std::uint64_t budget, const std::string& out) {
    RatMatrix m = rat_matrix_from_csv(read_file(matrix_path));
    ordered_json config{{"matrix", matrix_path}, {"rmax", rmax},
                        {"restarts", restarts},  {"iters", iters},
                        {"seed", seed},          {"budget", budget}};
    ordered_json j = report_skeleton("nnr", config);
    RectangleCover rc = rectangle_cover_bound(m, budget);
    j["rectangle_bound"] = rc.bound;
    j["rectangle_exact"] = rc.exact;
    NnrOptions opt;
    opt.rmax = rmax;
    opt.restarts = restarts;
    opt.iters = iters;
    opt.seed = seed;
    opt.rect_budget = budget;
    RankInterval ri = exact_nnegrk_small(m, opt);
    j["lower"] = ri.lower;
    j["upper"] = ri.upper;
    j["lower_method"] = ri.lower_method;
    j["upper_method"] = ri.upper_method;
    j["certified"] = ri.certified();
    write_output(out, j.dump(2) + "\n");
    return kOk;
}

// ----------------------------------------------------------------- slack

int cmd_slack(const std::string& kind, const std::string& tmpl_spec, int ell, int n, int k,
              const std::string& rho, const std::string& format, std::uint64_t seed,
              const std::string& out) {
    ordered_json config{{"kind", kind}, {"template", tmpl_spec}, {"ell", ell},
                        {"n", n},       {"k", k},                {"rho", rho},
                        {"format", format}, {"seed", seed}};
    RatMatrix m;
    if (kind == "nu") {
        Graph tmpl = parse_template(tmpl_spec);
        Graph g = ell >= 0 ? GadgetGraph::build(tmpl, ell).graph() : tmpl;
        m = slack_matrix(stab_nu_problem(g));
    } else if (kind == "u-toy") {
        UniformToy toy = uniform_model_toy(n, k, rat_from_string(rho));
        m = slack_matrix(toy.problem);
    } else if (kind == "udisj") {
        m = k >= 0 ? build_udisj(n, k) : build_udisj(n);
        if (rho != "0") m = m.shifted(rat_from_string(rho));
    } else if (kind == "complete-family") {
        m = complete_family_example(n);
    } else {
        throw Error("unknown slack kind '" + kind +
                    "' (expected nu | u-toy | udisj | complete-family)");
    }
    if (format == "json") {
        ordered_json j = report_skeleton("slack", config);
        j["matrix"] = nlohmann::json::parse(matrix_to_json(m));
        write_output(out, j.dump(2) + "\n");
    } else {
        write_output(out, config_comment(config) + matrix_to_csv(m));
    }
    return kOk;
}

// ------------------------------------------------------------- factorize

int cmd_factorize(const std::string& matrix_path, int rank, int restarts, int iters,
                  std::uint64_t seed, const std::string& out_prefix) {
    RealMatrix m = real_matrix_from_csv(read_file(matrix_path));
    ordered_json config{{"matrix", matrix_path}, {"rank", rank},
                        {"restarts", restarts},  {"iters", iters},
                        {"seed", seed}};
    NmfResult res = nmf_upper(m, rank, restarts, iters, seed);
    ordered_json j = report_skeleton("factorize", config);
    j["found"] = res.found;
    j["max_residual"] = res.max_residual;
    j["restart_index"] = res.restart_index;
    if (res.found) {
        auto [left, right] = factorization_to_csv_pair(res.factorization);
        write_output(out_prefix + ".left.csv", left);
        write_output(out_prefix + ".right.csv", right);
        j["left"] = out_prefix + ".left.csv";
        j["right"] = out_prefix + ".right.csv";
    }
    write_output(out_prefix + ".json", j.dump(2) + "\n");
    return res.found ? kOk : kCheckFailed;
}

// ---------------------------------------------------------- lp-roundtrip

int cmd_lp_roundtrip(const std::string& tmpl_spec, int ell, std::uint64_t seed,
                     const std::string& out) {
    Graph tmpl = parse_template(tmpl_spec);
    Graph g = ell >= 0 ? GadgetGraph::build(tmpl, ell).graph() : tmpl;
    MaxProblem prob = stab_nu_problem(g);
    RatMatrix slack = slack_matrix(prob);

    // exact seed factorization: T = slack, U = I (or transposed shape)
    RatFactorization f;
    std::size_t rows = slack.rows(), cols = slack.cols();
    if (cols <= rows) {
        f.left.assign(rows, std::vector<Rat>(cols, Rat(0)));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) f.left[r][c] = slack.at(r, c);
        f.right.assign(cols, std::vector<Rat>(cols, Rat(0)));
        for (std::size_t c = 0; c < cols; ++c) f.right[c][c] = 1;
    } else {
        f.left.assign(rows, std::vector<Rat>(rows, Rat(0)));
        for (std::size_t r = 0; r < rows; ++r) f.left[r][r] = 1;
        f.right.assign(rows, std::vector<Rat>(cols, Rat(0)));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) f.right[r][c] = slack.at(r, c);
    }

    ordered_json config{{"template", tmpl_spec}, {"ell", ell}, {"seed", seed}};
    ordered_json j = report_skeleton("lp-roundtrip", config);
    bool ok = true;
    std::string detail;
    try {
        LPFormulation lp = factorization_to_lp(f, prob);
        RatFactorization back = lp_to_factorization(lp, prob);
        VerifyResult ver = verify_factorization(slack, back, Rat(0));
        ok = ver.ok && back.rank() <= f.rank() + 1;
        j["lp"] = nlohmann::json::parse(lp_to_json(lp));
        j["initial_rank"] = f.rank();
        j["lp_size"] = lp.size();
        j["roundtrip_rank"] = back.rank();
        j["roundtrip_residual"] = ver.max_residual;
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    j["verdict"] = ok ? "pass" : "fail";
    if (!detail.empty()) j["detail"] = detail;
    write_output(out, j.dump(2) + "\n");
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended-formulation complexity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t budget = 1ull << 24;
    app.add_option("--out", out, "output file (default stdout)")->capture_default_str();
    app.add_option("--format", format, "csv or json")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed (overrides XFC_SEED)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--budget", budget, "search node budget")->capture_default_str();

    // gadget
    auto* gadget = app.add_subcommand("gadget", "build a gadget graph");
    std::string tmpl = "K3";
    int ell = 0;
    gadget->add_option("--template", tmpl, "K<t> | C<t> | P<t> | file")->required();
    gadget->add_option("--ell", ell, "even subdivision parameter")->required();

    // embed-check
    auto* embed = app.add_subcommand("embed-check", "verify the UDISJ embedding");
    int embed_t = 3;
    int embed_ell = 0;
    embed->add_option("--t", embed_t, "template size K_t")->required();
    embed->add_option("--ell", embed_ell, "even subdivision parameter")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "xc bound calculators at (n,p)");
    double bn = 1e6, bp = 0.1, bc = 1.0, bdelta = 0.5;
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--p", bp)->required();
    bounds->add_option("--c", bc)->capture_default_str();
    bounds->add_option("--delta", bdelta)->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "bound sweep over a p grid");
    double sn = 1e6;
    int spoints = 40;
    std::string sgrid;
    double sc = 1.0, sdelta = 0.5;
    sweep->add_option("--n", sn)->required();
    sweep->add_option("--points", spoints)->capture_default_str();
    sweep->add_option("--p-grid", sgrid, "comma-separated p values");
    sweep->add_option("--c", sc)->capture_default_str();
    sweep->add_option("--delta", sdelta)->capture_default_str();

    // gnp-contain
    auto* contain = app.add_subcommand("gnp-contain", "induced-containment Monte Carlo");
    std::string ctmpl = "K3";
    int cell = 0;
    bool cauto = false;
    double cn = 1000, cp = 0.3;
    int ctrials = 100, cthreads = 1;
    contain->add_option("--template", ctmpl)->capture_default_str();
    contain->add_option("--ell", cell)->capture_default_str();
    contain->add_flag("--auto", cauto, "pick t, ell from the regime calculator");
    contain->add_option("--n", cn)->required();
    contain->add_option("--p", cp)->required();
    contain->add_option("--trials", ctrials)->required();
    contain->add_option("--threads", cthreads)->capture_default_str();

    // alpha-tail
    auto* tail = app.add_subcommand("alpha-tail", "stability-number tail Monte Carlo");
    int tn = 64, tthreshold = 18, ttrials = 2000, tthreads = 1;
    double tp = 0.5;
    tail->add_option("--n", tn)->required();
    tail->add_option("--p", tp)->required();
    tail->add_option("--threshold", tthreshold)->required();
    tail->add_option("--trials", ttrials)->required();
    tail->add_option("--threads", tthreads)->capture_default_str();

    // nnr
    auto* nnr = app.add_subcommand("nnr", "nonnegative rank interval for a matrix");
    std::string nmatrix;
    int nrmax = 6, nrestarts = 8, niters = 20000;
    nnr->add_option("--matrix", nmatrix, "matrix CSV (NA = undefined)")->required();
    nnr->add_option("--rmax", nrmax)->capture_default_str();
    nnr->add_option("--restarts", nrestarts)->capture_default_str();
    nnr->add_option("--iters", niters)->capture_default_str();

    // slack
    auto* slack = app.add_subcommand("slack", "slack matrices and UDISJ builders");
    std::string skind = "nu", stmpl = "K2", srho = "0";
    int sell = 0, snn = 3, sk = -1;
    slack->add_option("--kind", skind, "nu | u-toy | udisj | complete-family")
        ->capture_default_str();
    slack->add_option("--template", stmpl)->capture_default_str();
    slack->add_option("--ell", sell, "gadget ell; -1 = use the template directly")
        ->capture_default_str();
    slack->add_option("--n", snn)->capture_default_str();
    slack->add_option("--k", sk, "row restriction (udisj) or subset size (u-toy)")
        ->capture_default_str();
    slack->add_option("--rho", srho, "shift, exact rational")->capture_default_str();

    // factorize
    auto* fact = app.add_subcommand("factorize", "NMF factorization of a matrix CSV");
    std::string fmatrix, fout = "factorization";
    int frank = 2, frestarts = 8, fiters = 20000;
    fact->add_option("--matrix", fmatrix)->required();
    fact->add_option("--rank", frank)->required();
    fact->add_option("--restarts", frestarts)->capture_default_str();
    fact->add_option("--iters", fiters)->capture_default_str();
    fact->add_option("--out-prefix", fout)->capture_default_str();

    // lp-roundtrip
    auto* lprt = app.add_subcommand("lp-roundtrip", "factorization theorem round trip");
    std::string ltmpl = "K2";
    int lell = 0;
    lprt->add_option("--template", ltmpl)->capture_default_str();
    lprt->add_option("--ell", lell, "gadget ell; -1 = use the template directly")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (!seed_given) seed = default_seed();

        if (*gadget) return cmd_gadget(tmpl, ell, seed, out);
        if (*embed) return cmd_embed_check(embed_t, embed_ell, seed, out);
        if (*bounds) return cmd_bounds(bn, bp, bc, bdelta, seed, out);
        if (*sweep) return cmd_sweep(sn, spoints, sgrid, sc, sdelta, seed, out);
        if (*contain)
            return cmd_gnp_contain(ctmpl, cell, cauto, cn, cp, ctrials, seed, budget,
                                   cthreads, out);
        if (*tail) return cmd_alpha_tail(tn, tp, tthreshold, ttrials, seed, tthreads, out);
        if (*nnr) return cmd_nnr(nmatrix, nrmax, nrestarts, niters, seed, budget, out);
        if (*slack)
            return cmd_slack(skind, stmpl, sell, snn, sk, srho, format, seed, out);
        if (*fact) return cmd_factorize(fmatrix, frank, frestarts, fiters, seed, fout);
        if (*lprt) return cmd_lp_roundtrip(ltmpl, lell, seed, out);
        std::cerr << "no subcommand selected\n";
        return kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
