// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
//
// gdiv command line tool. Four subcommands: eval (divergence values over row
// pairs), centroid (weighted centroid with its Jensen bound), cluster
// (k-means under a g-Bregman divergence), verify (randomized identity
// suites). stdout carries JSON only; diagnostics go to stderr.
//
// Exit codes: 0 success (verify: all checks passed), 1 verify found failing
// checks, 2 parse or domain errors, 3 dimension or length mismatches,
// 4 operations needing an absent conjugate, 5 cluster count above data size.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdiv/catalog.hpp"
#include "gdiv/centroid.hpp"
#include "gdiv/divergence.hpp"
#include "gdiv/errors.hpp"
#include "gdiv/identities.hpp"

using nlohmann::json;

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const gdiv::LengthMismatchError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const gdiv::UnsupportedError*>(&e) != nullptr) return 4;
    return 2;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::optional<double> parse_cell(const std::string& raw) {
    const std::string cell = trim(raw);
    if (cell.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size() || errno == ERANGE) return std::nullopt;
    return v;
}

// One comma-separated row of decimal floats.
std::vector<double> parse_row(const std::string& line, const std::string& what) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const std::optional<double> v = parse_cell(cell);
        if (!v) {
            throw gdiv::DomainError(what + ": cell '" + trim(cell) +
                                    "' is not a decimal float");
        }
        row.push_back(*v);
    }
    if (row.empty()) throw gdiv::DomainError(what + ": empty row");
    return row;
}

struct Dataset {
    std::vector<gdiv::Point> points;
    std::vector<std::string> labels;  // unused by the current commands
    std::string source_path;
};

// CSV: one point per row, comma-separated floats, blank lines ignored, an
// optional header row detected by a non-numeric first cell.
Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gdiv::DomainError("cannot read input file '" + path + "'");
    Dataset ds;
    ds.source_path = path;
    std::string line;
    bool first_content = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (first_content) {
            first_content = false;
            std::stringstream ss(line);
            std::string head;
            std::getline(ss, head, ',');
            if (!parse_cell(head)) continue;  // header row
        }
        std::vector<double> row =
            parse_row(line, path + ":" + std::to_string(line_no));
        if (!ds.points.empty() && row.size() != ds.points.front().dim()) {
            throw gdiv::LengthMismatchError(
                path + ":" + std::to_string(line_no) + ": row has " +
                std::to_string(row.size()) + " columns, expected " +
                std::to_string(ds.points.front().dim()));
        }
        ds.points.emplace_back(std::move(row));
    }
    if (ds.points.empty()) throw gdiv::DomainError("input file '" + path + "' holds no points");
    return ds;
}

// --p/--q accept either a CSV path or an inline comma-separated row.
std::vector<gdiv::Point> load_points_arg(const std::string& arg, const std::string& flag) {
    if (std::filesystem::exists(arg)) return load_dataset(arg).points;
    return {gdiv::Point(parse_row(arg, flag))};
}

json worst_case_json(const gdiv::WorstCase& wc) {
    json pts = json::object();
    for (const auto& [name, coords] : wc.points) pts[name] = coords;
    json j{{"trial", wc.trial}, {"points", pts}};
    if (wc.skew) j["skew"] = *wc.skew;
    return j;
}

json report_json(const gdiv::IdentityReport& r) {
    json j{{"identity_name", r.identity_name}, {"divergence", r.divergence},
           {"trials", r.trials},               {"max_residual", r.max_residual},
           {"mean_residual", r.mean_residual}, {"failures", r.failures},
           {"pass", r.pass}};
    if (r.worst_case) j["worst_case"] = worst_case_json(*r.worst_case);
    if (r.error) j["error"] = *r.error;
    return j;
}

void emit(const json& j) { std::printf("%s\n", j.dump().c_str()); }

// ---- eval ----------------------------------------------------------------

struct EvalOpts {
    std::string divergence;
    std::optional<double> family_index;
    std::string p_arg;
    std::string q_arg;
    std::string form = "bregman";
    std::optional<double> skew;
};

int run_eval(const EvalOpts& opt) {
    const gdiv::CatalogEntry entry = gdiv::get_entry(opt.divergence, opt.family_index);
    if (opt.skew && opt.form != "jensen") {
        throw gdiv::DomainError("--skew applies only to --form jensen");
    }
    const std::vector<gdiv::Point> ps = load_points_arg(opt.p_arg, "--p");
    const std::vector<gdiv::Point> qs = load_points_arg(opt.q_arg, "--q");
    if (ps.size() != qs.size()) {
        throw gdiv::LengthMismatchError("--p supplies " + std::to_string(ps.size()) +
                                        " rows but --q supplies " +
                                        std::to_string(qs.size()));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        json j{{"divergence", entry.key}, {"form", opt.form}};
        if (opt.form == "bregman") {
            j["value"] = gdiv::g_bregman(entry.spec, ps[i], qs[i]);
        } else if (opt.form == "sym") {
            j["value"] = gdiv::g_bregman_sym(entry.spec, ps[i], qs[i]);
        } else {
            const double a = opt.skew.value_or(0.5);
            j["skew"] = a;
            j["value"] = gdiv::g_skew_jensen(entry.spec, ps[i], qs[i], gdiv::SkewWeight(a));
        }
        emit(j);
    }
    return 0;
}

// ---- centroid --------------------------------------------------------------

struct CentroidOpts {
    std::string divergence;
    std::optional<double> family_index;
    std::string input;
    std::optional<std::string> weights_row;
    std::string side = "right";
};

gdiv::Side parse_side(const std::string& side) {
    return side == "left" ? gdiv::Side::left : gdiv::Side::right;
}

gdiv::WeightVector resolve_weights(const std::optional<std::string>& row,
                                   std::size_t n) {
    if (!row) return gdiv::WeightVector::uniform(n);
    std::vector<double> w = parse_row(*row, "--weights");
    if (w.size() != n) {
        throw gdiv::LengthMismatchError("--weights lists " + std::to_string(w.size()) +
                                        " entries for " + std::to_string(n) + " points");
    }
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0)) throw gdiv::DomainError("--weights must sum to a positive value");
    for (double& v : w) v /= total;  // accepted unnormalized, e.g. "1,1,2"
    return gdiv::WeightVector(std::move(w));
}

int run_centroid(const CentroidOpts& opt) {
    const gdiv::CatalogEntry entry = gdiv::get_entry(opt.divergence, opt.family_index);
    const Dataset ds = load_dataset(opt.input);
    const gdiv::WeightVector w = resolve_weights(opt.weights_row, ds.points.size());
    const gdiv::Side side = parse_side(opt.side);

    const gdiv::Point centroid = side == gdiv::Side::right
                                     ? gdiv::right_centroid(entry.spec, ds.points, w)
                                     : gdiv::left_centroid(entry.spec, ds.points, w);
    const double objective =
        gdiv::weighted_objective(entry.spec, ds.points, w, centroid, side);
    const double bound = gdiv::jensen_lower_bound(entry.spec, ds.points, w, side);
    const double residual = std::abs(objective - bound) / (1.0 + std::abs(bound));

    emit(json{{"centroid", centroid.vec()},
              {"objective", objective},
              {"jensen_bound", bound},
              {"residual", residual}});
    return 0;
}

// ---- cluster ---------------------------------------------------------------

struct ClusterOpts {
    std::string divergence;
    std::optional<double> family_index;
    std::string input;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t max_iters = 100;
    double tol = 1e-9;
    std::string side = "right";
};

int run_cluster(const ClusterOpts& opt) {
    const gdiv::CatalogEntry entry = gdiv::get_entry(opt.divergence, opt.family_index);
    const Dataset ds = load_dataset(opt.input);
    if (opt.k == 0) throw gdiv::DomainError("--k must be positive");
    if (opt.k > ds.points.size()) {
        std::fprintf(stderr, "gdiv: --k %zu exceeds the %zu input points\n", opt.k,
                     ds.points.size());
        return 5;
    }
    gdiv::ClusterConfig cfg;
    cfg.k = opt.k;
    cfg.max_iters = opt.max_iters;
    cfg.tol = opt.tol;
    cfg.seed = opt.seed;
    cfg.side = parse_side(opt.side);
    const gdiv::ClusterResult result = gdiv::kmeans(entry.spec, ds.points, cfg);

    json centroids = json::array();
    for (const gdiv::Point& c : result.centroids) centroids.push_back(c.vec());
    emit(json{{"assignments", result.assignments},
              {"centroids", centroids},
              {"objective_trace", result.objective_trace},
              {"iterations", result.iterations},
              {"converged", result.converged}});
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
    std::string suite = "all";
    std::string divergence = "all";
    std::size_t trials = 1000;
    std::size_t dim = 8;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyOpts& opt) {
    const std::vector<std::string> keys = opt.divergence == "all"
                                              ? gdiv::catalog_keys()
                                              : std::vector<std::string>{opt.divergence};
    gdiv::TrialConfig cfg;
    cfg.trials = opt.trials;
    cfg.dim = opt.dim;
    cfg.seed = opt.seed;
    const std::vector<gdiv::IdentityReport> reports = gdiv::run_suite(opt.suite, keys, cfg);

    json arr = json::array();
    bool all_pass = true;
    for (const gdiv::IdentityReport& r : reports) {
        arr.push_back(report_json(r));
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", arr.dump(2).c_str());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "g-Bregman and skew g-Jensen divergences: evaluation, centroids, "
        "clustering, and identity verification"};
    app.require_subcommand(1);

    EvalOpts eval_opts;
    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate a divergence over row pairs from --p and --q");
    eval->add_option("--divergence", eval_opts.divergence,
                     "Catalog key: kl, reverse_kl, alpha(a), hellinger, "
                     "pearson_chi2, neyman_chi2")
        ->required();
    eval->add_option("--family-index", eval_opts.family_index,
                     "Family index for the alpha entry (outside {0,1})");
    eval->add_option("--p", eval_opts.p_arg, "CSV path or inline row for the first argument")
        ->required();
    eval->add_option("--q", eval_opts.q_arg, "CSV path or inline row for the second argument")
        ->required();
    eval->add_option("--form", eval_opts.form, "bregman (default), sym, or jensen")
        ->check(CLI::IsMember({"bregman", "sym", "jensen"}));
    eval->add_option("--skew", eval_opts.skew, "Skew in (0,1) for --form jensen; default 0.5");

    CentroidOpts centroid_opts;
    CLI::App* centroid = app.add_subcommand(
        "centroid", "Weighted centroid of CSV points with its Jensen lower bound");
    centroid->add_option("--divergence", centroid_opts.divergence, "Catalog key")->required();
    centroid->add_option("--family-index", centroid_opts.family_index,
                         "Family index for the alpha entry");
    centroid->add_option("--input", centroid_opts.input, "CSV file, one point per row")
        ->required();
    centroid->add_option("--weights", centroid_opts.weights_row,
                         "Comma-separated weights, one per point; normalized to sum 1");
    centroid->add_option("--side", centroid_opts.side,
                         "right (default): min sum w_i B(p_i, q); left: min sum w_i B(q, p_i)")
        ->check(CLI::IsMember({"right", "left"}));

    ClusterOpts cluster_opts;
    CLI::App* cluster = app.add_subcommand("cluster", "k-means under a g-Bregman divergence");
    cluster->add_option("--divergence", cluster_opts.divergence, "Catalog key")->required();
    cluster->add_option("--family-index", cluster_opts.family_index,
                        "Family index for the alpha entry");
    cluster->add_option("--input", cluster_opts.input, "CSV file, one point per row")
        ->required();
    cluster->add_option("--k", cluster_opts.k, "Cluster count")->required();
    cluster->add_option("--seed", cluster_opts.seed, "PRNG seed (default 0)");
    cluster->add_option("--max-iters", cluster_opts.max_iters, "Iteration cap (default 100)");
    cluster->add_option("--tol", cluster_opts.tol,
                        "Relative objective-decrease stopping threshold (default 1e-9)");
    cluster->add_option("--side", cluster_opts.side, "right (default) or left")
        ->check(CLI::IsMember({"right", "left"}));

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run randomized identity suites and emit IdentityReport JSON");
    verify->add_option("--suite", verify_opts.suite, "Suite name (default all)")
        ->check(CLI::IsMember({"all", "cosines", "four-point", "parallelogram", "division",
                               "bj", "pbj", "oracle", "limits"}));
    verify->add_option("--divergence", verify_opts.divergence,
                       "Catalog key or 'all' (default); bare alpha runs alpha(0.5)");
    verify->add_option("--trials", verify_opts.trials, "Trials per check (default 1000)");
    verify->add_option("--dim", verify_opts.dim, "Point dimension (default 8)");
    verify->add_option("--seed", verify_opts.seed, "PRNG seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_opts);
        if (centroid->parsed()) return run_centroid(centroid_opts);
        if (cluster->parsed()) return run_cluster(cluster_opts);
        if (verify->parsed()) return run_verify(verify_opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gdiv: %s\n", e.what());
        return exit_code_for(e);
    }
    return 2;
}
