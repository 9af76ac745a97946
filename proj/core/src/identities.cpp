// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "gdiv/errors.hpp"
#include "gdiv/rng.hpp"

namespace gdiv {
namespace {

constexpr double kGapFloor = 1e-12;    // inequality slack, absolute
constexpr double kOracleTol = 1e-10;   // closed-form vs Bregman route
constexpr double kExactTol = 1e-12;    // algebraically identical routes
constexpr double kLimitEps = 1e-4;
constexpr double kLimitTol = 1e-3;
constexpr std::array<double, 7> kSkewGrid = {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99};

// Sampling order within a trial is fixed (points first, then scalars), so a
// (seed, trial, check name) triple replays the exact inputs.
Point sample_point(TrialRng& rng, const TrialConfig& cfg) {
    std::vector<double> c(cfg.dim);
    for (double& v : c) v = rng.uniform(cfg.sample_low, cfg.sample_high);
    return Point(std::move(c));
}

std::pair<std::string, std::vector<double>> named(const char* name, const Point& p) {
    return {name, p.vec()};
}

std::pair<std::string, std::vector<double>> named(const char* name,
                                                  std::vector<double> v) {
    return {name, std::move(v)};
}

// |lhs - rhs| on the 1 + |lhs| scale used by every equality check.
double rel_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

// |value - oracle| relative to the oracle magnitude.
double oracle_residual(double value, double oracle) {
    return std::abs(value - oracle) / (std::abs(oracle) + 1e-300);
}

// Per-trial aggregation. The worst case kept is the largest-residual failing
// trial; ties keep the earliest trial.
class Tally {
public:
    void add(std::uint64_t trial, double residual, bool failed, WorstCase&& wc) {
        sum_ += residual;
        max_ = std::max(max_, residual);
        ++count_;
        if (!failed) return;
        ++failures_;
        if (!worst_ || residual > worst_residual_) {
            worst_residual_ = residual;
            wc.trial = trial;
            worst_ = std::move(wc);
        }
    }

    void finish(IdentityReport& rep) const {
        rep.max_residual = count_ ? max_ : 0.0;
        rep.mean_residual = count_ ? sum_ / static_cast<double>(count_) : 0.0;
        rep.failures = failures_;
        rep.worst_case = worst_;
        rep.pass = failures_ == 0;
    }

private:
    double sum_ = 0.0;
    double max_ = -std::numeric_limits<double>::infinity();
    double worst_residual_ = 0.0;
    std::size_t count_ = 0;
    std::size_t failures_ = 0;
    std::optional<WorstCase> worst_;
};

template <class TrialFn>
IdentityReport run_trials(const char* name, const TrialConfig& cfg, TrialFn&& fn) {
    validate_trial_config(cfg);
    IdentityReport rep;
    rep.identity_name = name;
    rep.trials = cfg.trials;
    Tally tally;
    const std::uint64_t stream = fnv1a64(name);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        TrialRng rng(cfg.seed, t, stream);
        fn(rng, t, tally);
    }
    tally.finish(rep);
    return rep;
}

struct Quad {
    Point p, q, r, s;
};

// Samples p, q, r and closes the parallelogram in link space with
// s = g^{-1}(g(p) + g(r) - g(q)). `consecutive` persists across trials so the
// 1000-rejection budget counts consecutive failures, resetting on success.
Quad construct_quad(const GDivergenceSpec& spec, TrialRng& rng, const TrialConfig& cfg,
                    std::size_t& consecutive) {
    while (true) {
        Point p = sample_point(rng, cfg);
        Point q = sample_point(rng, cfg);
        Point r = sample_point(rng, cfg);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);
        const std::vector<double> gr = apply_link(spec.link, r);
        std::vector<double> target(gp.size());
        for (std::size_t i = 0; i < target.size(); ++i) {
            target[i] = gp[i] + gr[i] - gq[i];
        }
        if (std::optional<Point> s = link_preimage(spec.link, target)) {
            consecutive = 0;
            return Quad{std::move(p), std::move(q), std::move(r), std::move(*s)};
        }
        if (++consecutive >= 1000) {
            throw ResampleExhausted(
                "parallelogram construction: 1000 consecutive fourth vertices left "
                "the domain under link '" +
                spec.link.name + "'");
        }
    }
}

}  // namespace

void validate_trial_config(const TrialConfig& cfg) {
    if (cfg.trials == 0) throw DomainError("TrialConfig: trials must be positive");
    if (cfg.dim == 0) throw DomainError("TrialConfig: dim must be positive");
    if (!std::isfinite(cfg.sample_low) || !(cfg.sample_low > 0.0)) {
        throw DomainError("TrialConfig: sample_low must be a positive finite real");
    }
    if (!std::isfinite(cfg.sample_high) || !(cfg.sample_high > cfg.sample_low)) {
        throw DomainError("TrialConfig: sample_high must be finite and exceed sample_low");
    }
    if (!std::isfinite(cfg.rel_tol) || !(cfg.rel_tol > 0.0)) {
        throw DomainError("TrialConfig: rel_tol must be a positive finite real");
    }
}

IdentityReport check_law_of_cosines(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    return run_trials("law_of_cosines", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const Point r = sample_point(rng, cfg);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);
        const std::vector<double> gr = apply_link(spec.link, r);
        const std::vector<double> dp = gen.grad(gp);
        const std::vector<double> dq = gen.grad(gq);
        const std::vector<double> dr = gen.grad(gr);

        double corr_pq = 0.0;  // <g(p)-g(r), grad F(g(q))-grad F(g(r))>
        double corr_qp = 0.0;  // <g(q)-g(r), grad F(g(p))-grad F(g(r))>
        for (std::size_t i = 0; i < gp.size(); ++i) {
            corr_pq += (gp[i] - gr[i]) * (dq[i] - dr[i]);
            corr_qp += (gq[i] - gr[i]) * (dp[i] - dr[i]);
        }

        const double b_pq = bregman(gen, gp, gq);
        const double b_pr = bregman(gen, gp, gr);
        const double b_rq = bregman(gen, gr, gq);
        const double res_forward = rel_residual(b_pq, b_pr + b_rq - corr_pq);

        // Symmetric triangle expansion: both correction terms enter negated.
        const double s_pq = bregman_sym(gen, gp, gq);
        const double s_pr = bregman_sym(gen, gp, gr);
        const double s_rq = bregman_sym(gen, gr, gq);
        const double res_sym = rel_residual(s_pq, s_pr + s_rq - corr_pq - corr_qp);

        const double residual = std::max(res_forward, res_sym);
        tally.add(t, residual, residual > cfg.rel_tol,
                  WorstCase{0, {named("p", p), named("q", q), named("r", r)}, {}});
    });
}

IdentityReport check_four_point(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    return run_trials("four_point_identity", cfg,
                      [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const Point r = sample_point(rng, cfg);
        const Point s = sample_point(rng, cfg);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);
        const std::vector<double> gr = apply_link(spec.link, r);
        const std::vector<double> gs = apply_link(spec.link, s);
        const std::vector<double> dr = gen.grad(gr);
        const std::vector<double> ds = gen.grad(gs);

        double lhs = 0.0;  // <grad F(g(r)) - grad F(g(s)), g(p) - g(q)>
        for (std::size_t i = 0; i < gp.size(); ++i) {
            lhs += (dr[i] - ds[i]) * (gp[i] - gq[i]);
        }
        const double rhs = bregman(gen, gq, gr) + bregman(gen, gp, gs) -
                           bregman(gen, gp, gr) - bregman(gen, gq, gs);

        const double residual = rel_residual(lhs, rhs);
        tally.add(t, residual, residual > cfg.rel_tol,
                  WorstCase{0, {named("p", p), named("q", q), named("r", r), named("s", s)}, {}});
    });
}

IdentityReport check_parallelogram(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    std::size_t consecutive = 0;
    return run_trials("parallelogram_law", cfg,
                      [&, consecutive](TrialRng& rng, std::uint64_t t, Tally& tally) mutable {
        Quad quad = construct_quad(spec, rng, cfg, consecutive);
        const std::vector<double> gp = apply_link(spec.link, quad.p);
        const std::vector<double> gq = apply_link(spec.link, quad.q);
        const std::vector<double> gr = apply_link(spec.link, quad.r);
        const std::vector<double> gs = apply_link(spec.link, quad.s);

        const double sides = bregman_sym(gen, gp, gq) + bregman_sym(gen, gq, gr) +
                             bregman_sym(gen, gr, gs) + bregman_sym(gen, gs, gp);
        const double diagonals = bregman_sym(gen, gp, gr) + bregman_sym(gen, gq, gs);

        const double residual = rel_residual(sides, diagonals);
        tally.add(t, residual, residual > cfg.rel_tol,
                  WorstCase{0,
                            {named("p", quad.p), named("q", quad.q), named("r", quad.r),
                             named("s", quad.s)},
                            {}});
    });
}

IdentityReport check_division_lemmas(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    return run_trials("division_lemmas", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double a = rng.uniform(0.05, 0.95);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);
        std::vector<double> gr(gp.size());  // g(r) = (1-a)g(p) + a g(q)
        for (std::size_t i = 0; i < gr.size(); ++i) {
            gr[i] = (1.0 - a) * gp[i] + a * gq[i];
        }

        const double b_pq = bregman(gen, gp, gq);
        const double b_qp = bregman(gen, gq, gp);
        const double b_pr = bregman(gen, gp, gr);
        const double b_rq = bregman(gen, gr, gq);
        const double b_qr = bregman(gen, gq, gr);
        const double b_rp = bregman(gen, gr, gp);
        const double s_pq = bregman_sym(gen, gp, gq);
        const double s_pr = bregman_sym(gen, gp, gr);
        const double s_rq = bregman_sym(gen, gr, gq);
        const double s_rp = s_pr;  // the symmetric form is symmetric

        const double res_split = rel_residual(b_pq, b_pr + b_rq + (a / (1.0 - a)) * s_rq);
        const double res_split_rev =
            rel_residual(b_qp, b_qr + b_rp + ((1.0 - a) / a) * s_rp);
        const double res_sym =
            rel_residual(s_pq, (1.0 / a) * s_pr + (1.0 / (1.0 - a)) * s_rq);

        const double residual = std::max({res_split, res_split_rev, res_sym});
        const Point r = invert_link(spec.link, gr);
        tally.add(t, residual, residual > cfg.rel_tol,
                  WorstCase{0, {named("p", p), named("q", q), named("r", r)}, a});
    });
}

IdentityReport check_bj_inequality(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    return run_trials("bregman_jensen_inequality", cfg,
                      [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);
        const double sym = bregman_sym(gen, gp, gq);

        // Signed violation: -min gap over the skew grid. Negative = margin.
        double violation = -std::numeric_limits<double>::infinity();
        double worst_skew = kSkewGrid.front();
        for (double a : kSkewGrid) {
            const double sj = skew_jensen_scaled(gen, gp, gq, SkewWeight(a));
            const double v = sj - sym;
            if (v > violation) {
                violation = v;
                worst_skew = a;
            }
        }
        tally.add(t, violation, violation > kGapFloor,
                  WorstCase{0, {named("p", p), named("q", q)}, worst_skew});
    });
}

IdentityReport check_parallelogram_bj(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    std::size_t consecutive = 0;
    return run_trials("parallelogram_bregman_jensen", cfg,
                      [&, consecutive](TrialRng& rng, std::uint64_t t, Tally& tally) mutable {
        Quad quad = construct_quad(spec, rng, cfg, consecutive);
        const std::vector<double> gp = apply_link(spec.link, quad.p);
        const std::vector<double> gq = apply_link(spec.link, quad.q);
        const std::vector<double> gr = apply_link(spec.link, quad.r);
        const std::vector<double> gs = apply_link(spec.link, quad.s);

        const double sides = bregman_sym(gen, gp, gq) + bregman_sym(gen, gq, gr) +
                             bregman_sym(gen, gr, gs) + bregman_sym(gen, gs, gp);
        const std::vector<Point> pts = {quad.p, quad.q, quad.r, quad.s};
        const double jensen = multivariate_g_jensen(spec, pts, WeightVector::uniform(4));

        const double violation = jensen - 0.125 * sides;  // -gap, negative = margin
        tally.add(t, violation, violation > kGapFloor,
                  WorstCase{0,
                            {named("p", quad.p), named("q", quad.q), named("r", quad.r),
                             named("s", quad.s)},
                            {}});
    });
}

IdentityReport check_oracle_equivalence(const CatalogEntry& entry, const TrialConfig& cfg) {
    if (!entry.oracle_forward) {
        throw UnsupportedError("catalog entry '" + entry.key +
                               "' carries no closed forward form");
    }
    return run_trials("oracle_equivalence", cfg,
                      [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        double residual = oracle_residual(g_bregman(entry.spec, p, q),
                                          entry.oracle_forward(p, q));
        if (entry.oracle_symmetric) {
            residual = std::max(residual, oracle_residual(g_bregman_sym(entry.spec, p, q),
                                                          entry.oracle_symmetric(p, q)));
        }
        tally.add(t, residual, residual > kOracleTol,
                  WorstCase{0, {named("p", p), named("q", q)}, {}});
    });
}

IdentityReport check_sgjd_closed_form(const CatalogEntry& entry, const TrialConfig& cfg) {
    if (!entry.oracle_skew_jensen) {
        throw UnsupportedError("catalog entry '" + entry.key +
                               "' carries no closed skew-Jensen form");
    }
    return run_trials("sgjd_closed_form", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double a = rng.uniform(0.05, 0.95);
        const double value = g_skew_jensen(entry.spec, p, q, SkewWeight(a));
        const double residual = oracle_residual(value, entry.oracle_skew_jensen(p, q, a));
        tally.add(t, residual, residual > kOracleTol,
                  WorstCase{0, {named("p", p), named("q", q)}, a});
    });
}

IdentityReport check_alpha_chain(const TrialConfig& cfg) {
    const CatalogEntry two = get_entry("alpha", 2.0);
    const CatalogEntry minus_one = get_entry("alpha", -1.0);
    const CatalogEntry half = get_entry("alpha", 0.5);
    const CatalogEntry pearson = get_entry("pearson_chi2");
    const CatalogEntry neyman = get_entry("neyman_chi2");
    const CatalogEntry hellinger = get_entry("hellinger");

    return run_trials("alpha_chain", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double pearson_ref = pearson.oracle_forward(p, q);
        const double neyman_ref = neyman.oracle_forward(p, q);
        const double hellinger_ref = hellinger.oracle_forward(p, q);

        // Closed form against closed form: pure per-coordinate algebra.
        const double closed =
            std::max({oracle_residual(2.0 * two.oracle_forward(p, q), pearson_ref),
                      oracle_residual(2.0 * minus_one.oracle_forward(p, q), neyman_ref),
                      oracle_residual(0.5 * half.oracle_forward(p, q), hellinger_ref)});
        // Bregman route against the chain targets.
        const double routed =
            std::max({oracle_residual(2.0 * g_bregman(two.spec, p, q), pearson_ref),
                      oracle_residual(2.0 * g_bregman(minus_one.spec, p, q), neyman_ref),
                      oracle_residual(0.5 * g_bregman(half.spec, p, q), hellinger_ref)});

        const bool failed = closed > kExactTol || routed > kOracleTol;
        tally.add(t, std::max(closed, routed), failed,
                  WorstCase{0, {named("p", p), named("q", q)}, {}});
    });
}

IdentityReport check_limits(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Generator& gen = spec.generator;
    return run_trials("skew_limits", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);

        const double low = skew_jensen_scaled(gen, gp, gq, SkewWeight(kLimitEps));
        const double ref_low = bregman(gen, gq, gp);
        const double res_low = rel_residual(ref_low, low);

        const double high = skew_jensen_scaled(gen, gp, gq, SkewWeight(1.0 - kLimitEps));
        const double ref_high = bregman(gen, gp, gq);
        const double res_high = rel_residual(ref_high, high);

        const double residual = std::max(res_low, res_high);
        tally.add(t, residual, residual > kLimitTol,
                  WorstCase{0,
                            {named("p", p), named("q", q)},
                            res_low >= res_high ? kLimitEps : 1.0 - kLimitEps});
    });
}

IdentityReport check_duality(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const DualLink dual = dual_link(spec);
    const Generator& conj = spec.generator.conjugate();
    return run_trials("conjugate_duality", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double lhs = g_bregman(spec, q, p);
        const double rhs = bregman(conj, dual.forward(p), dual.forward(q));
        const double residual = rel_residual(lhs, rhs);
        tally.add(t, residual, residual > cfg.rel_tol,
                  WorstCase{0, {named("p", p), named("q", q)}, {}});
    });
}

namespace {

// A second catalog generator whose domain accepts the spec's link images,
// probed at the sample-box corners (per-coordinate extremes under a
// monotone link, and every stock domain is a half-line or all of R).
Generator linearity_partner(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    const Point low(std::vector<double>(cfg.dim, cfg.sample_low));
    const Point high(std::vector<double>(cfg.dim, cfg.sample_high));
    const std::vector<double> img_low = apply_link(spec.link, low);
    const std::vector<double> img_high = apply_link(spec.link, high);
    for (Generator candidate :
         {inverse_generator(), neg_sqrt_generator(), squared_generator()}) {
        if (candidate.name == spec.generator.name) continue;
        if (candidate.in_domain(img_low) && candidate.in_domain(img_high)) {
            return candidate;
        }
    }
    throw UnsupportedError("no stock partner generator accepts images of link '" +
                           spec.link.name + "'");
}

}  // namespace

IdentityReport check_linearity(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    validate_trial_config(cfg);
    const Generator& gen = spec.generator;
    const Generator partner = linearity_partner(spec, cfg);
    return run_trials("linearity", cfg, [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double c1 = rng.uniform(0.1, 3.0);
        const double c2 = rng.uniform(0.1, 3.0);
        const std::vector<double> gp = apply_link(spec.link, p);
        const std::vector<double> gq = apply_link(spec.link, q);

        const Generator combined = scaled_sum(c1, gen, c2, partner);
        const double lhs = bregman(combined, gp, gq);
        const double rhs = c1 * bregman(gen, gp, gq) + c2 * bregman(partner, gp, gq);

        const double residual = rel_residual(lhs, rhs);
        tally.add(t, residual, residual > kOracleTol,
                  WorstCase{0,
                            {named("p", p), named("q", q),
                             named("coefficients", std::vector<double>{c1, c2})},
                            {}});
    });
}

IdentityReport check_jensen_bregman(const GDivergenceSpec& spec, const TrialConfig& cfg) {
    return run_trials("jensen_bregman_decomposition", cfg,
                      [&](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const Point p = sample_point(rng, cfg);
        const Point q = sample_point(rng, cfg);
        const double a = rng.uniform(0.05, 0.95);

        const JensenBregmanParts parts =
            jensen_bregman_decomposition(spec, p, q, SkewWeight(a));
        const double res_split = rel_residual(parts.lhs, parts.rhs);

        // N=2 bridge: the unscaled multivariate form at weights (1-a, a) is
        // a(1-a) times the scaled bivariate value.
        const std::vector<Point> pts = {p, q};
        const double joint =
            multivariate_g_jensen(spec, pts, WeightVector({1.0 - a, a}));
        const double res_bridge = oracle_residual(joint, a * (1.0 - a) * parts.lhs);

        const bool failed = res_split > cfg.rel_tol || res_bridge > kExactTol;
        tally.add(t, std::max(res_split, res_bridge), failed,
                  WorstCase{0, {named("p", p), named("q", q)}, a});
    });
}

IdentityReport check_centroid_bound(const GDivergenceSpec& spec, const TrialConfig& cfg,
                                    Side side) {
    const char* name = side == Side::right ? "centroid_bound" : "left_centroid_bound";
    return run_trials(name, cfg, [&, side](TrialRng& rng, std::uint64_t t, Tally& tally) {
        const std::size_t n = 2 + rng.uniform_index(5);
        std::vector<Point> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pts.push_back(sample_point(rng, cfg));
        std::vector<double> raw(n);
        double total = 0.0;
        for (double& w : raw) {
            w = rng.uniform(0.1, 1.0);
            total += w;
        }
        for (double& w : raw) w /= total;
        const WeightVector weights(raw);

        const Point centroid = side == Side::right ? right_centroid(spec, pts, weights)
                                                   : left_centroid(spec, pts, weights);
        const double bound = jensen_lower_bound(spec, pts, weights, side);
        const double at_centroid = weighted_objective(spec, pts, weights, centroid, side);
        const double res_eq = rel_residual(bound, at_centroid);

        // A perturbed candidate must never undercut the Jensen bound.
        std::vector<double> jog = centroid.vec();
        for (double& v : jog) v *= 1.0 + rng.uniform(-0.2, 0.2);
        const Point candidate(std::move(jog));
        const double gap = weighted_objective(spec, pts, weights, candidate, side) - bound;
        const double violation = std::max(0.0, -gap);

        const bool failed = res_eq > cfg.rel_tol || gap < -kGapFloor;
        WorstCase wc;
        for (std::size_t i = 0; i < n; ++i) {
            wc.points.emplace_back("p" + std::to_string(i + 1), pts[i].vec());
        }
        wc.points.emplace_back("weights", raw);
        wc.points.emplace_back("candidate", candidate.vec());
        tally.add(t, std::max(res_eq, violation), failed, std::move(wc));
    });
}

namespace {

enum class CheckId {
    cosines,
    four_point,
    parallelogram,
    division,
    bj,
    pbj,
    oracle,
    sgjd,
    limits,
    duality,
    linearity,
    jensen_bregman,
    centroid_right,
    centroid_left,
};

std::vector<CheckId> suite_checks(std::string_view suite) {
    if (suite == "cosines") return {CheckId::cosines};
    if (suite == "four-point") return {CheckId::four_point};
    if (suite == "parallelogram") return {CheckId::parallelogram};
    if (suite == "division") return {CheckId::division};
    if (suite == "bj") return {CheckId::bj};
    if (suite == "pbj") return {CheckId::pbj};
    if (suite == "oracle") return {CheckId::oracle, CheckId::sgjd};
    if (suite == "limits") return {CheckId::limits};
    if (suite == "all") {
        return {CheckId::cosines,  CheckId::four_point, CheckId::parallelogram,
                CheckId::division, CheckId::bj,         CheckId::pbj,
                CheckId::oracle,   CheckId::sgjd,       CheckId::limits,
                CheckId::duality,  CheckId::linearity,  CheckId::jensen_bregman,
                CheckId::centroid_right, CheckId::centroid_left};
    }
    throw UnknownKeyError(
        "unknown suite '" + std::string(suite) +
        "'; expected all|cosines|four-point|parallelogram|division|bj|pbj|oracle|limits");
}

const char* check_name(CheckId id) {
    switch (id) {
        case CheckId::cosines: return "law_of_cosines";
        case CheckId::four_point: return "four_point_identity";
        case CheckId::parallelogram: return "parallelogram_law";
        case CheckId::division: return "division_lemmas";
        case CheckId::bj: return "bregman_jensen_inequality";
        case CheckId::pbj: return "parallelogram_bregman_jensen";
        case CheckId::oracle: return "oracle_equivalence";
        case CheckId::sgjd: return "sgjd_closed_form";
        case CheckId::limits: return "skew_limits";
        case CheckId::duality: return "conjugate_duality";
        case CheckId::linearity: return "linearity";
        case CheckId::jensen_bregman: return "jensen_bregman_decomposition";
        case CheckId::centroid_right: return "centroid_bound";
        case CheckId::centroid_left: return "left_centroid_bound";
    }
    return "unknown";
}

IdentityReport dispatch_check(CheckId id, const CatalogEntry& entry, const TrialConfig& cfg) {
    switch (id) {
        case CheckId::cosines: return check_law_of_cosines(entry.spec, cfg);
        case CheckId::four_point: return check_four_point(entry.spec, cfg);
        case CheckId::parallelogram: return check_parallelogram(entry.spec, cfg);
        case CheckId::division: return check_division_lemmas(entry.spec, cfg);
        case CheckId::bj: return check_bj_inequality(entry.spec, cfg);
        case CheckId::pbj: return check_parallelogram_bj(entry.spec, cfg);
        case CheckId::oracle: return check_oracle_equivalence(entry, cfg);
        case CheckId::sgjd: return check_sgjd_closed_form(entry, cfg);
        case CheckId::limits: return check_limits(entry.spec, cfg);
        case CheckId::duality: return check_duality(entry.spec, cfg);
        case CheckId::linearity: return check_linearity(entry.spec, cfg);
        case CheckId::jensen_bregman: return check_jensen_bregman(entry.spec, cfg);
        case CheckId::centroid_right:
            return check_centroid_bound(entry.spec, cfg, Side::right);
        case CheckId::centroid_left:
            return check_centroid_bound(entry.spec, cfg, Side::left);
    }
    throw UnknownKeyError("unknown check id");
}

// A check that throws becomes a failed report carrying the error text, so
// sibling checks still run and "pass iff failures == 0" stays intact.
template <class Fn>
void guarded(std::vector<IdentityReport>& out, const std::string& divergence,
             const char* name, const TrialConfig& cfg, Fn&& fn) {
    try {
        IdentityReport rep = fn();
        rep.divergence = divergence;
        out.push_back(std::move(rep));
    } catch (const std::exception& e) {
        IdentityReport rep;
        rep.identity_name = name;
        rep.divergence = divergence;
        rep.trials = cfg.trials;
        rep.failures = 1;
        rep.pass = false;
        rep.error = e.what();
        out.push_back(std::move(rep));
    }
}

}  // namespace

std::vector<IdentityReport> run_suite(std::string_view suite,
                                      std::span<const std::string> keys,
                                      const TrialConfig& cfg) {
    validate_trial_config(cfg);
    const std::vector<CheckId> checks = suite_checks(suite);
    const bool with_chain = suite == "all" || suite == "oracle";

    std::vector<IdentityReport> out;
    for (const std::string& key : keys) {
        // A bare "alpha" runs at the representative family index 1/2.
        const CatalogEntry entry =
            key == "alpha" ? get_entry("alpha", 0.5) : get_entry(key);
        for (CheckId id : checks) {
            guarded(out, entry.key, check_name(id), cfg,
                    [&] { return dispatch_check(id, entry, cfg); });
        }
    }
    if (with_chain && !keys.empty()) {
        guarded(out, "alpha", "alpha_chain", cfg, [&] { return check_alpha_chain(cfg); });
    }
    return out;
}

std::vector<IdentityReport> run_all(std::span<const std::string> keys,
                                    const TrialConfig& cfg) {
    return run_suite("all", keys, cfg);
}

}  // namespace gdiv
