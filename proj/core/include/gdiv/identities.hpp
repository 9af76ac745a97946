// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdiv/catalog.hpp"
#include "gdiv/centroid.hpp"
#include "gdiv/divergence.hpp"

namespace gdiv {

// Shared knobs of every randomized check. (seed, trial index, check name)
// fully determines each sampled input, so any reported trial can be replayed
// on its own.
struct TrialConfig {
    std::size_t trials = 1000;
    std::size_t dim = 8;
    std::uint64_t seed = 0;
    double sample_low = 0.1;
    double sample_high = 10.0;
    double rel_tol = 1e-9;
};

// Throws DomainError on a malformed config (zero trials/dim, empty or
// inverted sample range, non-positive tolerance).
void validate_trial_config(const TrialConfig& cfg);

// The inputs of the worst trial, kept in plain data form so reports can be
// serialized by any front end. points holds named vectors (p, q, r, ...).
struct WorstCase {
    std::uint64_t trial = 0;
    std::vector<std::pair<std::string, std::vector<double>>> points;
    std::optional<double> skew;
};

struct IdentityReport {
    std::string identity_name;
    std::string divergence;  // catalog key or generator/link label
    std::size_t trials = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::size_t failures = 0;
    std::optional<WorstCase> worst_case;  // present iff failures > 0
    bool pass = true;                     // pass == (failures == 0)
    std::optional<std::string> error;     // set when the check itself threw
};

// ---- Identity checks ---------------------------------------------------
// Each runs cfg.trials random trials and reports relative residuals scaled
// by 1 + |reference|. The two pure inequality checks (bj, parallelogram bj)
// instead record the signed violation -gap, so max_residual is the negated
// minimum gap and negative values mean the inequality held with margin.
// A trial fails when its residual exceeds the check's tolerance:
// cfg.rel_tol for algebraic identities, 1e-12 for inequality floors, fixed
// documented values for the rest.

// Triangle expansion of B^g and its symmetric form over random (p, q, r).
IdentityReport check_law_of_cosines(const GDivergenceSpec& spec, const TrialConfig& cfg);

// <grad F(g(r)) - grad F(g(s)), g(p) - g(q)> against the four B^g terms.
IdentityReport check_four_point(const GDivergenceSpec& spec, const TrialConfig& cfg);

// Four sides vs two diagonals over constructed quadruples with
// g(p) + g(r) = g(q) + g(s). Throws ResampleExhausted after 1000 consecutive
// constructions whose fourth vertex leaves the domain.
IdentityReport check_parallelogram(const GDivergenceSpec& spec, const TrialConfig& cfg);

// The three interpolant split identities of B^g and its symmetric form at
// r = g^{-1}((1-a)g(p) + ag(q)), a uniform in [0.05, 0.95].
IdentityReport check_division_lemmas(const GDivergenceSpec& spec, const TrialConfig& cfg);

// Symmetric B^g dominates the scaled skew Jensen value; skew swept over
// {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99} per pair. Gap floor -1e-12.
IdentityReport check_bj_inequality(const GDivergenceSpec& spec, const TrialConfig& cfg);

// (1/8)(four symmetric sides) dominates the multivariate Jensen value at
// uniform quarter weights, over constructed quadruples. Gap floor -1e-12.
IdentityReport check_parallelogram_bj(const GDivergenceSpec& spec, const TrialConfig& cfg);

// g_bregman / g_bregman_sym against the entry's independent closed forms.
// Tolerance 1e-10 relative to the oracle value.
IdentityReport check_oracle_equivalence(const CatalogEntry& entry, const TrialConfig& cfg);

// g_skew_jensen against the entry's closed skew-Jensen form, skew uniform
// in [0.05, 0.95]. Tolerance 1e-10.
IdentityReport check_sgjd_closed_form(const CatalogEntry& entry, const TrialConfig& cfg);

// Cross-family equalities between the alpha oracle at indices 2, -1, 1/2 and
// the Pearson, Neyman, and Hellinger oracles. Tolerance 1e-12.
IdentityReport check_alpha_chain(const TrialConfig& cfg);

// Skew endpoints: g_skew_jensen at a = 1e-4 approaches g_bregman(q, p) and
// at a = 1 - 1e-4 approaches g_bregman(p, q), within 1e-3 of scale 1 + |ref|.
IdentityReport check_limits(const GDivergenceSpec& spec, const TrialConfig& cfg);

// Argument swap through the Legendre dual: B^g(q, p) equals the dual-link
// Bregman value of F* at (p, q). Tolerance cfg.rel_tol.
IdentityReport check_duality(const GDivergenceSpec& spec, const TrialConfig& cfg);

// B^g under c1 F1 + c2 F2 splits into c1 B^g_{F1} + c2 B^g_{F2}; the partner
// generator is chosen to accept the spec's link images. Tolerance 1e-10.
IdentityReport check_linearity(const GDivergenceSpec& spec, const TrialConfig& cfg);

// Interpolant decomposition of the skew Jensen value (tolerance cfg.rel_tol)
// plus the N=2 scale bridge to the multivariate form (tolerance 1e-12).
IdentityReport check_jensen_bregman(const GDivergenceSpec& spec, const TrialConfig& cfg);

// Centroid optimality on random instances: the objective at the centroid
// matches the Jensen bound (1e-10) and random perturbations never beat the
// bound (floor -1e-12). Side::left exercises the dual construction.
IdentityReport check_centroid_bound(const GDivergenceSpec& spec, const TrialConfig& cfg,
                                    Side side);

// ---- Suites ------------------------------------------------------------

// Runs one named suite over catalog keys. Suites: all, cosines, four-point,
// parallelogram, division, bj, pbj, oracle, limits. A bare "alpha" key runs
// at family index 0.5. A check that throws becomes a failed report carrying
// the error text; sibling checks still run. Throws UnknownKeyError for an
// unknown suite name and validates cfg up front.
std::vector<IdentityReport> run_suite(std::string_view suite,
                                      std::span<const std::string> keys,
                                      const TrialConfig& cfg);

// The full battery: every identity, inequality, oracle, limit, duality,
// linearity, and centroid check over the given keys.
std::vector<IdentityReport> run_all(std::span<const std::string> keys,
                                    const TrialConfig& cfg);

}  // namespace gdiv
