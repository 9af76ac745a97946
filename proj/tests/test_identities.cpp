// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdiv/catalog.hpp"
#include "gdiv/errors.hpp"
#include "gdiv/identities.hpp"

using namespace gdiv;

namespace {

TrialConfig fast_config() {
    TrialConfig cfg;
    cfg.trials = 200;
    return cfg;
}

bool reports_equal(const IdentityReport& a, const IdentityReport& b) {
    if (a.identity_name != b.identity_name || a.divergence != b.divergence ||
        a.trials != b.trials || a.max_residual != b.max_residual ||
        a.mean_residual != b.mean_residual || a.failures != b.failures ||
        a.pass != b.pass || a.error != b.error ||
        a.worst_case.has_value() != b.worst_case.has_value()) {
        return false;
    }
    if (a.worst_case) {
        if (a.worst_case->trial != b.worst_case->trial ||
            a.worst_case->points != b.worst_case->points ||
            a.worst_case->skew != b.worst_case->skew) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("algebraic identities hold across the catalog") {
    const auto cfg = fast_config();
    for (const auto& key : {"kl", "reverse_kl", "hellinger"}) {
        CAPTURE(key);
        const auto entry = get_entry(key);
        for (const auto* check : {"cos", "four", "par", "div", "dual", "lin", "jb"}) {
            IdentityReport rep;
            const std::string which(check);
            if (which == "cos") rep = check_law_of_cosines(entry.spec, cfg);
            if (which == "four") rep = check_four_point(entry.spec, cfg);
            if (which == "par") rep = check_parallelogram(entry.spec, cfg);
            if (which == "div") rep = check_division_lemmas(entry.spec, cfg);
            if (which == "dual") rep = check_duality(entry.spec, cfg);
            if (which == "lin") rep = check_linearity(entry.spec, cfg);
            if (which == "jb") rep = check_jensen_bregman(entry.spec, cfg);
            CAPTURE(rep.identity_name);
            CHECK(rep.pass);
            CHECK(rep.failures == 0);
            CHECK_FALSE(rep.worst_case.has_value());
            CHECK(rep.trials == cfg.trials);
            CHECK(rep.max_residual <= cfg.rel_tol);
        }
    }
}

TEST_CASE("inequalities hold with strict margin") {
    const auto cfg = fast_config();
    const auto hell = get_entry("hellinger");
    const auto bj = check_bj_inequality(hell.spec, cfg);
    CHECK(bj.pass);
    // Signed residual: the negated worst gap. Strictly negative means the
    // symmetric value stayed safely above the skew Jensen value.
    CHECK(bj.max_residual < 0.0);
    CHECK(bj.identity_name == "bregman_jensen_inequality");

    const auto pbj = check_parallelogram_bj(hell.spec, cfg);
    CHECK(pbj.pass);
    CHECK(pbj.max_residual < 0.0);
}

TEST_CASE("oracle agreement and the alpha chain") {
    const auto cfg = fast_config();
    for (const auto& key : catalog_keys()) {
        CAPTURE(key);
        const auto entry =
            get_entry(key, key == "alpha" ? std::optional<double>(0.5) : std::nullopt);
        CHECK(check_oracle_equivalence(entry, cfg).pass);
        CHECK(check_sgjd_closed_form(entry, cfg).pass);
    }
    const auto chain = check_alpha_chain(cfg);
    CHECK(chain.pass);
    CHECK(chain.identity_name == "alpha_chain");
}

TEST_CASE("centroid optimality holds on both sides") {
    const auto cfg = fast_config();
    const auto kl = get_entry("kl");
    const auto right = check_centroid_bound(kl.spec, cfg, Side::right);
    CHECK(right.pass);
    CHECK(right.identity_name == "centroid_bound");
    const auto left = check_centroid_bound(kl.spec, cfg, Side::left);
    CHECK(left.pass);
    CHECK(left.identity_name == "left_centroid_bound");
}

TEST_CASE("skew limits converge where the curvature ratio allows") {
    auto cfg = fast_config();
    // Quadratic in link coordinates: the skew value is exactly skew-free.
    const auto hell = check_limits(get_entry("hellinger").spec, cfg);
    CHECK(hell.pass);
    CHECK(hell.max_residual <= 1e-9);

    // The square link stretches curvature by up to (q/p)^2 across the box,
    // so a 1e-4 endpoint skew is far outside the linear regime and the
    // check reports honest failures. Kept as a regression anchor; the
    // analysis lives in the README.
    const auto pearson = check_limits(get_entry("pearson_chi2").spec, cfg);
    CHECK_FALSE(pearson.pass);
    CHECK(pearson.failures > 0);
    REQUIRE(pearson.worst_case.has_value());
    CHECK(pearson.worst_case->skew.has_value());
    CHECK(pearson.identity_name == "skew_limits");
}

TEST_CASE("a corrupted gradient is caught by the gradient-sensitive checks") {
    auto entry = get_entry("kl");
    const auto clean_grad = entry.spec.generator.grad;
    entry.spec.generator.grad = [clean_grad](std::span<const double> x) {
        auto g = clean_grad(x);
        for (auto& gi : g) gi *= 1.01;
        return g;
    };
    const auto cfg = fast_config();

    // The division lemmas mix gradient-dependent Bregman values with the
    // gradient-free skew Jensen value, so the scaling surfaces at once:
    // either as residuals far above tolerance or as a negative divergence
    // rejected by the convexity floor.
    bool division_detected = false;
    try {
        division_detected = !check_division_lemmas(entry.spec, cfg).pass;
    } catch (const ConvexityViolation&) {
        division_detected = true;
    }
    CHECK(division_detected);

    // The closed forms never consult the gradient, so they disagree too.
    bool oracle_detected = false;
    try {
        oracle_detected = !check_oracle_equivalence(entry, cfg).pass;
    } catch (const ConvexityViolation&) {
        oracle_detected = true;
    }
    CHECK(oracle_detected);

    // The cosine identity, by contrast, is invariant under ANY substitution
    // for the gradient field: expanding both sides cancels every gradient
    // term algebraically. Anchored here so nobody mistakes it for a
    // gradient test.
    CHECK(check_law_of_cosines(entry.spec, cfg).pass);
}

TEST_CASE("suites run per key, wrap errors, and stay deterministic") {
    auto cfg = fast_config();
    const std::vector<std::string> keys{"kl", "hellinger"};

    const auto a = run_suite("bj", keys, cfg);
    const auto b = run_suite("bj", keys, cfg);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(reports_equal(a[i], b[i]));
        CHECK(a[i].divergence == keys[i]);
    }

    const std::vector<std::string> none;
    CHECK(run_suite("bj", none, cfg).empty());
    CHECK_THROWS_AS(run_suite("nonsense", keys, cfg), UnknownKeyError);

    // A bare alpha key resolves to the midpoint family index.
    const std::vector<std::string> alpha{"alpha"};
    const auto oracle = run_suite("oracle", alpha, cfg);
    REQUIRE(oracle.size() == 3);
    CHECK(oracle[0].identity_name == "oracle_equivalence");
    CHECK(oracle[0].divergence == "alpha(0.5)");
    CHECK(oracle[1].identity_name == "sgjd_closed_form");
    CHECK(oracle.back().identity_name == "alpha_chain");
    CHECK(oracle.back().divergence == "alpha");
}

TEST_CASE("a check that exhausts resampling becomes a failed report") {
    auto cfg = fast_config();
    cfg.trials = 3;
    cfg.dim = 200;  // fourth-vertex construction leaves the orthant
    const std::vector<std::string> keys{"kl"};
    const auto reports = run_suite("parallelogram", keys, cfg);
    REQUIRE(reports.size() == 1);
    CHECK_FALSE(reports[0].pass);
    CHECK(reports[0].failures > 0);
    REQUIRE(reports[0].error.has_value());
    CHECK(reports[0].error->find("fourth vertices") != std::string::npos);
}

TEST_CASE("the full battery covers every check for every key") {
    TrialConfig cfg;
    cfg.trials = 5;  // shape check only; tight runs live in the suite tests
    const auto keys = catalog_keys();
    const auto reports = run_all(keys, cfg);
    CHECK(reports.size() == 14 * keys.size() + 1);
    CHECK(reports.back().identity_name == "alpha_chain");
}

TEST_CASE("trial configuration is validated up front") {
    const std::vector<std::string> keys{"kl"};
    TrialConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_suite("bj", keys, cfg), DomainError);
    cfg = TrialConfig{};
    cfg.dim = 0;
    CHECK_THROWS_AS(run_suite("bj", keys, cfg), DomainError);
    cfg = TrialConfig{};
    cfg.sample_low = 5.0;
    cfg.sample_high = 1.0;
    CHECK_THROWS_AS(run_suite("bj", keys, cfg), DomainError);
    cfg = TrialConfig{};
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(run_suite("bj", keys, cfg), DomainError);
    CHECK_THROWS_AS(validate_trial_config(cfg), DomainError);
}

TEST_CASE("missing closed forms surface as unsupported") {
    auto entry = get_entry("kl");
    entry.oracle_skew_jensen = nullptr;
    CHECK_THROWS_AS(check_sgjd_closed_form(entry, fast_config()), UnsupportedError);
    entry = get_entry("kl");
    entry.oracle_forward = nullptr;
    CHECK_THROWS_AS(check_oracle_equivalence(entry, fast_config()), UnsupportedError);
}
