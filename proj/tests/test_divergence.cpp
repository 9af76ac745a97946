// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gdiv/catalog.hpp"
#include "gdiv/divergence.hpp"
#include "gdiv/errors.hpp"

using namespace gdiv;

TEST_CASE("squared generator reproduces the euclidean special case") {
    const auto sq = squared_generator();
    const Point p({3.0});
    const Point q({1.0});
    // F = sum x^2 gives B(p, q) = (p - q)^2 exactly, here in integers.
    CHECK(bregman(sq, p, q) == 4.0);
    CHECK(bregman_sym(sq, p, q) == 8.0);
    CHECK(bregman(sq, p, p) == 0.0);

    // A quadratic F makes the scaled skew value independent of the skew.
    CHECK(skew_jensen_scaled(sq, p, q, SkewWeight(0.5)) == 4.0);
    CHECK(skew_jensen_scaled(sq, p, q, SkewWeight(0.25)) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(skew_jensen_scaled(sq, p, q, SkewWeight(0.99)) == doctest::Approx(4.0).epsilon(1e-12));

    GDivergenceSpec spec{sq, identity_link(), std::nullopt};
    const std::vector<Point> pts{p, q};
    CHECK(multivariate_g_jensen(spec, pts, WeightVector::uniform(2)) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("skew weights live strictly inside the unit interval") {
    CHECK_THROWS_AS(SkewWeight(0.0), DomainError);
    CHECK_THROWS_AS(SkewWeight(1.0), DomainError);
    CHECK_THROWS_AS(SkewWeight(-0.2), DomainError);
    CHECK_THROWS_AS(SkewWeight(std::nan("")), DomainError);
    CHECK(SkewWeight(0.37).value() == 0.37);
}

TEST_CASE("weight vectors are convex combinations") {
    CHECK_THROWS_AS(WeightVector({0.5, 0.4}), DomainError);
    CHECK_THROWS_AS(WeightVector({0.5, -0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(WeightVector(std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(WeightVector::uniform(0), DomainError);

    const auto w = WeightVector::uniform(4);
    CHECK(w.size() == 4);
    CHECK(w[2] == 0.25);
    CHECK_NOTHROW(WeightVector({0.1, 0.2, 0.7}));
    // Zero weights are allowed, only negatives are not.
    CHECK_NOTHROW(WeightVector({0.0, 1.0}));
}

TEST_CASE("roundoff floor clamps, real violations throw") {
    // Flat value with a tiny positive constant gradient: B((2),(1)) lands at
    // -5e-13, inside the clamp window.
    Generator flat;
    flat.name = "flat";
    flat.domain_desc = "all reals";
    flat.value = [](std::span<const double>) { return 0.0; };
    flat.grad = [](std::span<const double> x) {
        return std::vector<double>(x.size(), 5e-13);
    };
    flat.in_domain = [](std::span<const double>) { return true; };
    CHECK(bregman(flat, Point({2.0}), Point({1.0})) == 0.0);

    // A concave function violates convexity by a full unit: no clamp.
    const auto concave = make_separable_generator(
        "concave", "all reals", [](double t) { return -t * t; },
        [](double t) { return -2.0 * t; }, [](double) { return true; });
    CHECK_THROWS_AS(bregman(concave, Point({1.0}), Point({2.0})), ConvexityViolation);
}

TEST_CASE("link composition measures distance between images") {
    const Point p({0.25});
    const Point q({1.0});

    const auto kl = get_entry("kl");
    CHECK(g_bregman(kl.spec, p, q) == doctest::Approx(0.4034264097200273).epsilon(1e-13));
    CHECK(g_bregman_sym(kl.spec, p, q) == doctest::Approx(1.0397207708399179).epsilon(1e-13));

    // The exp/log pair evaluates the raw form at negative images.
    const auto rkl = get_entry("reverse_kl");
    CHECK(g_bregman(rkl.spec, p, q) == doctest::Approx(0.6362943611198906).epsilon(1e-13));
    const std::vector<double> logp{std::log(0.25)};
    const std::vector<double> logq{0.0};
    CHECK(bregman(exp_generator(), logp, logq) ==
          doctest::Approx(0.6362943611198906).epsilon(1e-13));

    const auto hell = get_entry("hellinger");
    CHECK(g_bregman(hell.spec, p, q) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("bivariate and multivariate jensen forms differ by the skew scale") {
    const auto kl = get_entry("kl");
    const Point p({0.5, 0.5});
    const Point q({0.25, 0.75});
    const double a = 0.25;
    const double scaled = g_skew_jensen(kl.spec, p, q, SkewWeight(a));
    const std::vector<Point> pts{p, q};
    const double unscaled = multivariate_g_jensen(kl.spec, pts, WeightVector({1.0 - a, a}));
    CHECK(unscaled == doctest::Approx(a * (1.0 - a) * scaled).epsilon(1e-12));

    // Frozen value: four times the Jensen-Shannon divergence of these rows.
    const double half = g_skew_jensen(kl.spec, p, q, SkewWeight(0.5));
    CHECK(half == doctest::Approx(0.13528830227442082).epsilon(1e-12));
}

TEST_CASE("interpolant decomposition closes and vanishes on the diagonal") {
    const auto hell = get_entry("hellinger");
    const Point p({0.25});
    const Point q({1.0});
    const auto parts = jensen_bregman_decomposition(hell.spec, p, q, SkewWeight(0.5));
    CHECK(parts.lhs == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(parts.rhs == doctest::Approx(parts.lhs).epsilon(1e-12));

    const auto same = jensen_bregman_decomposition(hell.spec, p, p, SkewWeight(0.3));
    CHECK(same.lhs == doctest::Approx(0.0));
    CHECK(same.rhs == doctest::Approx(0.0));
}

TEST_CASE("multivariate form validates its inputs") {
    const auto kl = get_entry("kl");
    const std::vector<Point> pts{Point({1.0}), Point({2.0})};
    CHECK_THROWS_AS(multivariate_g_jensen(kl.spec, pts, WeightVector::uniform(3)),
                    LengthMismatchError);
    const std::vector<Point> empty;
    CHECK_THROWS_AS(multivariate_g_jensen(kl.spec, empty, WeightVector::uniform(1)),
                    DomainError);
    const std::vector<Point> mixed{Point({1.0}), Point({2.0, 3.0})};
    CHECK_THROWS_AS(multivariate_g_jensen(kl.spec, mixed, WeightVector::uniform(2)),
                    LengthMismatchError);

    const std::vector<Point> equal{Point({2.0, 3.0}), Point({2.0, 3.0})};
    CHECK(multivariate_g_jensen(kl.spec, equal, WeightVector::uniform(2)) ==
          doctest::Approx(0.0));
}

TEST_CASE("summation stays exact on a large flat instance") {
    const std::size_t n = 100000;
    const std::vector<double> x(n, 2.0);
    const std::vector<double> y(n, 1.0);
    // Per-coordinate contribution is exactly 1, so the total is exactly n.
    CHECK(bregman(squared_generator(), x, y) == static_cast<double>(n));
}

TEST_CASE("argument dimensions must agree") {
    const auto sq = squared_generator();
    CHECK_THROWS_AS(bregman(sq, Point({1.0}), Point({1.0, 2.0})), LengthMismatchError);
    const auto kl = get_entry("kl");
    CHECK_THROWS_AS(g_skew_jensen(kl.spec, Point({1.0}), Point({1.0, 2.0}), SkewWeight(0.5)),
                    LengthMismatchError);
}
