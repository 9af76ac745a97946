// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/divergence.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gdiv/numeric.hpp"

namespace gdiv {

namespace {

// Strict convexity makes every divergence non-negative; accumulation noise
// may still produce a hair below zero. Values in [-kFloor, 0) are roundoff
// and clamp to 0; anything lower means the generator lied about its gradient
// or its convexity and must not be masked.
constexpr double kFloor = 1e-12;

double finalize(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -kFloor) return 0.0;
    throw ConvexityViolation(std::string(what) + " came out " + std::to_string(v) +
                             ", below the roundoff floor; generator is not "
                             "strictly convex or its gradient is inconsistent");
}

std::vector<double> difference(std::span<const double> x, std::span<const double> y) {
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return d;
}

}  // namespace

SkewWeight::SkewWeight(double value) : value_(value) {
    if (!(value > 0.0) || !(value < 1.0)) {
        throw DomainError("skew parameter must lie strictly inside (0, 1), got " +
                          std::to_string(value));
    }
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw DomainError("weight vector must be non-empty");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
            throw DomainError("weight at index " + std::to_string(i) +
                              " must be finite and non-negative");
        }
    }
    const double total =
        pairwise_sum(0, weights_.size(), [&](std::size_t i) { return weights_[i]; });
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("weights must sum to 1 (got " + std::to_string(total) + ")");
    }
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n == 0) throw DomainError("weight vector must be non-empty");
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double bregman(const Generator& gen, std::span<const double> x,
               std::span<const double> y) {
    require_same_dim(x, y, "bregman");
    const double fx = gen.value(x);
    const double fy = gen.value(y);
    const std::vector<double> gy = gen.grad(y);
    const double v = fx - fy - dot(difference(x, y), gy);
    return finalize(v, "Bregman divergence");
}

double bregman_sym(const Generator& gen, std::span<const double> x,
                   std::span<const double> y) {
    require_same_dim(x, y, "bregman_sym");
    const std::vector<double> gx = gen.grad(x);
    const std::vector<double> gy = gen.grad(y);
    const double v = dot(difference(x, y), difference(gx, gy));
    return finalize(v, "symmetric Bregman divergence");
}

double skew_jensen_scaled(const Generator& gen, std::span<const double> x,
                          std::span<const double> y, SkewWeight a) {
    require_same_dim(x, y, "skew_jensen_scaled");
    const double al = a.value();
    std::vector<double> mix(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        mix[i] = (1.0 - al) * x[i] + al * y[i];
    }
    const double v =
        (1.0 - al) * gen.value(x) + al * gen.value(y) - gen.value(mix);
    return finalize(v / (al * (1.0 - al)), "skew Jensen divergence");
}

double g_bregman(const GDivergenceSpec& spec, const Point& p, const Point& q) {
    return bregman(spec.generator, apply_link(spec.link, p), apply_link(spec.link, q));
}

double g_bregman_sym(const GDivergenceSpec& spec, const Point& p, const Point& q) {
    return bregman_sym(spec.generator, apply_link(spec.link, p),
                       apply_link(spec.link, q));
}

double g_skew_jensen(const GDivergenceSpec& spec, const Point& p, const Point& q,
                     SkewWeight a) {
    return skew_jensen_scaled(spec.generator, apply_link(spec.link, p),
                              apply_link(spec.link, q), a);
}

double multivariate_g_jensen(const GDivergenceSpec& spec,
                             std::span<const Point> points, const WeightVector& w) {
    if (points.empty()) {
        throw DomainError("multivariate_g_jensen needs at least one point");
    }
    if (points.size() != w.size()) {
        throw LengthMismatchError("multivariate_g_jensen: " +
                                  std::to_string(points.size()) + " points vs " +
                                  std::to_string(w.size()) + " weights");
    }
    const std::size_t dim = points[0].dim();
    std::vector<double> mix(dim, 0.0);
    double value_part = 0.0;
    for (std::size_t v = 0; v < points.size(); ++v) {
        require_same_dim(points[v].coords(), points[0].coords(),
                         "multivariate_g_jensen");
        const std::vector<double> img = apply_link(spec.link, points[v]);
        value_part += w[v] * spec.generator.value(img);
        for (std::size_t i = 0; i < dim; ++i) mix[i] += w[v] * img[i];
    }
    const double v = value_part - spec.generator.value(mix);
    return finalize(v, "multivariate Jensen divergence");
}

JensenBregmanParts jensen_bregman_decomposition(const GDivergenceSpec& spec,
                                                const Point& p, const Point& q,
                                                SkewWeight a) {
    const double al = a.value();
    const std::vector<double> gp = apply_link(spec.link, p);
    const std::vector<double> gq = apply_link(spec.link, q);
    require_same_dim(gp, gq, "jensen_bregman_decomposition");
    std::vector<double> mix(gp.size());
    for (std::size_t i = 0; i < gp.size(); ++i) {
        mix[i] = (1.0 - al) * gp[i] + al * gq[i];
    }
    const std::optional<Point> r = link_preimage(spec.link, mix);
    if (!r) {
        throw DomainError("g-interpolant leaves the domain; the sampled pair is "
                          "not g-connectable at skew " + std::to_string(al));
    }
    const double lhs = g_skew_jensen(spec, p, q, a);
    const double rhs = ((1.0 - al) * g_bregman(spec, p, *r) +
                        al * g_bregman(spec, q, *r)) /
                       (al * (1.0 - al));
    return JensenBregmanParts{lhs, rhs};
}

}  // namespace gdiv
