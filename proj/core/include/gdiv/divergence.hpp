// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "gdiv/generator.hpp"
#include "gdiv/link.hpp"
#include "gdiv/point.hpp"

namespace gdiv {

// Skew parameter constrained to the open interval (0, 1) at the type level;
// the endpoint limits are exercised with small epsilons, never special-cased.
class SkewWeight {
public:
    explicit SkewWeight(double value);  // throws DomainError outside (0,1)
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Mixing weights: non-negative, summing to 1 within 1e-12.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);  // throws DomainError

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const noexcept { return weights_[i]; }
    std::span<const double> weights() const noexcept { return weights_; }

    static WeightVector uniform(std::size_t n);

private:
    std::vector<double> weights_;
};

// ---- Plain forms on raw generator-domain vectors -----------------------
// x and y live in the generator's domain (which may include non-positive
// values, e.g. log-link images), so these take raw vectors. Point overloads
// below forward the coordinates for callers staying on the positive orthant.

// F(x) - F(y) - <x - y, grad F(y)>. Non-negative up to the roundoff floor:
// values in [-1e-12, 0) clamp to 0, anything lower throws ConvexityViolation.
double bregman(const Generator& gen, std::span<const double> x,
               std::span<const double> y);

// <x - y, grad F(x) - grad F(y)> = bregman(x,y) + bregman(y,x).
double bregman_sym(const Generator& gen, std::span<const double> x,
                   std::span<const double> y);

// (1/(a(1-a))) * ((1-a)F(x) + aF(y) - F((1-a)x + ay)).
double skew_jensen_scaled(const Generator& gen, std::span<const double> x,
                          std::span<const double> y, SkewWeight a);

inline double bregman(const Generator& gen, const Point& p, const Point& q) {
    return bregman(gen, p.coords(), q.coords());
}
inline double bregman_sym(const Generator& gen, const Point& p, const Point& q) {
    return bregman_sym(gen, p.coords(), q.coords());
}
inline double skew_jensen_scaled(const Generator& gen, const Point& p,
                                 const Point& q, SkewWeight a) {
    return skew_jensen_scaled(gen, p.coords(), q.coords(), a);
}

// ---- Link-composed forms ------------------------------------------------

// bregman between g(p) and g(q).
double g_bregman(const GDivergenceSpec& spec, const Point& p, const Point& q);

// bregman_sym between g(p) and g(q); symmetric in (p, q).
double g_bregman_sym(const GDivergenceSpec& spec, const Point& p, const Point& q);

// skew_jensen_scaled between g(p) and g(q).
double g_skew_jensen(const GDivergenceSpec& spec, const Point& p, const Point& q,
                     SkewWeight a);

// Unscaled multivariate form: sum_v w_v F(g(p_v)) - F(sum_v w_v g(p_v)).
// Note the deliberate scale difference from g_skew_jensen: at N=2 with
// weights (1-a, a) this equals a(1-a) times the scaled bivariate value.
double multivariate_g_jensen(const GDivergenceSpec& spec,
                             std::span<const Point> points,
                             const WeightVector& w);

// Both sides of the interpolant decomposition: lhs = g_skew_jensen(p,q,a),
// rhs = (1/(a(1-a))) * ((1-a) B^g(p,r) + a B^g(q,r)) at the g-interpolant
// r = g^{-1}((1-a)g(p) + ag(q)), which must be a valid Point.
struct JensenBregmanParts {
    double lhs;
    double rhs;
};
JensenBregmanParts jensen_bregman_decomposition(const GDivergenceSpec& spec,
                                                const Point& p, const Point& q,
                                                SkewWeight a);

}  // namespace gdiv
