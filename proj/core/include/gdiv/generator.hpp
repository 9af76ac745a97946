// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gdiv/errors.hpp"

namespace gdiv {

// A strictly convex, differentiable function F on an open subset of R^d,
// presented through its value and gradient. Generators are value types;
// the std::function members make user-defined generators first-class.
//
// value and grad throw DomainError when the argument leaves the domain.
// The optional conjugate is the Legendre dual F*; when present it satisfies
// F(x) + F*(y) = <x, y> at y = grad F(x), which fenchel_residual measures.
class Generator {
public:
    std::string name;
    std::string domain_desc;  // human-readable, used in error messages
    std::function<double(std::span<const double>)> value;
    std::function<std::vector<double>(std::span<const double>)> grad;
    std::function<bool(std::span<const double>)> in_domain;

    bool has_conjugate() const noexcept { return conjugate_ != nullptr; }

    // Legendre dual. Throws UnsupportedError when none was registered.
    const Generator& conjugate() const;

    // Returns a copy of *this with `dual` registered as conjugate; the dual
    // in turn gets *this (without a further conjugate) as its own dual, so
    // the biconjugate is reachable exactly once.
    Generator with_conjugate(Generator dual) const;

private:
    std::shared_ptr<const Generator> conjugate_;
};

// Builds a separable generator F(x) = sum_i f(x_i) from scalar callables.
// scalar_domain receives one coordinate; non-finite values are always
// rejected before it is consulted.
Generator make_separable_generator(std::string name, std::string domain_desc,
                                   std::function<double(double)> f,
                                   std::function<double(double)> df,
                                   std::function<bool(double)> scalar_domain);

// Positive combination c1*F1 + c2*F2 on the intersection of the domains.
// Strict convexity is preserved for c1, c2 > 0 (throws DomainError else).
// The result carries no conjugate.
Generator scaled_sum(double c1, const Generator& g1, double c2, const Generator& g2);

// Max over components of |central difference - grad| / (|grad| + 1e-300)
// at x, with 0 < step < 1. Throws DomainError when x or any probe
// x +- step*e_i leaves the domain.
double grad_check(const Generator& gen, std::span<const double> x, double step);

// Absolute Fenchel gap |F(x) + F*(y) - <x, y>| at y = grad F(x), which is 0
// for an exact conjugate pair. Throws UnsupportedError without a conjugate.
double fenchel_residual(const Generator& gen, std::span<const double> x);

}  // namespace gdiv
