// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdiv/generator.hpp"
#include "gdiv/point.hpp"

namespace gdiv {

// A coordinate-wise reparameterization g of the positive orthant: strictly
// monotone and smooth per coordinate, with an explicit inverse. Links carry
// scalar callables; vector application goes through apply_link/invert_link.
class Link {
public:
    std::string name;
    std::function<double(double)> forward;   // g
    std::function<double(double)> inverse;   // g^{-1}
};

// g applied coordinate-wise. The result is a raw vector: link images may be
// negative (log) and are not Points in general.
std::vector<double> apply_link(const Link& link, const Point& p);

// g^{-1} applied coordinate-wise; the result must be a valid Point, else
// DomainError propagates from the Point constructor.
Point invert_link(const Link& link, std::span<const double> y);

// Non-throwing preimage: applies g^{-1}, requires the result to be a valid
// Point AND to map back onto y within rel_tol per coordinate (relative to
// 1 + |y_i|). Returns nullopt when either test fails; used by constructions
// that resample instead of failing (quadruple and interpolant sampling).
std::optional<Point> link_preimage(const Link& link, std::span<const double> y,
                                   double rel_tol = 1e-9);

// A generator/link pair. The divergence built from it composes the link
// into the generator: distances are measured between g(p) and g(q).
// family_index is only meaningful for parametric families (the alpha
// entry); when present it must lie outside {0, 1}.
class GDivergenceSpec {
public:
    Generator generator;
    Link link;
    std::optional<double> family_index;
};

// The reparameterization dual to a spec: forward is grad F after g, inverse
// is g^{-1} after grad F*. Inverting validates the resulting Point.
class DualLink {
public:
    Generator base_generator;
    Link base_link;

    std::vector<double> forward(const Point& p) const;
    Point inverse(std::span<const double> y) const;
};

// Builds the dual link of a spec. Throws UnsupportedError when the spec's
// generator has no registered conjugate (its gradient inverse is F*'s grad).
DualLink dual_link(const GDivergenceSpec& spec);

}  // namespace gdiv
