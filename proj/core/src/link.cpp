// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/link.hpp"

#include <cmath>
#include <vector>

namespace gdiv {

std::vector<double> apply_link(const Link& link, const Point& p) {
    std::vector<double> out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) out[i] = link.forward(p[i]);
    return out;
}

Point invert_link(const Link& link, std::span<const double> y) {
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = link.inverse(y[i]);
    return Point(std::move(out));
}

std::optional<Point> link_preimage(const Link& link, std::span<const double> y,
                                   double rel_tol) {
    if (y.empty()) return std::nullopt;
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double x = link.inverse(y[i]);
        if (!std::isfinite(x) || x <= 0.0) return std::nullopt;
        // Round-trip guard: rejects y outside the link's range, where the
        // inverse formula still produces a number (e.g. sqrt of a negative
        // target under the square link is NaN, but x^2 of a "recovered"
        // value would not reproduce a negative y either).
        if (std::abs(link.forward(x) - y[i]) > rel_tol * (1.0 + std::abs(y[i]))) {
            return std::nullopt;
        }
        out[i] = x;
    }
    return Point(std::move(out));
}

std::vector<double> DualLink::forward(const Point& p) const {
    return base_generator.grad(apply_link(base_link, p));
}

Point DualLink::inverse(std::span<const double> y) const {
    const std::vector<double> x = base_generator.conjugate().grad(y);
    return invert_link(base_link, x);
}

DualLink dual_link(const GDivergenceSpec& spec) {
    if (!spec.generator.has_conjugate()) {
        throw UnsupportedError("dual link of '" + spec.generator.name +
                               "' needs a registered conjugate");
    }
    return DualLink{spec.generator, spec.link};
}

}  // namespace gdiv
