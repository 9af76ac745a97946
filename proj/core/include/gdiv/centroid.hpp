// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gdiv/divergence.hpp"
#include "gdiv/link.hpp"
#include "gdiv/point.hpp"

namespace gdiv {

// Which argument of the divergence holds the unknown centroid:
// right minimizes sum_v w_v B^g(p_v, q), left minimizes sum_v w_v B^g(q, p_v).
enum class Side { right, left };

// Minimizer of the right-side objective: the quasi-arithmetic mean
// g^{-1}(sum_v w_v g(p_v)). Achieves multivariate_g_jensen(spec, points, w).
Point right_centroid(const GDivergenceSpec& spec, std::span<const Point> points,
                     const WeightVector& w);

// Minimizer of the left-side objective: the quasi-arithmetic mean under the
// dual link. Requires a conjugate-equipped generator (UnsupportedError else).
Point left_centroid(const GDivergenceSpec& spec, std::span<const Point> points,
                    const WeightVector& w);

// sum_v w_v B^g(p_v, q) for Side::right, sum_v w_v B^g(q, p_v) for Side::left.
double weighted_objective(const GDivergenceSpec& spec, std::span<const Point> points,
                          const WeightVector& w, const Point& q, Side side);

// The objective value at the optimum: the multivariate Jensen value of F
// under g (right) or of F* under the dual link (left).
double jensen_lower_bound(const GDivergenceSpec& spec, std::span<const Point> points,
                          const WeightVector& w, Side side);

struct ClusterConfig {
    std::size_t k = 1;
    std::size_t max_iters = 100;
    double tol = 1e-9;  // relative objective-decrease stopping threshold
    std::uint64_t seed = 0;
    Side side = Side::right;
};

struct ClusterResult {
    std::vector<std::size_t> assignments;
    std::vector<Point> centroids;
    std::vector<double> objective_trace;  // one entry per completed iteration
    std::size_t iterations = 0;
    bool converged = false;
};

// Lloyd iteration over the g-Bregman divergence. Deterministic given
// cfg.seed: initial centroids are k distinct data points drawn without
// replacement, assignment ties break toward the lowest cluster index, and
// a cluster left empty is re-seeded at the point farthest from its current
// centroid. The objective trace is non-increasing (up to 1e-12 slack)
// because each centroid update is exactly optimal for its members.
ClusterResult kmeans(const GDivergenceSpec& spec, std::span<const Point> data,
                     const ClusterConfig& cfg);

}  // namespace gdiv
