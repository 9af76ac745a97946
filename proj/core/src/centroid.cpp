// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/centroid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gdiv/numeric.hpp"
#include "gdiv/rng.hpp"

namespace gdiv {

namespace {

void require_instance(std::span<const Point> points, const WeightVector& w) {
    if (points.empty()) throw DomainError("centroid needs at least one point");
    if (points.size() != w.size()) {
        throw LengthMismatchError("centroid: " + std::to_string(points.size()) +
                                  " points vs " + std::to_string(w.size()) +
                                  " weights");
    }
    for (const Point& p : points) {
        require_same_dim(p.coords(), points[0].coords(), "centroid");
    }
}

// Weighted average of per-point images produced by `map`, then pushed
// through `unmap`. Shared by both centroid sides: only the transform pair
// differs (link vs dual link).
template <class MapFn, class UnmapFn>
Point mean_under(std::span<const Point> points, const WeightVector& w,
                 MapFn&& map, UnmapFn&& unmap) {
    const std::size_t dim = points[0].dim();
    std::vector<double> acc(dim, 0.0);
    for (std::size_t v = 0; v < points.size(); ++v) {
        const std::vector<double> img = map(points[v]);
        for (std::size_t i = 0; i < dim; ++i) acc[i] += w[v] * img[i];
    }
    return unmap(acc);
}

double divergence_to(const GDivergenceSpec& spec, const Point& x, const Point& c,
                     Side side) {
    return side == Side::right ? g_bregman(spec, x, c) : g_bregman(spec, c, x);
}

}  // namespace

Point right_centroid(const GDivergenceSpec& spec, std::span<const Point> points,
                     const WeightVector& w) {
    require_instance(points, w);
    return mean_under(
        points, w, [&](const Point& p) { return apply_link(spec.link, p); },
        [&](std::span<const double> acc) { return invert_link(spec.link, acc); });
}

Point left_centroid(const GDivergenceSpec& spec, std::span<const Point> points,
                    const WeightVector& w) {
    require_instance(points, w);
    const DualLink dual = dual_link(spec);
    return mean_under(
        points, w, [&](const Point& p) { return dual.forward(p); },
        [&](std::span<const double> acc) { return dual.inverse(acc); });
}

double weighted_objective(const GDivergenceSpec& spec, std::span<const Point> points,
                          const WeightVector& w, const Point& q, Side side) {
    require_instance(points, w);
    require_same_dim(q.coords(), points[0].coords(), "weighted_objective");
    double total = 0.0;
    for (std::size_t v = 0; v < points.size(); ++v) {
        total += w[v] * divergence_to(spec, points[v], q, side);
    }
    return total;
}

double jensen_lower_bound(const GDivergenceSpec& spec, std::span<const Point> points,
                          const WeightVector& w, Side side) {
    require_instance(points, w);
    if (side == Side::right) {
        return multivariate_g_jensen(spec, points, w);
    }
    // Left side: the bound is the multivariate Jensen value of the conjugate
    // generator under the dual link images.
    const DualLink dual = dual_link(spec);
    const Generator& conj = spec.generator.conjugate();
    const std::size_t dim = points[0].dim();
    std::vector<double> mix(dim, 0.0);
    double value_part = 0.0;
    for (std::size_t v = 0; v < points.size(); ++v) {
        const std::vector<double> img = dual.forward(points[v]);
        value_part += w[v] * conj.value(img);
        for (std::size_t i = 0; i < dim; ++i) mix[i] += w[v] * img[i];
    }
    const double bound = value_part - conj.value(mix);
    return bound < 0.0 && bound >= -1e-12 ? 0.0 : bound;
}

ClusterResult kmeans(const GDivergenceSpec& spec, std::span<const Point> data,
                     const ClusterConfig& cfg) {
    if (cfg.k == 0) throw DomainError("kmeans needs k >= 1");
    if (data.size() < cfg.k) {
        throw DomainError("kmeans needs at least k data points (k=" +
                          std::to_string(cfg.k) + ", data=" +
                          std::to_string(data.size()) + ")");
    }
    if (!(cfg.tol > 0.0)) throw DomainError("kmeans tol must be positive");
    if (cfg.max_iters == 0) throw DomainError("kmeans needs max_iters >= 1");
    for (const Point& p : data) {
        require_same_dim(p.coords(), data[0].coords(), "kmeans");
    }

    const std::size_t n = data.size();

    // Seeded draw of k distinct starting points (partial Fisher-Yates).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    TrialRng rng(cfg.seed, 0, fnv1a64("kmeans_init"));
    std::vector<Point> centroids;
    centroids.reserve(cfg.k);
    for (std::size_t i = 0; i < cfg.k; ++i) {
        const std::size_t j = i + rng.uniform_index(n - i);
        std::swap(order[i], order[j]);
        centroids.push_back(data[order[i]]);
    }

    ClusterResult result;
    result.assignments.assign(n, 0);
    std::vector<double> dist(n, 0.0);

    double prev_objective = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
        // Assignment step; ties break toward the lowest cluster index.
        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = divergence_to(spec, data[i], centroids[0], cfg.side);
            for (std::size_t t = 1; t < cfg.k; ++t) {
                const double d = divergence_to(spec, data[i], centroids[t], cfg.side);
                if (d < best_d) {
                    best_d = d;
                    best = t;
                }
            }
            result.assignments[i] = best;
            dist[i] = best_d;
            objective += best_d;
        }

        // Heal empty clusters before the update step: re-seed each at the
        // point currently farthest from its centroid, then reassign that
        // point. Deterministic, and the objective cannot increase because
        // the moved point's divergence drops to zero.
        for (std::size_t t = 0; t < cfg.k; ++t) {
            if (std::find(result.assignments.begin(), result.assignments.end(), t) !=
                result.assignments.end()) {
                continue;
            }
            std::size_t farthest = 0;
            for (std::size_t i = 1; i < n; ++i) {
                if (dist[i] > dist[farthest]) farthest = i;
            }
            objective -= dist[farthest];
            centroids[t] = data[farthest];
            result.assignments[farthest] = t;
            dist[farthest] = 0.0;
        }

        result.objective_trace.push_back(objective);
        result.iterations = iter + 1;

        const bool small_decrease =
            std::isfinite(prev_objective) &&
            prev_objective - objective <= cfg.tol * (1.0 + std::abs(prev_objective));
        if (small_decrease) {
            result.converged = true;
            break;
        }
        prev_objective = objective;

        // Update step: optimal centroid per member set, uniform weights.
        for (std::size_t t = 0; t < cfg.k; ++t) {
            std::vector<Point> members;
            for (std::size_t i = 0; i < n; ++i) {
                if (result.assignments[i] == t) members.push_back(data[i]);
            }
            const WeightVector uw = WeightVector::uniform(members.size());
            centroids[t] = cfg.side == Side::right
                               ? right_centroid(spec, members, uw)
                               : left_centroid(spec, members, uw);
        }
    }

    result.centroids = std::move(centroids);
    return result;
}

}  // namespace gdiv
