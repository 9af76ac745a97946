// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "gdiv/point.hpp"

namespace gdiv {

// Plain left-to-right accumulation is fine for short vectors; beyond this
// many terms we switch to pairwise splitting to keep the error O(log n) ulp.
inline constexpr std::size_t kPairwiseThreshold = 1024;

// Sum of fn(i) for i in [begin, end), pairwise above kPairwiseThreshold.
template <class Fn>
double pairwise_sum(std::size_t begin, std::size_t end, Fn&& fn) {
    const std::size_t n = end - begin;
    if (n <= kPairwiseThreshold) {
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += fn(i);
        return acc;
    }
    const std::size_t mid = begin + n / 2;
    return pairwise_sum(begin, mid, fn) + pairwise_sum(mid, end, fn);
}

// Inner product with the same summation policy as pairwise_sum.
inline double dot(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b, "dot");
    return pairwise_sum(0, a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

}  // namespace gdiv
