// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gdiv/errors.hpp"

namespace gdiv {

// Throws DomainError unless every coordinate is finite and strictly positive
// and the vector is non-empty. The message names the first offending index.
void validate_point(std::span<const double> coords);

// A point of the common domain: a finite-dimensional vector with strictly
// positive coordinates. Validated once on construction; the coordinates are
// immutable afterwards, so a Point can be passed around as a guarantee.
class Point {
public:
    explicit Point(std::vector<double> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }
    const std::vector<double>& vec() const noexcept { return coords_; }

    bool operator==(const Point& other) const noexcept = default;

private:
    std::vector<double> coords_;
};

// Throws LengthMismatchError unless a and b have equal, non-zero length.
void require_same_dim(std::span<const double> a, std::span<const double> b,
                      const char* where);

}  // namespace gdiv
