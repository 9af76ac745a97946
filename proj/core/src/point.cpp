// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/point.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gdiv {

void validate_point(std::span<const double> coords) {
    if (coords.empty()) {
        throw DomainError("point must have at least one coordinate");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i])) {
            throw DomainError("non-finite coordinate at index " + std::to_string(i));
        }
        if (coords[i] <= 0.0) {
            throw DomainError("non-positive coordinate at index " + std::to_string(i) +
                              " (domain is the strictly positive orthant)");
        }
    }
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    validate_point(coords_);
}

void require_same_dim(std::span<const double> a, std::span<const double> b,
                      const char* where) {
    if (a.size() != b.size()) {
        throw LengthMismatchError(std::string(where) + ": dimension mismatch (" +
                                  std::to_string(a.size()) + " vs " +
                                  std::to_string(b.size()) + ")");
    }
    if (a.empty()) {
        throw LengthMismatchError(std::string(where) + ": empty vectors");
    }
}

}  // namespace gdiv
