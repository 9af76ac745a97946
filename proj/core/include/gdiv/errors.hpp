// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gdiv {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input lies outside the admissible set (non-finite, non-positive where
// positivity is required, empty vector, weight that does not normalize, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Two vectors that must agree in length do not. Derives from DomainError:
// a length mismatch is a domain violation, but callers that care (the CLI
// maps it to its own exit code) can still tell it apart.
class LengthMismatchError : public DomainError {
public:
    explicit LengthMismatchError(const std::string& what) : DomainError(what) {}
};

// A requested operation needs data the object does not carry, e.g. the
// Legendre dual of a generator registered without a conjugate.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

// Lookup of a catalog key that is not registered.
class UnknownKeyError : public Error {
public:
    explicit UnknownKeyError(const std::string& what) : Error(what) {}
};

// A quantity that is non-negative for every strictly convex generator came
// out below the roundoff floor. Either the generator is not convex on the
// sampled region or its gradient is inconsistent with its value.
class ConvexityViolation : public Error {
public:
    explicit ConvexityViolation(const std::string& what) : Error(what) {}
};

// A rejection-sampling construction failed too many times in a row, so the
// target set is (numerically) unreachable from the sampling box.
class ResampleExhausted : public Error {
public:
    explicit ResampleExhausted(const std::string& what) : Error(what) {}
};

}  // namespace gdiv
