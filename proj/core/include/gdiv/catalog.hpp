// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdiv/link.hpp"
#include "gdiv/point.hpp"

namespace gdiv {

// ---- Stock generators -------------------------------------------------
// Each comes with a closed-form gradient and, where one exists in closed
// form, a registered Legendre conjugate.

Generator squared_generator();      // F = sum x^2            on R
Generator neg_entropy_generator();  // F = sum x ln x         on x > 0
Generator exp_generator();          // F = sum e^x            on R
Generator inverse_generator();      // F = sum 1/x            on x > 0
Generator neg_sqrt_generator();     // F = -2 sum sqrt(x)     on x > 0
Generator power_generator(double a);  // F = 1/(1-a) sum x^(1/a) on x > 0, a outside {0,1}

// ---- Stock links ------------------------------------------------------

Link identity_link();
Link log_link();
Link sqrt_link();
Link square_link();
Link inverse_link();
Link power_link(double a);  // g = x^a, a != 0

// ---- Catalog ----------------------------------------------------------

// A named generator/link pairing plus independent closed-form formulas for
// the divergences it induces. The oracles are written directly from the
// per-coordinate algebra, never through the Bregman machinery, so agreement
// between the two routes is a real check.
class CatalogEntry {
public:
    std::string key;
    GDivergenceSpec spec;
    // Closed form matching g_bregman(spec, p, q) in the same argument order.
    std::function<double(const Point&, const Point&)> oracle_forward;
    // Closed form matching g_bregman_sym; absent where the sources give none.
    std::function<double(const Point&, const Point&)> oracle_symmetric;
    // Closed form matching g_skew_jensen(spec, p, q, a).
    std::function<double(const Point&, const Point&, double)> oracle_skew_jensen;
    std::string notes;  // argument-order conventions and derivation remarks
};

// Keys: kl, reverse_kl, alpha (requires a family index, written
// "alpha(0.5)" or supplied separately), hellinger, pearson_chi2,
// neyman_chi2. Throws UnknownKeyError for anything else and DomainError
// for a family index in {0, 1}.
CatalogEntry get_entry(std::string_view key);
CatalogEntry get_entry(std::string_view key, std::optional<double> family_index);

// The six base keys in registration order (alpha listed without an index).
std::vector<std::string> catalog_keys();

// Literal textbook f-divergence formulas between positive vectors:
// kl        sum p ln(p/q)
// hellinger sum (sqrt p - sqrt q)^2
// pearson   sum (p-q)^2 / q
// neyman    sum (p-q)^2 / p
// alpha     1/(a(a-1)) sum (p^a q^(1-a) - 1)      [family_index = a]
// js        (1-a) kl(p, m) + a kl(q, m), m = (1-a)p + aq  [family_index = a,
//           default 1/2]
// These keep their textbook shape even for inputs that do not sum to 1;
// the generalized (unnormalized) forms live on the catalog entries instead.
double oracle_fdiv(std::string_view name, const Point& p, const Point& q,
                   std::optional<double> family_index = std::nullopt);

}  // namespace gdiv
