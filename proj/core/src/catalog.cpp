// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "gdiv/numeric.hpp"

namespace gdiv {

namespace {

std::string fmt_index(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

void require_family_index(double a) {
    if (!std::isfinite(a) || a == 0.0 || a == 1.0) {
        throw DomainError("family index must be a finite real outside {0, 1}, got " +
                          fmt_index(a));
    }
}

// Per-pair reduction helper for the closed-form oracles.
template <class Fn>
double sum_over(const Point& p, const Point& q, Fn&& term) {
    require_same_dim(p.coords(), q.coords(), "oracle");
    return pairwise_sum(0, p.dim(), [&](std::size_t i) { return term(p[i], q[i]); });
}

double generalized_kl(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) {
        return -a + b + a * std::log(a / b);
    });
}

double jeffreys(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) {
        return (a - b) * std::log(a / b);
    });
}

double generalized_alpha(double idx, const Point& p, const Point& q) {
    const double scale = 1.0 / (idx * (idx - 1.0));
    return scale * sum_over(p, q, [idx](double a, double b) {
        return std::pow(a, idx) * std::pow(b, 1.0 - idx) - idx * a - (1.0 - idx) * b;
    });
}

double squared_hellinger(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) {
        const double d = std::sqrt(a) - std::sqrt(b);
        return d * d;
    });
}

double pearson_chi2(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) {
        return (a - b) * (a - b) / b;
    });
}

double neyman_chi2(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) {
        return (a - b) * (a - b) / a;
    });
}

double literal_kl(const Point& p, const Point& q) {
    return sum_over(p, q, [](double a, double b) { return a * std::log(a / b); });
}

CatalogEntry make_kl_entry() {
    CatalogEntry e;
    e.key = "kl";
    e.spec = GDivergenceSpec{neg_entropy_generator(), identity_link(), std::nullopt};
    e.oracle_forward = generalized_kl;
    e.oracle_symmetric = jeffreys;
    // The plain two-term skew mixture equals its generalized counterpart for
    // arbitrary positive vectors: the linear corrections cancel because the
    // mixture point is exactly the weighted average of the operands.
    e.oracle_skew_jensen = [](const Point& p, const Point& q, double a) {
        require_same_dim(p.coords(), q.coords(), "oracle");
        const double s = pairwise_sum(0, p.dim(), [&](std::size_t i) {
            const double m = (1.0 - a) * p[i] + a * q[i];
            return (1.0 - a) * p[i] * std::log(p[i] / m) +
                   a * q[i] * std::log(q[i] / m);
        });
        return s / (a * (1.0 - a));
    };
    e.notes = "forward oracle is the generalized (unnormalized) KL sum "
              "-p+q+p ln(p/q), taken in the divergence's own (p, q) order; "
              "skew oracle is the scaled two-point mixture form";
    return e;
}

CatalogEntry make_reverse_kl_entry() {
    CatalogEntry e;
    e.key = "reverse_kl";
    e.spec = GDivergenceSpec{exp_generator(), log_link(), std::nullopt};
    e.oracle_forward = [](const Point& p, const Point& q) {
        return generalized_kl(q, p);
    };
    e.oracle_symmetric = jeffreys;
    e.oracle_skew_jensen = [](const Point& p, const Point& q, double a) {
        return generalized_alpha(1.0 - a, p, q);
    };
    e.notes = "forward oracle is generalized KL with swapped operands "
              "(value measured from q to p); skew oracle is the generalized "
              "alpha form at index 1-a";
    return e;
}

CatalogEntry make_alpha_entry(double idx) {
    require_family_index(idx);
    CatalogEntry e;
    e.key = "alpha(" + fmt_index(idx) + ")";
    e.spec = GDivergenceSpec{power_generator(idx), power_link(idx), idx};
    e.oracle_forward = [idx](const Point& p, const Point& q) {
        return generalized_alpha(idx, p, q);
    };
    e.oracle_symmetric = [idx](const Point& p, const Point& q) {
        return generalized_alpha(idx, p, q) + generalized_alpha(idx, q, p);
    };
    e.oracle_skew_jensen = [idx](const Point& p, const Point& q, double a) {
        require_same_dim(p.coords(), q.coords(), "oracle");
        const double s = pairwise_sum(0, p.dim(), [&](std::size_t i) {
            const double mean_of_powers =
                (1.0 - a) * std::pow(p[i], idx) + a * std::pow(q[i], idx);
            return (1.0 - a) * p[i] + a * q[i] - std::pow(mean_of_powers, 1.0 / idx);
        });
        return s / (a * (1.0 - a) * (1.0 - idx));
    };
    e.notes = "forward oracle is the generalized alpha form with prefactor "
              "1/(a(a-1)), which the Bregman expansion reproduces exactly in "
              "(p, q) order; the skew oracle divides by (1-a) once more";
    return e;
}

CatalogEntry make_hellinger_entry() {
    CatalogEntry e;
    e.key = "hellinger";
    e.spec = GDivergenceSpec{squared_generator(), sqrt_link(), std::nullopt};
    e.oracle_forward = squared_hellinger;
    e.oracle_symmetric = [](const Point& p, const Point& q) {
        return 2.0 * squared_hellinger(p, q);
    };
    // The skew value collapses to the squared Hellinger sum for every skew:
    // the cross terms scale by a(1-a), which the prefactor removes.
    e.oracle_skew_jensen = [](const Point& p, const Point& q, double) {
        return squared_hellinger(p, q);
    };
    e.notes = "all three oracles are skew-free closed forms of the squared "
              "root-difference sum; symmetric doubles it";
    return e;
}

CatalogEntry make_pearson_entry() {
    CatalogEntry e;
    e.key = "pearson_chi2";
    e.spec = GDivergenceSpec{neg_sqrt_generator(), square_link(), std::nullopt};
    e.oracle_forward = pearson_chi2;
    e.oracle_symmetric = [](const Point& p, const Point& q) {
        return pearson_chi2(p, q) + neyman_chi2(p, q);
    };
    e.oracle_skew_jensen = [](const Point& p, const Point& q, double a) {
        require_same_dim(p.coords(), q.coords(), "oracle");
        const double s = pairwise_sum(0, p.dim(), [&](std::size_t i) {
            const double mix = (1.0 - a) * p[i] * p[i] + a * q[i] * q[i];
            return std::sqrt(mix) - (1.0 - a) * p[i] - a * q[i];
        });
        return 2.0 * s / (a * (1.0 - a));
    };
    e.notes = "forward oracle sum (p-q)^2/q matches the Bregman expansion in "
              "(p, q) order: the second argument sits in the denominator";
    return e;
}

CatalogEntry make_neyman_entry() {
    CatalogEntry e;
    e.key = "neyman_chi2";
    e.spec = GDivergenceSpec{inverse_generator(), inverse_link(), std::nullopt};
    e.oracle_forward = neyman_chi2;
    e.oracle_symmetric = [](const Point& p, const Point& q) {
        return pearson_chi2(p, q) + neyman_chi2(p, q);
    };
    e.oracle_skew_jensen = [](const Point& p, const Point& q, double a) {
        require_same_dim(p.coords(), q.coords(), "oracle");
        const double s = pairwise_sum(0, p.dim(), [&](std::size_t i) {
            const double harm = p[i] * q[i] / ((1.0 - a) * q[i] + a * p[i]);
            return (1.0 - a) * p[i] + a * q[i] - harm;
        });
        return s / (a * (1.0 - a));
    };
    e.notes = "forward oracle sum (p-q)^2/p matches the Bregman expansion in "
              "(p, q) order: the first argument sits in the denominator";
    return e;
}

}  // namespace

// ---- Stock generators --------------------------------------------------

Generator squared_generator() {
    Generator primal = make_separable_generator(
        "squared", "all reals", [](double x) { return x * x; },
        [](double x) { return 2.0 * x; }, [](double) { return true; });
    Generator dual = make_separable_generator(
        "squared_conj", "all reals", [](double y) { return y * y / 4.0; },
        [](double y) { return y / 2.0; }, [](double) { return true; });
    return primal.with_conjugate(std::move(dual));
}

Generator neg_entropy_generator() {
    Generator primal = make_separable_generator(
        "neg_entropy", "strictly positive reals",
        [](double x) { return x * std::log(x); },
        [](double x) { return std::log(x) + 1.0; }, [](double x) { return x > 0.0; });
    Generator dual = make_separable_generator(
        "neg_entropy_conj", "all reals", [](double y) { return std::exp(y - 1.0); },
        [](double y) { return std::exp(y - 1.0); }, [](double) { return true; });
    return primal.with_conjugate(std::move(dual));
}

Generator exp_generator() {
    Generator primal = make_separable_generator(
        "exp", "all reals", [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); }, [](double) { return true; });
    Generator dual = make_separable_generator(
        "exp_conj", "strictly positive reals",
        [](double y) { return y * std::log(y) - y; },
        [](double y) { return std::log(y); }, [](double y) { return y > 0.0; });
    return primal.with_conjugate(std::move(dual));
}

Generator inverse_generator() {
    Generator primal = make_separable_generator(
        "inverse", "strictly positive reals", [](double x) { return 1.0 / x; },
        [](double x) { return -1.0 / (x * x); }, [](double x) { return x > 0.0; });
    Generator dual = make_separable_generator(
        "inverse_conj", "strictly negative reals",
        [](double y) { return -2.0 * std::sqrt(-y); },
        [](double y) { return 1.0 / std::sqrt(-y); },
        [](double y) { return y < 0.0; });
    return primal.with_conjugate(std::move(dual));
}

Generator neg_sqrt_generator() {
    Generator primal = make_separable_generator(
        "neg_sqrt", "strictly positive reals",
        [](double x) { return -2.0 * std::sqrt(x); },
        [](double x) { return -1.0 / std::sqrt(x); },
        [](double x) { return x > 0.0; });
    Generator dual = make_separable_generator(
        "neg_sqrt_conj", "strictly negative reals",
        [](double y) { return -1.0 / y; }, [](double y) { return 1.0 / (y * y); },
        [](double y) { return y < 0.0; });
    return primal.with_conjugate(std::move(dual));
}

Generator power_generator(double a) {
    require_family_index(a);
    const double k = a * (1.0 - a);  // sign decides the conjugate's half-line
    Generator primal = make_separable_generator(
        "power(" + fmt_index(a) + ")", "strictly positive reals",
        [a](double x) { return std::pow(x, 1.0 / a) / (1.0 - a); },
        [a, k](double x) { return std::pow(x, (1.0 - a) / a) / k; },
        [](double x) { return x > 0.0; });
    Generator dual = make_separable_generator(
        "power_conj(" + fmt_index(a) + ")",
        k > 0.0 ? "strictly positive reals" : "strictly negative reals",
        [a, k](double y) { return std::pow(k * y, 1.0 / (1.0 - a)) / a; },
        [a, k](double y) { return std::pow(k * y, a / (1.0 - a)); },
        [k](double y) { return k * y > 0.0; });
    return primal.with_conjugate(std::move(dual));
}

// ---- Stock links -------------------------------------------------------

Link identity_link() {
    return Link{"identity", [](double x) { return x; }, [](double y) { return y; }};
}

Link log_link() {
    return Link{"log", [](double x) { return std::log(x); },
                [](double y) { return std::exp(y); }};
}

Link sqrt_link() {
    return Link{"sqrt", [](double x) { return std::sqrt(x); },
                [](double y) { return y * y; }};
}

Link square_link() {
    return Link{"square", [](double x) { return x * x; },
                [](double y) { return std::sqrt(y); }};
}

Link inverse_link() {
    return Link{"inverse", [](double x) { return 1.0 / x; },
                [](double y) { return 1.0 / y; }};
}

Link power_link(double a) {
    if (!std::isfinite(a) || a == 0.0) {
        throw DomainError("power link exponent must be a finite nonzero real");
    }
    return Link{"power(" + fmt_index(a) + ")",
                [a](double x) { return std::pow(x, a); },
                [a](double y) { return std::pow(y, 1.0 / a); }};
}

// ---- Catalog -----------------------------------------------------------

CatalogEntry get_entry(std::string_view key, std::optional<double> family_index) {
    std::string base(key);
    std::optional<double> idx = family_index;
    if (base.size() > 6 && base.starts_with("alpha(") && base.back() == ')') {
        if (idx) {
            throw DomainError("family index given both in the key and separately");
        }
        const std::string inner = base.substr(6, base.size() - 7);
        char* end = nullptr;
        const double parsed = std::strtod(inner.c_str(), &end);
        if (end != inner.c_str() + inner.size() || inner.empty()) {
            throw UnknownKeyError("cannot parse family index in key '" + base + "'");
        }
        idx = parsed;
        base = "alpha";
    }
    if (base == "kl") return make_kl_entry();
    if (base == "reverse_kl") return make_reverse_kl_entry();
    if (base == "hellinger") return make_hellinger_entry();
    if (base == "pearson_chi2") return make_pearson_entry();
    if (base == "neyman_chi2") return make_neyman_entry();
    if (base == "alpha") {
        if (!idx) {
            throw DomainError("the alpha entry needs a family index, e.g. alpha(0.5)");
        }
        return make_alpha_entry(*idx);
    }
    throw UnknownKeyError("unknown catalog key '" + std::string(key) + "'");
}

CatalogEntry get_entry(std::string_view key) { return get_entry(key, std::nullopt); }

std::vector<std::string> catalog_keys() {
    return {"kl", "reverse_kl", "alpha", "hellinger", "pearson_chi2", "neyman_chi2"};
}

double oracle_fdiv(std::string_view name, const Point& p, const Point& q,
                   std::optional<double> family_index) {
    if (name == "kl") return literal_kl(p, q);
    if (name == "hellinger") return squared_hellinger(p, q);
    if (name == "pearson") return pearson_chi2(p, q);
    if (name == "neyman") return neyman_chi2(p, q);
    if (name == "alpha") {
        if (!family_index) {
            throw DomainError("the alpha formula needs a family index");
        }
        const double idx = *family_index;
        require_family_index(idx);
        const double scale = 1.0 / (idx * (idx - 1.0));
        return scale * sum_over(p, q, [idx](double a, double b) {
            return std::pow(a, idx) * std::pow(b, 1.0 - idx) - 1.0;
        });
    }
    if (name == "js") {
        const double a = family_index.value_or(0.5);
        if (!(a > 0.0) || !(a < 1.0)) {
            throw DomainError("js mixture weight must lie in (0, 1)");
        }
        require_same_dim(p.coords(), q.coords(), "oracle");
        std::vector<double> m(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            m[i] = (1.0 - a) * p[i] + a * q[i];
        }
        const Point mid(std::move(m));
        return (1.0 - a) * literal_kl(p, mid) + a * literal_kl(q, mid);
    }
    throw UnknownKeyError("unknown divergence formula '" + std::string(name) + "'");
}

}  // namespace gdiv
