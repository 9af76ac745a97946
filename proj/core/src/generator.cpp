// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include "gdiv/generator.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "gdiv/numeric.hpp"
#include "gdiv/point.hpp"

namespace gdiv {

const Generator& Generator::conjugate() const {
    if (!conjugate_) {
        throw UnsupportedError("generator '" + name + "' has no registered conjugate");
    }
    return *conjugate_;
}

Generator Generator::with_conjugate(Generator dual) const {
    // Chain primal -> dual -> primal(copy without conjugate): the biconjugate
    // is reachable once, with no ownership cycle.
    Generator primal_plain = *this;
    primal_plain.conjugate_.reset();
    dual.conjugate_ = std::make_shared<const Generator>(std::move(primal_plain));
    Generator out = *this;
    out.conjugate_ = std::make_shared<const Generator>(std::move(dual));
    return out;
}

Generator make_separable_generator(std::string name, std::string domain_desc,
                                   std::function<double(double)> f,
                                   std::function<double(double)> df,
                                   std::function<bool(double)> scalar_domain) {
    Generator gen;
    gen.name = std::move(name);
    gen.domain_desc = std::move(domain_desc);
    auto in_domain = [scalar_domain](std::span<const double> x) {
        if (x.empty()) return false;
        for (double v : x) {
            if (!std::isfinite(v) || !scalar_domain(v)) return false;
        }
        return true;
    };
    auto require = [in_domain, gname = gen.name,
                    gdom = gen.domain_desc](std::span<const double> x) {
        if (!in_domain(x)) {
            throw DomainError("argument outside domain of generator '" + gname +
                              "' (" + gdom + ")");
        }
    };
    gen.value = [f, require](std::span<const double> x) {
        require(x);
        return pairwise_sum(0, x.size(), [&](std::size_t i) { return f(x[i]); });
    };
    gen.grad = [df, require](std::span<const double> x) {
        require(x);
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = df(x[i]);
        return out;
    };
    gen.in_domain = std::move(in_domain);
    return gen;
}

Generator scaled_sum(double c1, const Generator& g1, double c2, const Generator& g2) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) {
        throw DomainError("scaled_sum requires strictly positive coefficients");
    }
    Generator gen;
    gen.name = g1.name + "+" + g2.name;
    gen.domain_desc = g1.domain_desc + " and " + g2.domain_desc;
    gen.value = [c1, v1 = g1.value, c2, v2 = g2.value](std::span<const double> x) {
        return c1 * v1(x) + c2 * v2(x);
    };
    gen.grad = [c1, d1 = g1.grad, c2, d2 = g2.grad](std::span<const double> x) {
        std::vector<double> a = d1(x);
        const std::vector<double> b = d2(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = c1 * a[i] + c2 * b[i];
        return a;
    };
    gen.in_domain = [i1 = g1.in_domain, i2 = g2.in_domain](std::span<const double> x) {
        return i1(x) && i2(x);
    };
    return gen;
}

double grad_check(const Generator& gen, std::span<const double> x, double step) {
    if (!(step > 0.0) || !(step < 1.0)) {
        throw DomainError("grad_check step must lie in (0, 1)");
    }
    if (!gen.in_domain(x)) {
        throw DomainError("grad_check: x outside domain of '" + gen.name + "'");
    }
    const std::vector<double> g = gen.grad(x);
    std::vector<double> probe(x.begin(), x.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const double xi = probe[i];
        probe[i] = xi + step;
        if (!gen.in_domain(probe)) {
            throw DomainError("grad_check: probe leaves domain at index " +
                              std::to_string(i));
        }
        const double hi = gen.value(probe);
        probe[i] = xi - step;
        if (!gen.in_domain(probe)) {
            throw DomainError("grad_check: probe leaves domain at index " +
                              std::to_string(i));
        }
        const double lo = gen.value(probe);
        probe[i] = xi;
        const double central = (hi - lo) / (2.0 * step);
        const double dev = std::abs(central - g[i]) / (std::abs(g[i]) + 1e-300);
        if (dev > worst) worst = dev;
    }
    return worst;
}

double fenchel_residual(const Generator& gen, std::span<const double> x) {
    const Generator& dual = gen.conjugate();
    const double fx = gen.value(x);
    const std::vector<double> y = gen.grad(x);
    const double fstar = dual.value(y);
    return std::abs(fx + fstar - dot(x, y));
}

}  // namespace gdiv
