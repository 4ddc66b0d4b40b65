#pragma once

// Adaptive Gauss-Legendre quadrature with interval bisection.
//
// Each panel is integrated with a 15-point rule; the error estimate is the
// difference against the two half-panel sums, and panels are split until the
// estimate fits their width-proportional share of the absolute tolerance.

#include <meanbound/errors.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace meanbound::quadrature {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0; ///< sum of accepted per-panel estimates
    long panels = 0;             ///< panels accepted
};

namespace detail {

// Nodes and weights of the 15-point Gauss-Legendre rule on [-1, 1], found by
// Newton iteration on P_15. Only computed once (function-local static).
struct GaussTable {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};

    GaussTable() {
        constexpr int n = 15;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int pass = 0; pass < 100; ++pass) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = -p1 / pp;
                z += dz;
                if (std::abs(dz) <= 1e-14) break;
            }
            node[i] = -z;
            node[n - 1 - i] = z;
            weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussTable& gauss_table() {
    static const GaussTable table;
    return table;
}

template <class F>
double gauss15(F&& f, double a, double b) {
    const GaussTable& table = gauss_table();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 15; ++i) sum += table.weight[i] * f(mid + half * table.node[i]);
    return sum * half;
}

} // namespace detail

/// Integrates f over [a, b] to absolute tolerance abs_tol, splitting at most
/// max_panels panels. Throws ConvergenceError (carrying the achieved error
/// estimate) when the budget runs out before the tolerance is met.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, long max_panels = 1'000'000) {
    if (!(abs_tol > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("quadrature::integrate: bad tolerance or interval");
    Result res;
    if (a == b) return res;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    struct Panel {
        double a, b, value;
    };
    std::vector<Panel> pending;
    pending.push_back({a, b, detail::gauss15(f, a, b)});
    const double inv_total = 1.0 / std::abs(b - a);
    long used = 1;

    while (!pending.empty()) {
        const Panel p = pending.back();
        pending.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const double left = detail::gauss15(f, p.a, mid);
        const double right = detail::gauss15(f, mid, p.b);
        used += 2;
        const double refined = left + right;
        const double est = std::abs(p.value - refined);
        const double share = abs_tol * std::abs(p.b - p.a) * inv_total;
        const double width_floor = 8.0 * eps * std::max({std::abs(p.a), std::abs(p.b), 1.0});
        if (est <= share || std::abs(p.b - p.a) <= width_floor) {
            res.value += refined;
            res.error_estimate += est;
            ++res.panels;
            continue;
        }
        if (used + 2 > max_panels)
            throw ConvergenceError("quadrature::integrate: subdivision budget exhausted",
                                   res.error_estimate + est);
        pending.push_back({p.a, mid, left});
        pending.push_back({mid, p.b, right});
    }
    if (res.error_estimate > abs_tol)
        throw ConvergenceError("quadrature::integrate: tolerance not reached", res.error_estimate);
    return res;
}

} // namespace meanbound::quadrature
