#include <meanbound/elliptic.hpp>

#include <meanbound/quadrature.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meanbound::elliptic {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct AgmValues {
    double k;
    double e;
};

// AGM iteration with a0 = 1, b0 = r', c0 = r:
//   K = pi / (2 a_n),  E = K (1 - sum 2^{n-1} c_n^2).
// Quadratic convergence; the 64-iteration cap is unreachable for any modulus
// Modulus accepts and indicates a broken invariant if hit.
AgmValues agm_ke(double r, double rc) {
    double a = 1.0;
    double b = rc;
    double sum = 0.5 * r * r;
    double pow2 = 1.0;
    int n = 0;
    while (std::abs(a - b) > 4.0 * eps * a) {
        if (++n > 64) throw std::runtime_error("elliptic: AGM failed to converge (internal error)");
        const double c = 0.5 * (a - b);
        sum += pow2 * c * c;
        const double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
        pow2 *= 2.0;
    }
    const double k = std::numbers::pi / (2.0 * a);
    return {k, k * (1.0 - sum)};
}

AgmValues agm_at(double r) { return agm_ke(r, std::sqrt((1.0 - r) * (1.0 + r))); }

} // namespace

Modulus::Modulus(double r) : r_(r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("Modulus: r must lie in [0, 1], got " + std::to_string(r));
}

double Modulus::complement() const noexcept { return std::sqrt((1.0 - r_) * (1.0 + r_)); }

double ellipk(Modulus m) {
    if (m.value() == 1.0) throw std::domain_error("ellipk: K(1-) diverges");
    return agm_ke(m.value(), m.complement()).k;
}

double ellipe(Modulus m) {
    if (m.value() == 1.0) return 1.0;
    return agm_ke(m.value(), m.complement()).e;
}

EllipticValues ellip_pair(Modulus m) {
    if (m.value() == 1.0) throw std::domain_error("ellip_pair: K(1-) diverges");
    const AgmValues ke = agm_ke(m.value(), m.complement());
    return {ke.k, ke.e, m};
}

EllipticValues ellip_oracle(Modulus m, double tol) {
    if (!(tol >= 1e-15 && tol <= 1e-6))
        throw std::invalid_argument("ellip_oracle: tol must lie in [1e-15, 1e-6]");
    if (m.value() == 1.0) throw std::domain_error("ellip_oracle: K(1-) diverges");
    const double r2 = m.value() * m.value();
    const auto first = [r2](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - r2 * s * s);
    };
    const auto second = [r2](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - r2 * s * s);
    };
    const double half_pi = std::numbers::pi / 2.0;
    const double k = quadrature::integrate(first, 0.0, half_pi, tol).value;
    const double e = quadrature::integrate(second, 0.0, half_pi, tol).value;
    return {k, e, m};
}

DerivativeResiduals derivative_residuals(Modulus m, double h) {
    const double r = m.value();
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("derivative_residuals: r must lie in (0, 1)");
    if (!(h > 0.0 && r - h > 0.0 && r + h < 1.0))
        throw std::domain_error("derivative_residuals: need r - h and r + h inside (0, 1)");

    const AgmValues lo = agm_at(r - h);
    const AgmValues hi = agm_at(r + h);
    const AgmValues mid = agm_at(r);
    const double rp2 = (1.0 - r) * (1.0 + r);
    const double inv2h = 1.0 / (2.0 * h);

    const auto e_minus_rp2k = [](const AgmValues& v, double x) {
        return v.e - (1.0 - x) * (1.0 + x) * v.k;
    };
    const double fd_k = (hi.k - lo.k) * inv2h;
    const double fd_e = (hi.e - lo.e) * inv2h;
    const double fd_combo = (e_minus_rp2k(hi, r + h) - e_minus_rp2k(lo, r - h)) * inv2h;
    const double fd_kme = ((hi.k - hi.e) - (lo.k - lo.e)) * inv2h;

    return {
        std::abs(fd_k - (mid.e - rp2 * mid.k) / (r * rp2)),
        std::abs(fd_e - (mid.e - mid.k) / r),
        std::abs(fd_combo - r * mid.k),
        std::abs(fd_kme - r * mid.e / rp2),
    };
}

double landen_e_residual(Modulus m) {
    const double r = m.value();
    if (r == 1.0) throw std::domain_error("landen_e_residual: r must lie in [0, 1)");
    const AgmValues base = agm_at(r);
    const double arg = 2.0 * std::sqrt(r) / (1.0 + r);
    // 2 sqrt(r) <= 1 + r with equality only at r = 1; rounding can still push
    // arg to 1.0 for r within a few ulp of 1, where E(arg) = 1.
    const double lhs = arg < 1.0 ? agm_at(arg).e : 1.0;
    const double rhs = (2.0 * base.e - (1.0 - r) * (1.0 + r) * base.k) / (1.0 + r);
    return std::abs(lhs - rhs);
}

} // namespace meanbound::elliptic
