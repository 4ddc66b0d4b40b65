#pragma once

// Complete elliptic integrals of the first and second kind,
//
//   K(r) = int_0^{pi/2} (1 - r^2 sin^2 t)^{-1/2} dt,
//   E(r) = int_0^{pi/2} (1 - r^2 sin^2 t)^{1/2} dt,
//
// computed by the arithmetic-geometric-mean iteration, plus an adaptive
// quadrature oracle of the defining integrals that shares no numeric code
// with the AGM path. All functions here are pure and thread-safe.

#include <meanbound/errors.hpp>

namespace meanbound::elliptic {

/// Validated modulus r in [0, 1]. Construction rejects NaN and out-of-range
/// values so the operations never have to re-check their argument.
class Modulus {
public:
    explicit Modulus(double r);

    double value() const noexcept { return r_; }

    /// Complementary modulus r' = sqrt(1 - r^2), formed as (1-r)(1+r) to
    /// keep precision near r = 1.
    double complement() const noexcept;

private:
    double r_;
};

/// K(r) and E(r) evaluated together from a single AGM pass.
struct EllipticValues {
    double k_first;  ///< K(r)
    double e_second; ///< E(r)
    Modulus modulus;
};

/// First kind. K(0) = pi/2; strictly increasing; throws std::domain_error at
/// r = 1 where the integral diverges.
double ellipk(Modulus m);

/// Second kind. E(0) = pi/2, E(1) = 1 (exact special case); strictly
/// decreasing.
double ellipe(Modulus m);

/// Both integrals from one AGM pass; bit-identical to the individual calls.
/// Throws std::domain_error at r = 1.
EllipticValues ellip_pair(Modulus m);

/// Adaptive quadrature of the defining integrals with estimated absolute
/// error <= tol, tol in [1e-15, 1e-6]. Independent of the AGM path; used as
/// a cross-check oracle. Throws ConvergenceError if the subdivision budget
/// runs out, std::domain_error at r = 1.
EllipticValues ellip_oracle(Modulus m, double tol);

/// Absolute differences between central finite differences (step h) and the
/// closed-form derivatives, for 0 < r < 1 and r +- h inside (0, 1).
struct DerivativeResiduals {
    double dk;             ///< dK/dr            vs (E - r'^2 K) / (r r'^2)
    double de;             ///< dE/dr            vs (E - K) / r
    double d_e_minus_rp2k; ///< d(E - r'^2 K)/dr vs r K
    double d_k_minus_e;    ///< d(K - E)/dr      vs r E / r'^2
};
DerivativeResiduals derivative_residuals(Modulus m, double h);

/// | E(2 sqrt(r)/(1+r)) - (2 E(r) - r'^2 K(r)) / (1+r) |, the Landen-type
/// identity for E. Stays below 1e-12 for r <= 0.999.
double landen_e_residual(Modulus m);

} // namespace meanbound::elliptic
