#pragma once

// Machinery behind the sharp double inequality
//
//   J(lambda) < T(a,b) < J(mu),   J(x) = centroidal(xa+(1-x)b, xb+(1-x)a),
//
// valid for all a != b exactly when lambda <= (1 + sqrt(3)/2)/2 and
// mu >= 1/2 + sqrt(12/pi - 3)/2. The difference reduces, with t = b/a and
// r = (1-t)/(1+t), to [a/(1+r)] f(r) where
//
//   f(r)  = (2/pi)[2E - (1-r^2)K] - (1/3)(1-2p)^2 r^2 - 1,
//   f1(r) = r f'(r)  = (2/pi)[E - (1-r^2)K] - (2/3)(1-2p)^2 r^2,
//   f2(r) = f1'(r)/r = (2/pi)K - (4/3)(1-2p)^2.
//
// This module evaluates that chain, locates its sign-change roots, inverts
// J(x) = T to recover the sharp weights numerically, and sweeps the families
// of prior bounds over seeded random pairs.

#include <meanbound/means.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace meanbound::analysis {

/// The sharp weights, evaluated from their closed forms.
struct SharpConstants {
    double lambda;    ///< (1 + sqrt(3)/2)/2 ~ 0.9330127019, lower sharp weight
    double mu;        ///< 1/2 + sqrt(12/pi - 3)/2 ~ 0.9526915711, upper sharp weight
    double chu_alpha; ///< 3/4, contraharmonic lower weight
    double chu_beta;  ///< 1/2 + sqrt(4 pi - pi^2)/(2 pi), contraharmonic upper weight
};
SharpConstants sharp_constants();

struct FChainValues {
    double f;
    double f1;
    double f2;
};

/// Evaluates f, f1, f2 from the closed forms for r in [0, 1), p in [1/2, 1].
/// Below r = 0.05 the elliptic combination in f and f1 is taken from its
/// Maclaurin series, whose omitted tail is under 1e-16 there; the direct AGM
/// route loses all significant digits of f near the diagonal.
FChainValues f_chain(double r, double p);

/// | [T(a,b) - J(p)] - [max(a,b)/(1+r)] f(r) |, the two sides computed along
/// independent code paths (means vs f_chain). Stays within 1e-12 * max(a,b).
/// Throws std::invalid_argument for a = b, where the identity is trivially
/// 0 = 0.
double reduction_residual(const means::PositivePair& pair, double p);

/// Root r0 of the strictly increasing f2, i.e. K(r0) = (2 pi/3)(1-2p)^2.
/// Requires f2(0) = 1 - (4/3)(1-2p)^2 < 0, i.e. p > lambda; otherwise throws
/// NoRootError naming the endpoint that failed.
double find_f2_root(double p);

/// Root r1 of f1 in (r0, 1): f1 falls from f1(0) = 0 to its minimum at r0
/// and then rises through zero. Requires the mu-regime sign pattern
/// (f1(r0) < 0 < f1 near 1); throws NoRootError otherwise.
double find_f1_root(double p);

/// Result of inverting J(x) = T at ratio t.
struct SharpnessRecord {
    double t;        ///< ratio b/a in (0, 1)
    double x_star;   ///< solved weight in [1/2, 1]
    int iterations;  ///< bisection steps taken
    double residual; ///< | j_mean(x_star) - toader | at the pair
    bool clamped;    ///< true if T fell outside [J(1/2), J(1)] (never expected)
};

/// Bisection on x in [1/2, 1] for J(x) = T(1, t), to interval width x_tol.
/// For r = (1-t)/(1+t) below 0.05 the sign test runs through the f(r)
/// reduction (series form): the direct difference T - J(x) drowns in
/// roundoff there, which would smear x_star by ~1e-7 near t = 1.
SharpnessRecord solve_sharpness(double t, double x_tol = 1e-14);

/// Same inversion against an explicit pair; homogeneity makes the result
/// agree with solve_sharpness(min/max) to well below 1e-12.
SharpnessRecord solve_sharpness(const means::PositivePair& pair, double x_tol = 1e-14);

/// The log-symmetric ratio grid used by sharpness sweeps: half the points
/// geometric in t from 1e-6 up to 1/2, half geometric in 1-t down to 1e-4.
std::vector<double> sharpness_grid(int points);

enum class InequalityId {
    vuorinen_lower,  ///< M_{3/2} < T
    alzer_qiu_upper, ///< T < M_q, q = ln 2 / ln(pi/2)
    chu_lower,       ///< contraharmonic combination at 3/4 < T
    chu_upper,       ///< T < contraharmonic combination at chu_beta
    main_lower,      ///< J(lambda) < T
    main_upper,      ///< T < J(mu)
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);
const std::vector<InequalityId>& all_inequalities();

/// Outcome of sweeping one inequality over seeded random pairs.
struct VerificationReport {
    InequalityId id;
    long samples;
    long violations;   ///< margin below -band * scale
    long inconclusive; ///< negative margin within the band (roundoff zone)
    double min_margin; ///< smallest signed gap rhs - lhs seen
    means::PositivePair worst_pair;
};

/// Default width of the strictness band, relative to the value scale:
/// a strict inequality is only counted as violated when it fails by more.
inline constexpr double default_strictness_band = 1e-13;

/// Evaluates the claimed strict inequality on `samples` pairs (1, t) with t
/// log-uniform on [1e-8, 1 - 1e-8], drawn from a mt19937_64 seeded with
/// `seed` (reports reproduce exactly for equal inputs).
VerificationReport verify_inequality(InequalityId id, long samples, std::uint64_t seed,
                                     double band = default_strictness_band);

enum class BoundSide { lower, upper };

/// Searches for a pair defeating J(p) as a bound of the given side,
/// demonstrating that lambda and mu are best possible. The lower side walks
/// t = 1 - 2^-k, the upper side t = 2^-k, k = 1..40, and returns the first
/// pair whose margin fails beyond the strictness band; nullopt when the whole
/// sweep holds (expected exactly at p = lambda resp. p = mu). Throws
/// std::invalid_argument for p on the wrong side of the sharp constant.
std::optional<means::PositivePair> find_counterexample(double p, BoundSide side);

} // namespace meanbound::analysis
