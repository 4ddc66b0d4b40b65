#pragma once

// Bivariate means of two positive numbers: the Toader mean
//
//   T(a,b) = (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 t + b^2 sin^2 t) dt,
//
// the centroidal mean 2(a^2+ab+b^2)/(3(a+b)), the contraharmonic mean
// (a^2+b^2)/(a+b), the p-th power mean, and the convex-combination family
// J(x) = centroidal(xa+(1-x)b, xb+(1-x)a) on x in [1/2, 1].
// Every mean is symmetric, homogeneous of degree 1, and equals the common
// value on the diagonal. Pure functions; safe for concurrent use.

#include <meanbound/errors.hpp>

namespace meanbound::means {

/// Ordered pair of positive finite reals. Construction rejects anything else.
class PositivePair {
public:
    PositivePair(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double max_value() const noexcept { return a_ > b_ ? a_ : b_; }
    double min_value() const noexcept { return a_ > b_ ? b_ : a_; }

    /// min/max in (0, 1]; the ratio t after normalising to a > b.
    double ratio() const noexcept { return min_value() / max_value(); }

    /// (max-min)/(max+min) in [0, 1); equals (1-t)/(1+t) for t = ratio().
    double relative_difference() const noexcept {
        return (max_value() - min_value()) / (max_value() + min_value());
    }

private:
    double a_;
    double b_;
};

double toader(const PositivePair& pair);
double centroidal(const PositivePair& pair);
double contraharmonic(const PositivePair& pair);

/// ((a^p + b^p)/2)^(1/p) for finite p != 0, sqrt(ab) for p = 0. Evaluated in
/// log space anchored on the dominant entry, so large |p| cannot overflow.
double power_mean(const PositivePair& pair, double p);

/// J(x) = centroidal(xa+(1-x)b, xb+(1-x)a); strictly increasing in x for
/// a != b, J(1/2) = (a+b)/2, J(1) = centroidal(a,b). The weight is
/// restricted to [1/2, 1]; anything else is a std::domain_error.
double j_mean(const PositivePair& pair, double x);

/// Dispatch tag for the CLI and other generic callers.
struct MeanKind {
    enum class Tag { toader, centroidal, contraharmonic, power, convex_centroidal };

    /// power carries the exponent, convex_centroidal the weight in [1/2, 1].
    explicit MeanKind(Tag tag, double param = 0.0);

    Tag tag;
    double param;
};

double evaluate(const MeanKind& kind, const PositivePair& pair);

} // namespace meanbound::means
