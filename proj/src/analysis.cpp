#include <meanbound/analysis.hpp>

#include <meanbound/elliptic.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace meanbound::analysis {

namespace {

constexpr double pi = std::numbers::pi;

// Below this r the elliptic combinations in f and f1 switch to their series.
constexpr double series_switch_r = 0.05;

// G(r) = (2/pi)[2E(r) - (1-r^2)K(r)] - 1
//      = r^2/4 + r^4/64 + r^6/256 + 25 r^8/16384 + O(r^10).
// Also the fractional excess of the Toader mean over the arithmetic mean at
// relative difference r. The series tail is < 1e-16 up to the switch radius.
double elliptic_excess(double r) {
    const double r2 = r * r;
    if (r < series_switch_r)
        return r2 * (0.25 + r2 * (1.0 / 64.0 + r2 * (1.0 / 256.0 + r2 * (25.0 / 16384.0))));
    const auto ke = elliptic::ellip_pair(elliptic::Modulus{r});
    return 2.0 / pi * (2.0 * ke.e_second - (1.0 - r) * (1.0 + r) * ke.k_first) - 1.0;
}

// H(r) = (2/pi)[E(r) - (1-r^2)K(r)] = r G'(r)
//      = r^2/2 + r^4/16 + 3 r^6/128 + 25 r^8/2048 + O(r^10).
double elliptic_excess_slope(double r) {
    const double r2 = r * r;
    if (r < series_switch_r)
        return r2 * (0.5 + r2 * (1.0 / 16.0 + r2 * (3.0 / 128.0 + r2 * (25.0 / 2048.0))));
    const auto ke = elliptic::ellip_pair(elliptic::Modulus{r});
    return 2.0 / pi * (ke.e_second - (1.0 - r) * (1.0 + r) * ke.k_first);
}

double f2_at(double r, double weight_sq) {
    return 2.0 / pi * elliptic::ellipk(elliptic::Modulus{r}) - 4.0 / 3.0 * weight_sq;
}

double f1_at(double r, double weight_sq) {
    return elliptic_excess_slope(r) - 2.0 / 3.0 * weight_sq * r * r;
}

void check_weight(const char* who, double p) {
    if (!(p >= 0.5 && p <= 1.0))
        throw std::domain_error(std::string(who) + ": p must lie in [1/2, 1], got " +
                                std::to_string(p));
}

means::PositivePair convex_combination(const means::PositivePair& pair, double x) {
    const double a = pair.a();
    const double b = pair.b();
    return {x * a + (1.0 - x) * b, x * b + (1.0 - x) * a};
}

} // namespace

SharpConstants sharp_constants() {
    return {
        0.5 * (1.0 + std::sqrt(3.0) / 2.0),
        0.5 + 0.5 * std::sqrt(12.0 / pi - 3.0),
        0.75,
        0.5 + std::sqrt(4.0 * pi - pi * pi) / (2.0 * pi),
    };
}

FChainValues f_chain(double r, double p) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("f_chain: r must lie in [0, 1), got " + std::to_string(r));
    check_weight("f_chain", p);
    const double w = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    const double r2 = r * r;
    return {
        elliptic_excess(r) - w * r2 / 3.0,
        elliptic_excess_slope(r) - 2.0 / 3.0 * w * r2,
        f2_at(r, w),
    };
}

double reduction_residual(const means::PositivePair& pair, double p) {
    check_weight("reduction_residual", p);
    if (pair.a() == pair.b())
        throw std::invalid_argument("reduction_residual: a = b degenerates the identity to 0 = 0");
    const double hi = pair.max_value();
    const double r = pair.relative_difference();
    const double lhs = means::toader(pair) - means::j_mean(pair, p);
    const double rhs = hi / (1.0 + r) * f_chain(r, p).f;
    return std::abs(lhs - rhs);
}

double find_f2_root(double p) {
    check_weight("find_f2_root", p);
    const double w = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    double lo = 1e-12;
    double hi = 1.0 - 1e-12;
    // f2(0) = 1 - (4/3)(1-2p)^2 sits at roundoff when p = lambda; anything
    // not clearly negative means no interior sign change.
    if (f2_at(lo, w) >= -1e-14)
        throw NoRootError("find_f2_root: f2 not negative at the left endpoint (need p > lambda)");
    if (f2_at(hi, w) <= 0.0)
        throw NoRootError("find_f2_root: f2 not positive at the right endpoint");
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f2_at(mid, w) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double find_f1_root(double p) {
    const double r0 = find_f2_root(p);
    const double w = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    double lo = r0;
    double hi = 1.0 - 1e-9;
    if (f1_at(lo, w) >= 0.0)
        throw NoRootError("find_f1_root: f1 not negative at its minimum r0 (left endpoint)");
    if (f1_at(hi, w) <= 0.0)
        throw NoRootError("find_f1_root: f1 not positive near r = 1 (right endpoint)");
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f1_at(mid, w) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SharpnessRecord solve_sharpness(double t, double x_tol) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("solve_sharpness: ratio must lie in (0, 1), got " +
                                std::to_string(t));
    return solve_sharpness(means::PositivePair{1.0, t}, x_tol);
}

SharpnessRecord solve_sharpness(const means::PositivePair& pair, double x_tol) {
    if (pair.a() == pair.b())
        throw std::domain_error("solve_sharpness: pair must have distinct entries");
    if (!(x_tol > 0.0)) throw std::invalid_argument("solve_sharpness: x_tol must be positive");

    const double t = pair.ratio();
    const double r = pair.relative_difference();
    const double toader_value = means::toader(pair);

    // Sign of T - J(x), positive below the root. Near the diagonal the sign
    // comes from the reduced form G(r) - (1/3)(1-2x)^2 r^2, scale-free and
    // immune to the cancellation of the direct difference.
    const bool reduced = r < series_switch_r;
    const double excess = reduced ? elliptic_excess(r) : 0.0;
    const double r2 = r * r;
    const auto diff = [&](double x) {
        if (reduced) {
            const double d = 1.0 - 2.0 * x;
            return excess - d * d * r2 / 3.0;
        }
        return toader_value - means::j_mean(pair, x);
    };

    double lo = 0.5;
    double hi = 1.0;
    int iterations = 0;
    bool clamped = false;
    double x_star;
    if (diff(lo) <= 0.0) {
        x_star = lo;
        clamped = true;
    } else if (diff(hi) >= 0.0) {
        x_star = hi;
        clamped = true;
    } else {
        while (hi - lo > x_tol && iterations < 200) {
            ++iterations;
            const double mid = 0.5 * (lo + hi);
            (diff(mid) > 0.0 ? lo : hi) = mid;
        }
        x_star = 0.5 * (lo + hi);
    }
    const double residual = std::abs(means::j_mean(pair, x_star) - toader_value);
    return {t, x_star, iterations, residual, clamped};
}

std::vector<double> sharpness_grid(int points) {
    if (points < 2) throw std::invalid_argument("sharpness_grid: need at least 2 points");
    const double t_min = 1e-6;  // deep end, where x* approaches mu
    const double gap_min = 1e-4; // 1 - t at the diagonal end, where x* approaches lambda
    const int n_lo = points / 2 + points % 2;
    const int n_hi = points / 2;
    std::vector<double> grid;
    grid.reserve(points);
    const double ln_tmin = std::log(t_min);
    const double ln_half = std::log(0.5);
    for (int i = 0; i < n_lo; ++i) {
        const double u = n_lo == 1 ? 0.0 : static_cast<double>(i) / (n_lo - 1);
        grid.push_back(std::exp(ln_tmin + u * (ln_half - ln_tmin)));
    }
    const double ln_gap = std::log(gap_min);
    for (int j = 0; j < n_hi; ++j) {
        const double u = static_cast<double>(j + 1) / n_hi;
        grid.push_back(1.0 - std::exp(ln_half + u * (ln_gap - ln_half)));
    }
    return grid;
}

std::string_view to_string(InequalityId id) {
    switch (id) {
        case InequalityId::vuorinen_lower: return "vuorinen_lower";
        case InequalityId::alzer_qiu_upper: return "alzer_qiu_upper";
        case InequalityId::chu_lower: return "chu_lower";
        case InequalityId::chu_upper: return "chu_upper";
        case InequalityId::main_lower: return "main_lower";
        case InequalityId::main_upper: return "main_upper";
    }
    return "unknown";
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
    for (const InequalityId id : all_inequalities())
        if (name == to_string(id)) return id;
    return std::nullopt;
}

const std::vector<InequalityId>& all_inequalities() {
    static const std::vector<InequalityId> ids{
        InequalityId::vuorinen_lower, InequalityId::alzer_qiu_upper, InequalityId::chu_lower,
        InequalityId::chu_upper,      InequalityId::main_lower,      InequalityId::main_upper,
    };
    return ids;
}

VerificationReport verify_inequality(InequalityId id, long samples, std::uint64_t seed,
                                     double band) {
    if (samples < 1) throw std::invalid_argument("verify_inequality: samples must be >= 1");
    if (!(band >= 0.0)) throw std::invalid_argument("verify_inequality: band must be >= 0");

    const SharpConstants c = sharp_constants();
    const double q_alzer = std::log(2.0) / std::log(pi / 2.0);
    const double ln_lo = std::log(1e-8);
    const double ln_hi = std::log(1.0 - 1e-8);

    std::mt19937_64 rng(seed);
    long violations = 0;
    long inconclusive = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double worst_t = 0.5;

    for (long i = 0; i < samples; ++i) {
        // 53-bit mapping spelled out so the stream is identical everywhere.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double t = std::exp(ln_lo + u * (ln_hi - ln_lo));
        const means::PositivePair pair{1.0, t};
        const double tv = means::toader(pair);
        double lhs = 0.0;
        double rhs = 0.0;
        switch (id) {
            case InequalityId::vuorinen_lower:
                lhs = means::power_mean(pair, 1.5);
                rhs = tv;
                break;
            case InequalityId::alzer_qiu_upper:
                lhs = tv;
                rhs = means::power_mean(pair, q_alzer);
                break;
            case InequalityId::chu_lower:
                lhs = means::contraharmonic(convex_combination(pair, c.chu_alpha));
                rhs = tv;
                break;
            case InequalityId::chu_upper:
                lhs = tv;
                rhs = means::contraharmonic(convex_combination(pair, c.chu_beta));
                break;
            case InequalityId::main_lower:
                lhs = means::j_mean(pair, c.lambda);
                rhs = tv;
                break;
            case InequalityId::main_upper:
                lhs = tv;
                rhs = means::j_mean(pair, c.mu);
                break;
        }
        const double margin = rhs - lhs;
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (margin < -band * scale)
            ++violations;
        else if (margin < 0.0)
            ++inconclusive;
        if (margin < min_margin) {
            min_margin = margin;
            worst_t = t;
        }
    }
    return {id, samples, violations, inconclusive, min_margin, means::PositivePair{1.0, worst_t}};
}

std::optional<means::PositivePair> find_counterexample(double p, BoundSide side) {
    const SharpConstants c = sharp_constants();
    const double band = default_strictness_band;
    if (side == BoundSide::lower) {
        if (!(p >= c.lambda && p <= 1.0))
            throw std::invalid_argument(
                "find_counterexample: lower side needs p in [lambda, 1], lambda = " +
                std::to_string(c.lambda));
        for (int k = 1; k <= 40; ++k) {
            const double t = 1.0 - std::ldexp(1.0, -k);
            const means::PositivePair pair{1.0, t};
            const double lhs = means::j_mean(pair, p);
            const double rhs = means::toader(pair);
            if (rhs - lhs < -band * std::max(std::abs(lhs), std::abs(rhs))) return pair;
        }
        return std::nullopt;
    }
    if (!(p >= 0.5 && p <= c.mu))
        throw std::invalid_argument(
            "find_counterexample: upper side needs p in [1/2, mu], mu = " + std::to_string(c.mu));
    for (int k = 1; k <= 40; ++k) {
        const double t = std::ldexp(1.0, -k);
        const means::PositivePair pair{1.0, t};
        const double lhs = means::toader(pair);
        const double rhs = means::j_mean(pair, p);
        if (rhs - lhs < -band * std::max(std::abs(lhs), std::abs(rhs))) return pair;
    }
    return std::nullopt;
}

} // namespace meanbound::analysis
