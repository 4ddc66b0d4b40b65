#include <meanbound/means.hpp>

#include <meanbound/elliptic.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meanbound::means {

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0))
        throw std::domain_error("PositivePair: entries must be positive finite reals");
}

double toader(const PositivePair& pair) {
    if (pair.a() == pair.b()) return pair.a();
    const double hi = pair.max_value();
    const double t = pair.ratio();
    const elliptic::Modulus m{std::sqrt((1.0 - t) * (1.0 + t))};
    return 2.0 * hi / std::numbers::pi * elliptic::ellipe(m);
}

double centroidal(const PositivePair& pair) {
    if (pair.a() == pair.b()) return pair.a();
    const double hi = pair.max_value();
    const double lo = pair.min_value();
    return 2.0 * (hi * hi + hi * lo + lo * lo) / (3.0 * (hi + lo));
}

double contraharmonic(const PositivePair& pair) {
    if (pair.a() == pair.b()) return pair.a();
    const double hi = pair.max_value();
    const double lo = pair.min_value();
    return (hi * hi + lo * lo) / (hi + lo);
}

double power_mean(const PositivePair& pair, double p) {
    if (!std::isfinite(p)) throw std::domain_error("power_mean: exponent must be finite");
    if (pair.a() == pair.b()) return pair.a();
    const double hi = pair.max_value();
    const double lo = pair.min_value();
    if (p == 0.0) return std::sqrt(hi) * std::sqrt(lo);
    // Anchor on whichever entry dominates for this sign of p, so q^p <= 1:
    //   M_p = anchor * ((1 + q^p)/2)^(1/p).
    // expm1/log1p keep full precision when p is tiny and q^p is near 1.
    const double anchor = p > 0.0 ? hi : lo;
    const double other = p > 0.0 ? lo : hi;
    const double qp = p * std::log(other / anchor); // <= 0
    return anchor * std::exp(std::log1p(0.5 * std::expm1(qp)) / p);
}

double j_mean(const PositivePair& pair, double x) {
    if (!(x >= 0.5 && x <= 1.0))
        throw std::domain_error("j_mean: weight must lie in [1/2, 1], got " + std::to_string(x));
    if (pair.a() == pair.b()) return pair.a();
    const double a = pair.a();
    const double b = pair.b();
    return centroidal({x * a + (1.0 - x) * b, x * b + (1.0 - x) * a});
}

MeanKind::MeanKind(Tag tag_, double param_) : tag(tag_), param(param_) {
    if (tag == Tag::power && !std::isfinite(param))
        throw std::domain_error("MeanKind: power exponent must be finite");
    if (tag == Tag::convex_centroidal && !(param >= 0.5 && param <= 1.0))
        throw std::domain_error("MeanKind: convex weight must lie in [1/2, 1]");
}

double evaluate(const MeanKind& kind, const PositivePair& pair) {
    switch (kind.tag) {
        case MeanKind::Tag::toader: return toader(pair);
        case MeanKind::Tag::centroidal: return centroidal(pair);
        case MeanKind::Tag::contraharmonic: return contraharmonic(pair);
        case MeanKind::Tag::power: return power_mean(pair, kind.param);
        case MeanKind::Tag::convex_centroidal: return j_mean(pair, kind.param);
    }
    throw std::logic_error("evaluate: unhandled mean kind");
}

} // namespace meanbound::means
