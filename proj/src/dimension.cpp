#include "ifsx/system.hpp"

#include <stdexcept>

namespace ifsx {

Scalar SimilarityDimension::rho_pow_s(const Scalar& r) const {
    // Exact homogeneous case: ratio^s = 1/N is the defining identity, so the
    // mass of one map is the exact rational 1/N even when s is irrational.
    if (homogeneous && r.is_exact() && !common_ratio.is_zero() && r.value() == common_ratio)
        return Scalar::exact(Rat(1, n_maps));
    // Otherwise a certified enclosure of r^s over the r-range × s-range
    // (r^s is monotone in r for r > 0, but evaluating both endpoints and
    // hulling needs no monotonicity argument at all).
    const auto a = enclose::pow_range(r.lo(), enclosure.lo(), enclosure.hi(), 192);
    const auto b = enclose::pow_range(r.hi(), enclosure.lo(), enclosure.hi(), 192);
    return Scalar::range(min(a.lo, b.lo), max(a.hi, b.hi));
}

namespace {

// Detect a rational dimension for the homogeneous case: ratio^s = 1/N has
// the rational solution s = u/v exactly when ratio^u = (1/N)^v; scan small
// exponents.
std::optional<Rat> rational_dimension(const Rat& ratio, int n) {
    const Rat inv_n = Rat(1, n);
    for (long u = 1; u <= 64; ++u) {
        const Rat lhs = ratio.pow_int(u);
        Rat rhs = inv_n; // (1/N)^v as v advances
        for (long v = 1; v <= 64; ++v) {
            if (lhs == rhs) return Rat(u, v);
            if (rhs < lhs) break; // rhs only shrinks below lhs; no match left
            rhs *= inv_n;
        }
    }
    return std::nullopt;
}

} // namespace

SimilarityDimension compute_dimension(const std::vector<Similitude>& maps, Mode mode,
                                      bool homogeneous, const Rat& width) {
    SimilarityDimension sd;
    sd.n_maps = static_cast<int>(maps.size());
    sd.homogeneous = homogeneous;

    if (homogeneous && mode == Mode::exact) {
        sd.common_ratio = maps[0].ratio.value();
        sd.exact_value = rational_dimension(sd.common_ratio, sd.n_maps);
        if (sd.exact_value) {
            sd.enclosure = Scalar::exact(*sd.exact_value);
            return sd;
        }
        // s = log N / log(1/ratio), both logarithms positive; directed
        // division of directed log enclosures, refined until narrow enough.
        for (unsigned bits = 128; bits <= 2048; bits *= 2) {
            const auto ln_n = enclose::log_range(Rat(sd.n_maps), bits);
            const auto ln_inv = enclose::log_range(sd.common_ratio.reciprocal(), bits);
            const Rat lo = ln_n.lo / ln_inv.hi;
            const Rat hi = ln_n.hi / ln_inv.lo;
            sd.enclosure = Scalar::range(lo, hi);
            if (hi - lo <= width) break;
        }
        return sd;
    }

    // General path: bisection on the moment equation, run on the ratio
    // endpoints (s is monotone increasing in every ratio).
    std::vector<Rat> los, his;
    los.reserve(maps.size());
    his.reserve(maps.size());
    for (const auto& f : maps) {
        los.push_back(f.ratio.lo());
        his.push_back(f.ratio.hi());
    }
    const auto lo_rng = enclose::dimension_range(los, width);
    const auto hi_rng = enclose::dimension_range(his, width);
    sd.enclosure = Scalar::range(lo_rng.lo, hi_rng.hi);
    // common_ratio stays 0 here: only the exact homogeneous path may use the
    // exact count/N identity (interval homogeneity is a flag, not a proof).
    return sd;
}

} // namespace ifsx
