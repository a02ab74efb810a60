#include "ifsx/enclosure.hpp"

#include <mpfr.h>

#include <optional>
#include <stdexcept>

namespace ifsx::enclose {

namespace {

Rat to_rat(mpfr_srcptr f) {
    Rat r;
    mpfr_get_q(r.raw(), f); // exact: mpfr values are dyadic rationals
    return r;
}

// RAII for a single mpfr_t.
struct Mpfr {
    mpfr_t v;
    explicit Mpfr(unsigned prec) { mpfr_init2(v, static_cast<mpfr_prec_t>(prec)); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

} // namespace

RatRange sqrt_range(const Rat& x, unsigned prec_bits) {
    if (x.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (auto exact = x.sqrt_exact()) return {*exact, *exact};
    Mpfr in_d(prec_bits), in_u(prec_bits), out(prec_bits);
    mpfr_set_q(in_d.v, x.raw(), MPFR_RNDD);
    mpfr_set_q(in_u.v, x.raw(), MPFR_RNDU);
    RatRange r;
    mpfr_sqrt(out.v, in_d.v, MPFR_RNDD);
    r.lo = to_rat(out.v);
    mpfr_sqrt(out.v, in_u.v, MPFR_RNDU);
    r.hi = to_rat(out.v);
    if (r.lo.sign() < 0) r.lo = Rat(0);
    return r;
}

RatRange log_range(const Rat& x, unsigned prec_bits) {
    if (x.sign() <= 0) throw std::domain_error("log of non-positive rational");
    Mpfr in_d(prec_bits), in_u(prec_bits), out(prec_bits);
    mpfr_set_q(in_d.v, x.raw(), MPFR_RNDD);
    mpfr_set_q(in_u.v, x.raw(), MPFR_RNDU);
    RatRange r;
    mpfr_log(out.v, in_d.v, MPFR_RNDD);
    r.lo = to_rat(out.v);
    mpfr_log(out.v, in_u.v, MPFR_RNDU);
    r.hi = to_rat(out.v);
    return r;
}

RatRange pow_range(const Rat& base, const Rat& elo, const Rat& ehi, unsigned prec_bits) {
    if (base.sign() <= 0) throw std::domain_error("pow with non-positive base");
    if (elo > ehi) throw std::domain_error("pow with inverted exponent range");
    // Fast exact path: integral exponents with a degenerate range.
    if (elo == ehi && elo.is_integer()) {
        const double e = elo.to_double();
        if (e > -1e6 && e < 1e6) {
            const Rat v = base.pow_int(static_cast<long>(e));
            return {v, v};
        }
    }
    Mpfr b_d(prec_bits), b_u(prec_bits), e_d(prec_bits), e_u(prec_bits), out(prec_bits);
    mpfr_set_q(b_d.v, base.raw(), MPFR_RNDD);
    mpfr_set_q(b_u.v, base.raw(), MPFR_RNDU);
    mpfr_set_q(e_d.v, elo.raw(), MPFR_RNDD);
    mpfr_set_q(e_u.v, ehi.raw(), MPFR_RNDU);
    // Evaluate every (base, exponent) corner with result rounding in both
    // directions; sidesteps per-case monotonicity reasoning.
    std::optional<Rat> lo, hi;
    mpfr_ptr bs[2] = {b_d.v, b_u.v};
    mpfr_ptr es[2] = {e_d.v, e_u.v};
    for (auto* b : bs) {
        for (auto* e : es) {
            mpfr_pow(out.v, b, e, MPFR_RNDD);
            Rat cand_lo = to_rat(out.v);
            if (!lo || cand_lo < *lo) lo = cand_lo;
            mpfr_pow(out.v, b, e, MPFR_RNDU);
            Rat cand_hi = to_rat(out.v);
            if (!hi || cand_hi > *hi) hi = cand_hi;
        }
    }
    return {*lo, *hi};
}

namespace {

// Certified sign of (sum_i ratios[i]^s - 1); nullopt when the enclosure
// straddles zero at this precision.
std::optional<int> moment_sign(const std::vector<Rat>& ratios, const Rat& s, unsigned bits) {
    Rat lo(0), hi(0);
    for (const Rat& rho : ratios) {
        RatRange t = pow_range(rho, s, s, bits);
        lo += t.lo;
        hi += t.hi;
    }
    const Rat one(1);
    if (lo > one) return 1;
    if (hi < one) return -1;
    if (lo == one && hi == one) return 0;
    return std::nullopt;
}

std::optional<int> moment_sign_adaptive(const std::vector<Rat>& ratios, const Rat& s) {
    for (unsigned bits = 128; bits <= 2048; bits *= 2) {
        if (auto sg = moment_sign(ratios, s, bits)) return sg;
    }
    return std::nullopt;
}

} // namespace

RatRange dimension_range(const std::vector<Rat>& ratios, const Rat& width) {
    if (ratios.size() < 2) throw std::domain_error("dimension needs at least two ratios");
    for (const Rat& rho : ratios)
        if (rho.sign() <= 0 || rho >= Rat(1))
            throw std::domain_error("dimension ratios must lie in (0,1)");
    // f(s) = sum rho_i^s - 1 is strictly decreasing; f(0) = N-1 > 0.
    Rat lo(0);
    Rat hi(1);
    for (int guard = 0; guard < 64; ++guard) {
        auto sg = moment_sign_adaptive(ratios, hi);
        if (sg && *sg < 0) break;
        if (sg && *sg == 0) return {hi, hi};
        lo = hi;
        hi *= Rat(2);
    }
    while (hi - lo > width) {
        Rat mid = (lo + hi) / Rat(2);
        auto sg = moment_sign_adaptive(ratios, mid);
        if (!sg) {
            // Exceedingly unlikely (the root would have to be a dyadic hit);
            // nudge the probe off the midpoint.
            mid = lo + (hi - lo) * Rat(5, 11);
            sg = moment_sign_adaptive(ratios, mid);
            if (!sg) return {lo, hi}; // honest wider bracket
        }
        if (*sg == 0) return {mid, mid};
        if (*sg > 0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

double double_below(const Rat& x) {
    Mpfr f(53);
    mpfr_set_q(f.v, x.raw(), MPFR_RNDD);
    return mpfr_get_d(f.v, MPFR_RNDD);
}

double double_above(const Rat& x) {
    Mpfr f(53);
    mpfr_set_q(f.v, x.raw(), MPFR_RNDU);
    return mpfr_get_d(f.v, MPFR_RNDU);
}

} // namespace ifsx::enclose
