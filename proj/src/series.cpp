#include "pws/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pws {

namespace {
constexpr long kConstPad = 40;  // extra abs digits for exact constants

long vp_long(long n, long p) {
    if (n == 0) return kBigAbs;
    long v = 0;
    long m = n < 0 ? -n : n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

bool exact_zero(const PadicNumber& x) { return x.indistinguishable_from_zero() && x.abs() >= kBigAbs / 2; }
}  // namespace

PadicNumber Context::log_chi() const {
    return pws::log_unit(PadicNumber::from_rational(p_, chi_, coeff_abs() + kConstPad));
}

PiSeries PiSeries::zero(long p, long lo, long hi, long abs) {
    return PiSeries(p, lo, std::vector<PadicNumber>(static_cast<size_t>(hi - lo), PadicNumber::zero(p, abs)));
}

PiSeries PiSeries::monomial(long p, long deg, const PadicNumber& c, long lo, long hi) {
    PiSeries s = zero(p, lo, hi);
    if (deg >= lo && deg < hi) s.set_coeff(deg, c);
    return s;
}

PadicNumber PiSeries::coeff(long d) const {
    if (d < lo() || d >= hi()) return PadicNumber::zero(p_, kBigAbs);
    return c_[static_cast<size_t>(d - lo_)];
}

void PiSeries::set_coeff(long d, const PadicNumber& x) {
    if (d < lo() || d >= hi()) throw WindowUnderflow("set_coeff outside window");
    c_[static_cast<size_t>(d - lo_)] = x;
}

long PiSeries::lowest_nonzero() const {
    for (long d = lo(); d < hi(); ++d)
        if (!coeff(d).indistinguishable_from_zero()) return d;
    return hi();
}

bool PiSeries::indistinguishable_from_zero() const { return lowest_nonzero() == hi(); }

long PiSeries::min_abs() const {
    long a = kBigAbs;
    for (const auto& x : c_) a = std::min(a, x.abs());
    return a;
}

long PiSeries::min_val() const {
    long v = kBigAbs;
    for (const auto& x : c_) v = std::min(v, x.val());
    return v;
}

bool PiSeries::integral() const { return min_val() >= 0; }

PiSeries PiSeries::windowed(long nlo, long nhi) const {
    if (nhi < nlo) throw WindowUnderflow("empty window requested");
    std::vector<PadicNumber> nc(static_cast<size_t>(nhi - nlo));
    for (long d = nlo; d < nhi; ++d) nc[static_cast<size_t>(d - nlo)] = coeff(d);
    return PiSeries(p_, nlo, std::move(nc));
}

PiSeries PiSeries::shifted(long k) const { return PiSeries(p_, lo_ + k, c_); }

PiSeries PiSeries::capped_abs(long a) const {
    PiSeries s = *this;
    for (auto& x : s.c_) x = x.truncated(a);
    return s;
}

PiSeries PiSeries::operator-() const {
    PiSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

PiSeries PiSeries::operator+(const PiSeries& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    long nlo = std::min(lo(), o.lo());
    long nhi = std::min(hi(), o.hi());
    if (nhi < nlo) nhi = nlo;
    std::vector<PadicNumber> nc(static_cast<size_t>(nhi - nlo));
    for (long d = nlo; d < nhi; ++d) nc[static_cast<size_t>(d - nlo)] = coeff(d) + o.coeff(d);
    return PiSeries(p_, nlo, std::move(nc));
}

PiSeries PiSeries::operator-(const PiSeries& o) const { return *this + (-o); }

long PiSeries::effective_lo() const {
    for (long d = lo(); d < hi(); ++d)
        if (!(coeff(d).indistinguishable_from_zero() && coeff(d).abs() >= kBigAbs / 2)) return d;
    return hi();
}

PiSeries PiSeries::operator*(const PiSeries& o) const {
    if (empty() || o.empty()) throw WindowUnderflow("product with empty window");
    // exact-zero low padding does not constrain the certified top end
    long e1 = effective_lo(), e2 = o.effective_lo();
    long nlo = lo() + o.lo();
    if (e1 == hi() || e2 == o.hi()) {
        long nhi = std::max(nlo + 1, std::min(hi() + e2, o.hi() + e1));
        return PiSeries::zero(p_, nlo, nhi);
    }
    long nhi = std::min(hi() + e2, o.hi() + e1);
    std::vector<PadicNumber> a(c_.begin() + (e1 - lo()), c_.end());
    std::vector<PadicNumber> b(o.c_.begin() + (e2 - o.lo()), o.c_.end());
    std::vector<PadicNumber> out;
    kernels::convolve(a, b, out, nhi - (e1 + e2));
    PiSeries prod(p_, e1 + e2, std::move(out));
    return prod.windowed(nlo, nhi);
}

PiSeries PiSeries::scaled(const PadicNumber& c) const {
    PiSeries s = *this;
    for (auto& x : s.c_) x = x * c;
    return s;
}

PiSeries PiSeries::scaled_exact(const mpq_class& q) const {
    PiSeries s = *this;
    for (auto& x : s.c_) x = x.mul_exact(q);
    return s;
}

std::string PiSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    os << "[" << lo() << "," << hi() << ") ";
    for (long d = lo(); d < hi() && shown < max_terms; ++d) {
        if (coeff(d).indistinguishable_from_zero()) continue;
        os << (shown ? " + " : "") << "(" << coeff(d).str() << ")*pi^" << d;
        ++shown;
    }
    if (shown == 0) os << "0";
    return os.str();
}

PiSeries invert(const PiSeries& f, long len) {
    long p = f.prime();
    long l0 = f.lowest_nonzero();
    if (l0 == f.hi()) throw DivisionByIndistinguishableZero("cannot invert zero series");
    for (long d = f.lo(); d < l0; ++d)
        if (!exact_zero(f.coeff(d)))
            throw DivisionByIndistinguishableZero("leading coefficient only zero at finite precision");
    long L = std::min(len, f.hi() - l0);
    if (L <= 0) throw WindowUnderflow("inversion window empty");
    PadicNumber lead = f.coeff(l0);
    std::vector<PadicNumber> g(static_cast<size_t>(L));
    PadicNumber one = PadicNumber::from_integer(p, 1, kBigAbs);
    g[0] = one / lead;
    for (long k = 1; k < L; ++k) {
        PadicNumber s = PadicNumber::zero(p, kBigAbs);
        for (long i = 1; i <= k; ++i) s = s + f.coeff(l0 + i) * g[static_cast<size_t>(k - i)];
        g[static_cast<size_t>(k)] = -(s / lead);
    }
    return PiSeries(p, -l0, std::move(g));
}

PiSeries one_plus_pi_pow_minus_one(long p, long n, long hi) {
    auto pascal_sp = kernels::pascal_cache(n + 1);
    const auto& pascal = *pascal_sp;
    PiSeries s = PiSeries::zero(p, 1, std::max(hi, 2L));
    for (long k = 1; k <= n && k < s.hi(); ++k)
        s.set_coeff(k, PadicNumber::from_integer(p, pascal[static_cast<size_t>(n)][static_cast<size_t>(k)], kBigAbs));
    return s;
}

namespace {

/// Horner composition of the nonnegative-degree part: sum a_k q^k on [0, out_hi).
/// q must be certified on [1, >= out_hi + 1).
PiSeries compose_nonneg(long p, const std::vector<PadicNumber>& a, const PiSeries& q, long out_hi) {
    PiSeries r = PiSeries::zero(p, 0, out_hi);
    for (long k = static_cast<long>(a.size()) - 1; k >= 0; --k) {
        r = (r * q).windowed(0, out_hi);
        r = r + PiSeries::monomial(p, 0, a[static_cast<size_t>(k)], 0, out_hi);
    }
    return r;
}

/// Substitution f(pi) -> f(q); q has lowest degree 1 and is certified on
/// [1, >= out_hi + pole + 2).  Poles compose with the Taylor inverse of q.
PiSeries compose(const PiSeries& f, const PiSeries& q, long out_hi) {
    long p = f.prime();
    long B = f.pole_bound();
    std::vector<PadicNumber> a;
    for (long d = 0; d < std::max(f.hi(), 1L); ++d) a.push_back(f.coeff(d));
    PiSeries result = compose_nonneg(p, a, q, out_hi).windowed(-B, out_hi);
    if (B > 0) {
        long L = out_hi + B + 1;
        PiSeries qinv = invert(q.windowed(1, L + 1), L);
        PiSeries power = qinv;
        for (long k = 1; k <= B; ++k) {
            PadicNumber cm = f.coeff(-k);
            if (!exact_zero(cm)) result = result + power.scaled(cm).windowed(-B, out_hi);
            if (k < B) power = (power * qinv).windowed(-(k + 1), out_hi + 1);
        }
    }
    return result;
}
}  // namespace

PiSeries frobenius(const PiSeries& f, const Context& ctx, long out_hi) {
    if (out_hi <= 0) out_hi = f.hi();
    long p = ctx.p();
    long B = f.pole_bound();
    PiSeries q = one_plus_pi_pow_minus_one(p, p, out_hi + B + 2);
    return compose(f, q, out_hi);
}

PiSeries gamma_pi(const mpq_class& c, const Context& ctx, long hi) {
    long p = ctx.p();
    long abs = ctx.coeff_abs() + kConstPad;
    PiSeries s = PiSeries::zero(p, 1, hi);
    mpq_class binom = c;  // binom(c,1)
    for (long k = 1; k < hi; ++k) {
        s.set_coeff(k, PadicNumber::from_rational(p, binom, abs));
        binom *= c - k;
        binom /= k + 1;
    }
    return s;
}

namespace {
PiSeries gamma_of_pi(const PadicNumber& c, const Context& ctx, long hi) {
    long p = ctx.p();
    PiSeries s = PiSeries::zero(p, 1, hi);
    PadicNumber binom = c;
    for (long k = 1; k < hi; ++k) {
        s.set_coeff(k, binom);
        PadicNumber factor = c - PadicNumber::from_integer(p, k, kBigAbs);
        binom = (binom * factor).mul_exact(mpq_class(1, k + 1));
    }
    return s;
}
}  // namespace

PiSeries gamma_act(const PiSeries& f, const mpq_class& c, const Context& ctx, long out_hi) {
    if (out_hi <= 0) out_hi = f.hi();
    long B = f.pole_bound();
    PiSeries q = gamma_pi(c, ctx, out_hi + B + 2);
    return compose(f, q, out_hi);
}

PiSeries gamma_act(const PiSeries& f, const PadicNumber& c, const Context& ctx, long out_hi) {
    if (out_hi <= 0) out_hi = f.hi();
    long B = f.pole_bound();
    PiSeries q = gamma_of_pi(c, ctx, out_hi + B + 2);
    return compose(f, q, out_hi);
}

PiSeries phi_pi_power(long p, long B, long hi) {
    // ((1+pi)^p - 1)^B = sum_k C(B,k) (-1)^(B-k) (1+pi)^(pk), exact
    auto pascal_sp = kernels::pascal_cache(p * B + 1);
    const auto& pascal = *pascal_sp;
    PiSeries s = PiSeries::zero(p, B, hi);
    for (long m = B; m < std::min(hi, p * B + 1); ++m) {
        mpz_class acc = 0;
        for (long k = 0; k <= B; ++k) {
            if (m > p * k) continue;
            mpz_class term = pascal[static_cast<size_t>(B)][static_cast<size_t>(k)] *
                             pascal[static_cast<size_t>(p * k)][static_cast<size_t>(m)];
            if ((B - k) % 2) term = -term;
            acc += term;
        }
        s.set_coeff(m, PadicNumber::from_integer(p, acc, kBigAbs));
    }
    return s;
}

namespace {
/// Decimation of the nonnegative part: exact on the truncation object.
PiSeries psi_power_part(const PiSeries& f, long p) {
    long W = std::max(f.hi(), 1L);
    std::vector<PadicNumber> a(static_cast<size_t>(W));
    for (long d = 0; d < W; ++d) a[static_cast<size_t>(d)] = f.coeff(d);
    auto pascal_sp = kernels::pascal_cache(W);
    const auto& pascal = *pascal_sp;
    std::vector<PadicNumber> ub;
    kernels::pi_to_u(a, ub, pascal);
    long outW = (W + p - 1) / p;
    std::vector<PadicNumber> dec(static_cast<size_t>(outW), PadicNumber::zero(p, kBigAbs));
    for (long m = 0; m < outW; ++m)
        if (p * m < W) dec[static_cast<size_t>(m)] = ub[static_cast<size_t>(p * m)];
    std::vector<PadicNumber> back;
    kernels::u_to_pi(dec, back, pascal);
    return PiSeries(p, 0, std::move(back));
}
}  // namespace

const PiSeries& Context::psi_pole_basis(long k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = psipole_.find(k);
    if (it != psipole_.end()) return *it->second;
    // psi(phi(pi^k) pi^-k) = pi^k psi(pi^-k); phi(pi)^k / pi^k is an exact
    // polynomial of degree (p-1)k, so the decimation is complete
    PiSeries h = phi_pi_power(p_, k, p_ * k + 1).shifted(-k);
    PiSeries ph = psi_power_part(h, p_);
    PiSeries result = ph.shifted(-k).windowed(-k, 1);
    auto sp = std::make_shared<const PiSeries>(std::move(result));
    auto [pos, inserted] = psipole_.emplace(k, sp);
    return *pos->second;
}

PiSeries psi(const PiSeries& f, const Context& ctx) {
    long p = ctx.p();
    long B = f.pole_bound();
    PiSeries g = f;
    if (B > 0) {
        PiSeries phiB = phi_pi_power(p, B, f.hi() - f.lo() + p * B + 1);
        g = (f * phiB).windowed(0, f.hi() + B);
    } else if (f.lo() > 0) {
        g = f.windowed(0, f.hi());
    }
    return psi_power_part(g, p).shifted(-B);
}

PiSeries psi_object(const PiSeries& f, const Context& ctx) {
    long p = ctx.p();
    long B = f.pole_bound();
    PiSeries out = psi_power_part(f.windowed(0, std::max(f.hi(), 1L)), p);
    long out_hi = std::max(out.hi(), 1L);
    out = out.windowed(-B, out_hi);
    for (long k = 1; k <= B; ++k) {
        PadicNumber cm = f.coeff(-k);
        if (exact_zero(cm)) continue;
        out = out + ctx.psi_pole_basis(k).scaled(cm).windowed(-B, out_hi);
    }
    return out;
}

PiSeries derivative(const PiSeries& f) {
    long p = f.prime();
    long nlo = f.lo() - 1, nhi = f.hi() - 1;
    PiSeries out = PiSeries::zero(p, nlo, nhi);
    for (long d = nlo; d < nhi; ++d) {
        PadicNumber x = f.coeff(d + 1).mul_exact(mpz_class(d + 1)) + f.coeff(d).mul_exact(mpz_class(d));
        out.set_coeff(d, x);
    }
    return out;
}

PiSeries derivative_n(const PiSeries& f, long n) {
    PiSeries g = f;
    for (long i = 0; i < n; ++i) g = derivative(g);
    return g;
}

PiSeries t_series(const Context& ctx, long hi) {
    long p = ctx.p();
    long abs = ctx.coeff_abs() + kConstPad;
    PiSeries t = PiSeries::zero(p, 1, std::max(hi, 2L));
    for (long n = 1; n < t.hi(); ++n) {
        mpq_class c(1, n);
        if (n % 2 == 0) c = -c;
        t.set_coeff(n, PadicNumber::from_rational(p, c, abs - vp_long(n, p)));
    }
    return t;
}

const PiSeries& Context::t_power(long k, long hi) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(k, hi);
    auto it = tcache_.find(key);
    if (it != tcache_.end()) return *it->second;
    PiSeries result;
    if (k == 0) {
        result = PiSeries::monomial(p_, 0, PadicNumber::from_integer(p_, 1, kBigAbs), 0, hi);
    } else if (k > 0) {
        PiSeries t = t_series(*this, hi + 1);
        result = t.windowed(1, hi + 1);
        for (long i = 1; i < k; ++i) result = (result * t).windowed(i + 1, std::max(i + 2, hi));
        result = result.windowed(k, std::max(k + 1, hi));
    } else {
        long j = -k;
        long L = hi + j + 1;
        PiSeries t = t_series(*this, L + 2);
        PiSeries tinv = invert(t.windowed(1, L + 2), L + 1);
        result = tinv;
        for (long i = 1; i < j; ++i) result = (result * tinv).windowed(-(i + 1), std::max(-i, hi));
        result = result.windowed(k, std::max(k + 1, hi));
    }
    auto sp = std::make_shared<const PiSeries>(std::move(result));
    auto [pos, inserted] = tcache_.emplace(key, sp);
    return *pos->second;
}

PiSeries nabla_chain(const PiSeries& f, long h, const Context& ctx) {
    PiSeries g = f;
    for (long k = 0; k < h; ++k) {
        PiSeries dg = derivative(g);
        const PiSeries& t = ctx.t_power(1, dg.hi() - dg.lo() + 2);
        PiSeries tdg = (t * dg).windowed(g.lo(), g.hi() - 1);
        if (k == 0)
            g = tdg;
        else
            g = tdg - g.scaled_exact(mpq_class(k)).windowed(g.lo(), g.hi() - 1);
    }
    return g;
}

PadicNumber residue(const PiSeries& f) {
    long p = f.prime();
    PadicNumber s = PadicNumber::zero(p, kBigAbs);
    for (long i = f.lo(); i <= -1; ++i) {
        PadicNumber term = f.coeff(i);
        if ((-1 - i) % 2) term = -term;
        s = s + term;
    }
    return s;
}

namespace {
/// Pad a term onto [tlo, thi): inside its window copy, below its support exact
/// zero, above its certified top a zero at the supplied valuation bound.
PiSeries pad_to(const PiSeries& term, long p, long tlo, long thi, long bound) {
    PiSeries padded = PiSeries::zero(p, tlo, thi, std::max(1L, bound));
    for (long d = tlo; d < thi; ++d) {
        if (d < term.lo())
            padded.set_coeff(d, PadicNumber::zero(p, kBigAbs));
        else if (d < term.hi())
            padded.set_coeff(d, term.coeff(d));
    }
    return padded;
}
}  // namespace

PiSeries log_principal_series(const PiSeries& g, const Context& ctx, long target_lo, long target_hi) {
    long p = ctx.p();
    PiSeries one = PiSeries::monomial(p, 0, PadicNumber::from_integer(p, 1, kBigAbs), g.lo(), g.hi());
    PiSeries x = g - one;
    if (x.min_val() < 1) throw NotPrincipalUnitSeries();
    // the window bookkeeping below requires single-signed support: coefficients
    // on the other side that are certified zero at finite precision are zeroed
    // out here and accounted for with one global pad at the end
    long side_pad = kBigAbs;
    {
        bool pos_content = false, neg_content = false;
        for (long d = x.lo(); d < x.hi(); ++d) {
            if (d == 0 || x.coeff(d).indistinguishable_from_zero()) continue;
            (d > 0 ? pos_content : neg_content) = true;
        }
        if (pos_content && neg_content)
            throw NotPrincipalUnitSeries("log input must have single-signed support");
        for (long d = x.lo(); d < x.hi(); ++d) {
            if (d == 0 || exact_zero(x.coeff(d))) continue;
            bool wrong_side = pos_content ? d < 0 : (neg_content ? d > 0 : false);
            if (wrong_side) {
                side_pad = std::min(side_pad, x.coeff(d).abs());
                x.set_coeff(d, PadicNumber::zero(p, kBigAbs));
            }
        }
    }
    long cap = ctx.coeff_abs();
    auto tail_bound = [&](long KK) {
        long b = kBigAbs;
        for (long k = KK + 1; k <= 4 * KK + 8; ++k) b = std::min(b, k - vp_long(k, p));
        b = std::min(b, 4 * KK + 8 - static_cast<long>(std::log(static_cast<double>(4 * KK + 8)) / std::log(static_cast<double>(p))) - 1);
        return b;
    };
    long K = cap;
    while (tail_bound(K) < cap) ++K;

    PiSeries sum = PiSeries::zero(p, target_lo, target_hi);
    PiSeries xk = x;
    for (long k = 1; k <= K; ++k) {
        mpq_class c(1, k);
        if (k % 2 == 0) c = -c;
        PiSeries term = xk.scaled_exact(c);
        sum = sum + pad_to(term, p, target_lo, target_hi, k - vp_long(k, p));
        if (k < K) {
            PiSeries nxt = xk * x;
            long nlo = std::max(nxt.lo(), target_lo + std::min(x.lo(), 0L) - 2);
            long nhi = std::min(nxt.hi(), target_hi + 2);
            if (nhi <= nlo) nhi = nlo + 1;
            xk = nxt.windowed(nlo, nhi);
        }
    }
    sum = sum + PiSeries::zero(p, target_lo, target_hi, tail_bound(K));
    if (side_pad < kBigAbs) sum = sum + PiSeries::zero(p, target_lo, target_hi, side_pad);
    return sum;
}

namespace {
/// Inverse anchored at the lowest coefficient of minimal valuation:
/// f = c0 pi^d0 (1 + w).  Supported regimes: w supported in positive degrees
/// (Taylor-style, converges degreewise) or in negative degrees with all
/// valuations >= 1 (annulus-style, converges p-adically).
/// Output certified on [tlo, thi).
PiSeries annulus_invert(const PiSeries& f, const Context& ctx, long tlo, long thi) {
    long p = f.prime();
    long vmin = f.min_val();
    long d0 = f.hi();
    for (long d = f.lo(); d < f.hi(); ++d) {
        if (!f.coeff(d).indistinguishable_from_zero() && f.coeff(d).val() == vmin) {
            d0 = d;
            break;
        }
    }
    if (d0 == f.hi()) throw DivisionByIndistinguishableZero("cannot invert zero series");
    for (long d = f.lo(); d < d0; ++d)
        if (!f.coeff(d).indistinguishable_from_zero() && f.coeff(d).val() <= vmin)
            throw NotPrincipalUnitSeries("no admissible anchor for inversion");
    PadicNumber c0 = f.coeff(d0);
    PadicNumber one = PadicNumber::from_integer(p, 1, kBigAbs);
    PiSeries w = f.scaled(one / c0).shifted(-d0);
    w = w - PiSeries::monomial(p, 0, one, w.lo(), w.hi());
    bool has_pos = false, has_neg = false;
    for (long d = w.lo(); d < w.hi(); ++d) {
        if (exact_zero(w.coeff(d)) || d == 0) continue;
        (d > 0 ? has_pos : has_neg) = true;
    }
    if (has_pos && has_neg) throw NotPrincipalUnitSeries("mixed-support inversion tail not supported");
    long slo = tlo + d0, shi = thi + d0;  // window for sum (-w)^k
    PiSeries sum = pad_to(PiSeries::monomial(p, 0, one, 0, 1), p, slo, shi, kBigAbs);
    if (has_neg) {
        if (w.min_val() < 1) throw NotPrincipalUnitSeries("annulus inversion tail not small");
        long cap = ctx.coeff_abs();
        PiSeries wk = w;
        for (long k = 1; k <= cap; ++k) {
            PiSeries term = (k % 2) ? -wk : wk;
            sum = sum + pad_to(term, p, slo, shi, k);
            if (k < cap) {
                PiSeries nxt = wk * w;
                long nlo = std::max(nxt.lo(), slo + std::min(w.lo(), 0L) - 2);
                long nhi = std::min(nxt.hi(), shi + std::max(w.hi(), 0L) + 2);
                if (nhi <= nlo) nhi = nlo + 1;
                wk = nxt.windowed(nlo, nhi);
            }
        }
        sum = sum + PiSeries::zero(p, slo, shi, cap + 1);
    } else if (has_pos) {
        if (w.hi() < shi) throw WindowUnderflow("inversion input window too short for requested target");
        PiSeries wk = w;
        for (long k = 1; k < std::max(shi, 2L); ++k) {
            PiSeries term = (k % 2) ? -wk : wk;
            sum = sum + pad_to(term, p, slo, shi, kBigAbs);
            if (k + 1 < shi) wk = (wk * w).windowed(k + 1, std::max(k + 2, std::min(wk.hi() + w.hi(), shi + 2)));
        }
    }
    return sum.scaled(one / c0).shifted(-d0);
}
}  // namespace

PiSeries ell(const PiSeries& g, const Context& ctx, long target_lo, long target_hi) {
    long p = ctx.p();
    // internal window deep enough that discarded pole content sits below the
    // working precision (the coefficient at depth j carries valuation >= j/(p-1))
    long depth = (p - 1) * (ctx.coeff_abs() + 6);
    long ilo = std::min(target_lo, -depth);
    long ihi = target_hi + 2;
    if (g.hi() < ihi) throw WindowUnderflow("ell input window too short for requested target");

    PiSeries gp = g;
    long gp_cap = ihi - ilo + p + 2;  // deep inverses eat window from the top
    for (long i = 1; i < p; ++i) {
        gp = gp * g;
        if (gp.hi() > gp_cap) gp = gp.windowed(gp.lo(), gp_cap);
    }
    PiSeries phig = frobenius(g, ctx, ihi + p);
    PiSeries phig_inv = annulus_invert(phig, ctx, ilo - gp.lo(), ihi - gp.lo() + 1);
    PiSeries ratio = gp * phig_inv;
    if (ratio.lo() > ilo || ratio.hi() < ihi)
        throw WindowUnderflow("ell input window too short for requested target (widen g)");
    ratio = ratio.windowed(ilo, ihi);
    PiSeries lg = log_principal_series(ratio, ctx, ratio.lo(), ratio.hi());
    PiSeries out = lg.scaled_exact(mpq_class(1, p));
    return out.windowed(std::max(target_lo, out.lo()), std::min(target_hi, out.hi()));
}

AgreementReport agreement(const PiSeries& f, const PiSeries& g) { return zero_certificate(f - g); }

AgreementReport zero_certificate(const PiSeries& f) {
    AgreementReport r{true, kBigAbs, kBigAbs, 0};
    for (long d = f.lo(); d < f.hi(); ++d) {
        const PadicNumber x = f.coeff(d);
        if (x.indistinguishable_from_zero()) {
            r.certified_abs = std::min(r.certified_abs, x.abs());
        } else {
            r.agree = false;
            if (x.val() < r.worst_val) {
                r.worst_val = x.val();
                r.worst_degree = d;
            }
        }
    }
    return r;
}

}  // namespace pws
