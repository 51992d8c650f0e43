#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pws/kernels.hpp"
#include "pws/padic.hpp"

namespace pws {

/// Shared working configuration: the prime, the target digit precision M, a
/// guard margin for intermediate losses, and the fixed topological generator
/// value chi = chi(gamma_1) (default 1+p), kept exact as a rational.
class Context {
public:
    Context(long p, long M, long guard = 12)
        : p_(p), M_(M), guard_(guard), chi_(p + 1) {}
    Context(long p, long M, long guard, mpq_class chi)
        : p_(p), M_(M), guard_(guard), chi_(std::move(chi)) {}

    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    long p() const { return p_; }
    long M() const { return M_; }
    long guard() const { return guard_; }
    /// Absolute precision used when materializing exact constants.
    long coeff_abs() const { return M_ + guard_; }
    const mpq_class& chi() const { return chi_; }
    PadicNumber chi_padic() const { return PadicNumber::from_rational(p_, chi_, coeff_abs()); }
    PadicNumber log_chi() const;

    /// t^k on [k, hi) for k >= 0 resp. [k, hi) for k < 0; cached per (k, hi)
    /// since every module keeps asking for these.  Thread-safe.
    const class PiSeries& t_power(long k, long hi) const;

    /// psi(pi^-k), k >= 1: an exact Laurent polynomial on [-k, -ceil(k/p)+1],
    /// obtained by decimating phi(pi)^k / pi^k.  Cached per k.
    const class PiSeries& psi_pole_basis(long k) const;

private:
    long p_, M_, guard_;
    mpq_class chi_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, std::shared_ptr<const class PiSeries>> tcache_;
    mutable std::map<long, std::shared_ptr<const class PiSeries>> psipole_;
};

/// Truncated Laurent series sum a_d pi^d with certified window [lo, hi).
/// Semantics are those of the truncation quotient: the object is exactly its
/// window content (coefficients outside the window are exact zeros), and all
/// precision loss incurred by discarding content is recorded by capping the
/// absolute precision of the window coefficients.  Ring operations compute
/// exactly those window coefficients of the result that are determined by the
/// inputs' windows: for products [lo1+lo2, min(hi1+lo2, hi2+lo1)).
class PiSeries {
public:
    PiSeries() : p_(0), lo_(0) {}
    PiSeries(long p, long lo, std::vector<PadicNumber> coeffs) : p_(p), lo_(lo), c_(std::move(coeffs)) {}

    static PiSeries zero(long p, long lo, long hi, long abs = kBigAbs);
    /// c * pi^deg on the window [lo, hi).
    static PiSeries monomial(long p, long deg, const PadicNumber& c, long lo, long hi);

    long prime() const { return p_; }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()); }
    bool empty() const { return c_.empty(); }
    bool has(long d) const { return d >= lo() && d < hi(); }
    /// Window coefficient; exact zero outside the window (object semantics).
    PadicNumber coeff(long d) const;
    void set_coeff(long d, const PadicNumber& x);

    long pole_bound() const { return lo_ < 0 ? -lo_ : 0; }
    /// Lowest degree with a coefficient distinguishable from zero (hi() if none).
    long lowest_nonzero() const;
    /// Lowest degree whose coefficient is not an exact zero (hi() if none).
    long effective_lo() const;
    bool indistinguishable_from_zero() const;
    /// Min over window of coeff.abs() (precision of the zero claim).
    long min_abs() const;
    /// Min valuation over the window.
    long min_val() const;
    /// True if every window coefficient has val >= 0.
    bool integral() const;

    /// Restrict or extend the window ([lo, hi)); extension pads exact zeros.
    PiSeries windowed(long lo, long hi) const;
    PiSeries shifted(long k) const;  // multiply by pi^k
    /// Cap every coefficient's absolute precision at a.
    PiSeries capped_abs(long a) const;

    PiSeries operator-() const;
    PiSeries operator+(const PiSeries& o) const;
    PiSeries operator-(const PiSeries& o) const;
    PiSeries operator*(const PiSeries& o) const;
    PiSeries scaled(const PadicNumber& c) const;
    PiSeries scaled_exact(const mpq_class& q) const;

    /// Value at pi = 0 (the degree-0 coefficient).
    PadicNumber at_zero() const { return coeff(0); }

    std::string str(long max_terms = 14) const;

private:
    long p_;
    long lo_;
    std::vector<PadicNumber> c_;
};

/// 1/f; the lowest window coefficient of f must be distinguishable from zero.
/// The certified window keeps the input's length: [-lo(f), -lo(f)+len).
PiSeries invert(const PiSeries& f, long len);

/// Exact polynomial (1+pi)^n - 1 (n >= 1) as a series on [1, hi).
PiSeries one_plus_pi_pow_minus_one(long p, long n, long hi);

/// Exact polynomial ((1+pi)^p - 1)^B = phi(pi^B) on [B, hi).
PiSeries phi_pi_power(long p, long B, long hi);

/// phi: f(pi) |-> f((1+pi)^p - 1), certified on [lo(f), out_hi).
/// out_hi = 0 means "preserve the input window".
PiSeries frobenius(const PiSeries& f, const Context& ctx, long out_hi = 0);

/// (1+pi)^c - 1 for an exact rational unit c, certified on [1, hi).
PiSeries gamma_pi(const mpq_class& c, const Context& ctx, long hi);

/// gamma_c: f(pi) |-> f((1+pi)^c - 1) for an exact rational unit c.
PiSeries gamma_act(const PiSeries& f, const mpq_class& c, const Context& ctx, long out_hi = 0);
/// Same for a capped-precision c; binomial coefficients lose v_p(k!) digits,
/// which the coefficient arithmetic tracks.
PiSeries gamma_act(const PiSeries& f, const PadicNumber& c, const Context& ctx, long out_hi = 0);

/// psi, the canonical left inverse of phi, by exact u-monomial decimation;
/// poles are cleared first through the projection formula
/// psi(phi(pi^B) f) = pi^B psi(f).  This is the right operator on truncations
/// of phi-images (the multiplication cancels their hidden tails), with output
/// window containing the contract [lo, floor((hi - p*pole)/p)).
PiSeries psi(const PiSeries& f, const Context& ctx);

/// Exact psi of the window content taken as a Laurent polynomial: decimation
/// of the nonnegative part plus the exact psi(pi^-k) pole basis.  Use for
/// explicitly constructed Laurent objects (the psi-annihilation and psi-fixed
/// certificates); output window [-pole, ceil(hi/p)).
PiSeries psi_object(const PiSeries& f, const Context& ctx);

/// d = (1+pi) d/dpi, exact; window [lo-1, hi-1).
PiSeries derivative(const PiSeries& f);
PiSeries derivative_n(const PiSeries& f, long n);

/// t = log(1+pi) on [1, hi).
PiSeries t_series(const Context& ctx, long hi);

/// nabla_{h-1} o ... o nabla_0 with nabla_k = t*d - k.
PiSeries nabla_chain(const PiSeries& f, long h, const Context& ctx);

/// res(f dt) = coefficient of pi^-1 in f/(1+pi).
PadicNumber residue(const PiSeries& f);

/// log g for g = 1 + x, all coefficients of x of valuation >= 1.  Terms whose
/// window has decayed are accounted for by abs-capping at the term valuation
/// bound, so the output on [target_lo, target_hi) is honestly certified.
PiSeries log_principal_series(const PiSeries& g, const Context& ctx, long target_lo, long target_hi);

/// ell(g) = (1/p) log(g^p / phi(g)).
PiSeries ell(const PiSeries& g, const Context& ctx, long target_lo, long target_hi);

/// Agreement certificate: all common-window coefficients of f-g indistinguishable
/// from zero.
struct AgreementReport {
    bool agree;
    long certified_abs;  // difference == 0 mod p^certified_abs coefficientwise
    long worst_val;      // if !agree: valuation of the worst offending coefficient
    long worst_degree;
};
AgreementReport agreement(const PiSeries& f, const PiSeries& g);
AgreementReport zero_certificate(const PiSeries& f);

}  // namespace pws
