#pragma once

#include <gmpxx.h>

#include <string>

#include "pws/errors.hpp"

namespace pws {

/// Absolute precision used for exact content (integers, window padding).
/// Far above any certified claim the workbench ever makes, yet small enough
/// that reductions mod p^kBigAbs stay cheap.
constexpr long kBigAbs = 512;

/// Element of Q_p carried with its absolute precision: the value is known
/// modulo p^abs.  Nonzero values are stored as p^val * unit with the unit kept
/// modulo p^(abs-val); a value whose known digits are all zero collapses to a
/// certified zero O(p^abs).
///
/// Arithmetic never reports more precision than the inputs justify:
///   abs(x+y) = min(abs x, abs y)
///   abs(x*y) = min(val x + abs y, val y + abs x)
class PadicNumber {
public:
    PadicNumber() : p_(0), val_(0), abs_(0), zero_(true) {}

    static PadicNumber zero(long p, long abs);
    /// Value n, known modulo p^abs.
    static PadicNumber from_integer(long p, const mpz_class& n, long abs);
    /// Value num/den (den prime to... any rational; p-part extracted), known modulo p^abs.
    static PadicNumber from_rational(long p, const mpq_class& q, long abs);
    /// Same, with precision given relative to the valuation of q.
    static PadicNumber from_rational_rel(long p, const mpq_class& q, long rel);

    long prime() const { return p_; }
    /// Valuation; for a certified zero this is a lower bound (= abs).
    long val() const { return zero_ ? abs_ : val_; }
    long abs() const { return abs_; }
    /// Number of certified significant digits (abs - val); 0 for zero.
    long rel() const { return zero_ ? 0 : abs_ - val_; }
    bool indistinguishable_from_zero() const { return zero_; }
    bool is_unit() const { return !zero_ && val_ == 0; }
    const mpz_class& unit() const { return unit_; }

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;

    /// Multiply by an exact integer (no precision cost beyond the valuation shift).
    PadicNumber mul_exact(const mpz_class& n) const;
    PadicNumber mul_exact(const mpq_class& q) const;
    /// Multiply by p^k (exact shift of both val and abs).
    PadicNumber shift(long k) const;
    /// Integer power; negative exponents require a value distinguishable from zero.
    PadicNumber pow(long k) const;

    /// Cap the absolute precision at a (no-op if already coarser).
    PadicNumber truncated(long a) const;

    /// x agrees with y when x - y is indistinguishable from zero.
    bool agrees_with(const PadicNumber& o) const { return (*this - o).indistinguishable_from_zero(); }

    /// Representative p^val * unit as an exact rational.
    mpq_class representative() const;
    /// Integer representative; requires val >= 0 (zero gives 0).
    mpz_class integer_representative() const;

    /// Printed as p^v*(digits base p, most significant first) + O(p^abs).
    std::string str() const;

private:
    PadicNumber(long p, long val, long abs, mpz_class unit);
    static PadicNumber make(long p, long val, long abs, mpz_class residue_times_pval);

    long p_;
    long val_;
    long abs_;
    bool zero_;
    mpz_class unit_;
};

/// p^k as mpz.
mpz_class pow_p(long p, long k);

/// log of a principal unit (a = 1 mod p, p odd), by the usual series; the
/// result keeps the input's absolute precision and val(log a) = val(a-1).
PadicNumber log_unit(const PadicNumber& a);

}  // namespace pws
