#include "pws/padic.hpp"

#include <algorithm>
#include <sstream>

namespace pws {

mpz_class pow_p(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

PadicNumber PadicNumber::zero(long p, long abs) {
    PadicNumber z;
    z.p_ = p;
    z.val_ = abs;
    z.abs_ = abs;
    z.zero_ = true;
    return z;
}

PadicNumber::PadicNumber(long p, long val, long abs, mpz_class unit)
    : p_(p), val_(val), abs_(abs), zero_(false), unit_(std::move(unit)) {}

// residue is the value scaled so that it is integral: value = residue * p^val0
// with val0 implicit in the caller; here residue is the integer value itself
// and val the valuation already extracted from it is zero.  make() extracts
// the p-part of `residue` and reduces: value = residue * p^val, known mod p^abs.
PadicNumber PadicNumber::make(long p, long val, long abs, mpz_class residue) {
    if (val >= abs) return zero(p, abs);
    mpz_class mod = pow_p(p, abs - val);
    mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), mod.get_mpz_t());
    if (residue == 0) return zero(p, abs);
    mpz_class pz(p), unit;
    long v = static_cast<long>(mpz_remove(unit.get_mpz_t(), residue.get_mpz_t(), pz.get_mpz_t()));
    val += v;
    if (val >= abs) return zero(p, abs);
    mod = pow_p(p, abs - val);
    mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    if (unit == 0) return zero(p, abs);
    return PadicNumber(p, val, abs, unit);
}

PadicNumber PadicNumber::from_integer(long p, const mpz_class& n, long abs) {
    return make(p, 0, abs, n);
}

PadicNumber PadicNumber::from_rational(long p, const mpq_class& q, long abs) {
    if (q == 0) return zero(p, abs);
    mpz_class pz(p), num, den;
    long v = static_cast<long>(mpz_remove(num.get_mpz_t(), mpq_class(q).get_num().get_mpz_t(), pz.get_mpz_t()));
    v -= static_cast<long>(mpz_remove(den.get_mpz_t(), mpq_class(q).get_den().get_mpz_t(), pz.get_mpz_t()));
    if (v >= abs) return zero(p, abs);
    mpz_class mod = pow_p(p, abs - v);
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error("internal: denominator not invertible mod p^k");
    mpz_class u = num * dinv;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    if (u == 0) return zero(p, abs);
    return PadicNumber(p, v, abs, u);
}

PadicNumber PadicNumber::from_rational_rel(long p, const mpq_class& q, long rel) {
    if (q == 0) return zero(p, rel);
    PadicNumber probe = from_rational(p, q, kBigAbs);
    return from_rational(p, q, probe.val() + rel);
}

PadicNumber PadicNumber::truncated(long a) const {
    if (a >= abs_) return *this;
    if (zero_) return zero(p_, a);
    if (val_ >= a) return zero(p_, a);
    mpz_class u = unit_;
    mpz_class mod = pow_p(p_, a - val_);
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    if (u == 0) return zero(p_, a);
    return PadicNumber(p_, val_, a, u);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    mpz_class mod = pow_p(p_, abs_ - val_);
    mpz_class u = mod - unit_;
    return PadicNumber(p_, val_, abs_, u);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (zero_ && o.zero_) return zero(p_ ? p_ : o.p_, std::min(abs_, o.abs_));
    if (zero_) return o.truncated(std::min(abs_, o.abs_));
    if (o.zero_) return truncated(std::min(abs_, o.abs_));
    long a = std::min(abs_, o.abs_);
    long v0 = std::min(val_, o.val_);
    // representatives scaled by p^-v0 are integers
    mpz_class x = unit_ * pow_p(p_, val_ - v0);
    mpz_class y = o.unit_ * pow_p(p_, o.val_ - v0);
    return make(p_, v0, a, x + y);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    long p = p_ ? p_ : o.p_;
    if (zero_ || o.zero_) {
        // v(xy) >= val(x) + val(y); for zeros val() is the abs lower bound
        return zero(p, val() + o.val());
    }
    long v = val_ + o.val_;
    long rel_ = std::min(abs_ - val_, o.abs_ - o.val_);
    mpz_class u = unit_ * o.unit_;
    mpz_class mod = pow_p(p, rel_);
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(p, v, v + rel_, u);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
    if (o.zero_) throw DivisionByIndistinguishableZero();
    if (zero_) return zero(p_ ? p_ : o.p_, abs_ - o.val_);
    long v = val_ - o.val_;
    long rel_ = std::min(abs_ - val_, o.abs_ - o.val_);
    mpz_class mod = pow_p(p_, rel_);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), o.unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error("internal: unit not invertible");
    mpz_class u = unit_ * inv;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(p_, v, v + rel_, u);
}

PadicNumber PadicNumber::mul_exact(const mpz_class& n) const {
    if (n == 0) return zero(p_, abs_ + 256);  // exact zero; any finite precision claim holds
    mpz_class pz(p_), m;
    long v = static_cast<long>(mpz_remove(m.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
    if (zero_) return zero(p_, abs_ + v);
    mpz_class mod = pow_p(p_, abs_ - val_);
    mpz_class u = unit_ * m;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(p_, val_ + v, abs_ + v, u);
}

PadicNumber PadicNumber::mul_exact(const mpq_class& q) const {
    if (q == 0) return mul_exact(mpz_class(0));
    PadicNumber r = mul_exact(mpz_class(q.get_num()));
    // divide by the denominator exactly
    mpz_class pz(p_), den;
    long v = -static_cast<long>(mpz_remove(den.get_mpz_t(), mpq_class(q).get_den().get_mpz_t(), pz.get_mpz_t()));
    if (r.zero_) return zero(p_, r.abs_ + v);
    mpz_class mod = pow_p(p_, r.abs_ - r.val_);
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class u = r.unit_ * dinv;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(p_, r.val_ + v, r.abs_ + v, u);
}

PadicNumber PadicNumber::shift(long k) const {
    if (zero_) return zero(p_, abs_ + k);
    return PadicNumber(p_, val_ + k, abs_ + k, unit_);
}

PadicNumber PadicNumber::pow(long k) const {
    if (k == 0) return from_integer(p_, 1, zero_ ? abs_ : abs_ - val_);
    if (k < 0) {
        if (zero_) throw DivisionByIndistinguishableZero("cannot invert an indistinguishable zero");
        PadicNumber one = from_integer(p_, 1, abs_ - val_);
        return (one / *this).pow(-k);
    }
    long e = k;
    PadicNumber base = *this, result;
    bool set = false;
    while (e > 0) {
        if (e & 1) {
            result = set ? result * base : base;
            set = true;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

mpq_class PadicNumber::representative() const {
    if (zero_) return mpq_class(0);
    mpq_class r(unit_);
    if (val_ >= 0) {
        r *= pow_p(p_, val_);
    } else {
        r /= pow_p(p_, -val_);
    }
    return r;
}

mpz_class PadicNumber::integer_representative() const {
    if (zero_) return mpz_class(0);
    if (val_ < 0) throw Error("integer representative of a value with negative valuation");
    return unit_ * pow_p(p_, val_);
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << abs_ << ")";
        return os.str();
    }
    os << p_ << "^" << val_ << "*(";
    // digits of unit, base p, most significant first
    mpz_class u = unit_;
    std::string digits;
    long n = abs_ - val_;
    mpz_class q, r, pz(p_);
    for (long i = 0; i < n; ++i) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
        long d = r.get_si();
        if (p_ <= 10)
            digits += static_cast<char>('0' + d);
        else {
            digits = (i ? "." : "") + std::to_string(d) + digits;
        }
        u = q;
    }
    if (p_ <= 10) std::reverse(digits.begin(), digits.end());
    os << digits << ")+O(" << p_ << "^" << abs_ << ")";
    return os.str();
}

PadicNumber log_unit(const PadicNumber& a) {
    long p = a.prime();
    if (p == 2) throw NotPrincipalUnit("p must be odd");
    PadicNumber one = PadicNumber::from_integer(p, 1, a.abs());
    PadicNumber x = a - one;  // val >= 1 required
    if (x.indistinguishable_from_zero()) return PadicNumber::zero(p, a.abs());
    if (x.val() < 1) throw NotPrincipalUnit();
    // log(1+x) = sum (-1)^(k+1) x^k / k; terms eventually fall below abs(a)
    PadicNumber sum = PadicNumber::zero(p, a.abs());
    PadicNumber xpow = x;
    long k = 1;
    while (true) {
        // term = (-1)^(k+1) x^k / k
        mpq_class c = (k % 2 == 0) ? mpq_class(-1, k) : mpq_class(1, k);
        PadicNumber term = xpow.mul_exact(c);
        if (term.val() >= sum.abs() && k > 1) break;
        sum = sum + term;
        ++k;
        xpow = xpow * x;
        if (xpow.indistinguishable_from_zero() && xpow.val() >= sum.abs() + 4) break;
        if (k > 4 * (a.abs() + 4)) break;  // safety cap; series terms strictly gain valuation
    }
    return sum;
}

}  // namespace pws
