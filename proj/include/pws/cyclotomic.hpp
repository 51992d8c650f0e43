#pragma once

#include <vector>

#include "pws/series.hpp"

namespace pws {

/// Residue representative in Q_p[x]/Phi_{p^n}(x), x |-> zeta_{p^n}.
/// Degree phi(p^n) = (p-1) p^(n-1); reduction uses x^{p^n} = 1 and
/// Phi_{p^n}(x) = sum_i x^{i p^(n-1)} = 0.
class CyclotomicElement {
public:
    CyclotomicElement() : p_(0), level_(0) {}
    CyclotomicElement(long p, long level, std::vector<PadicNumber> coeffs);
    static CyclotomicElement zero(long p, long level, long abs = kBigAbs);
    static CyclotomicElement scalar(long p, long level, const PadicNumber& c);
    /// x^k as a ring element (k taken mod p^n).
    static CyclotomicElement root_power(long p, long level, long k);

    long prime() const { return p_; }
    long level() const { return level_; }
    long degree() const { return static_cast<long>(c_.size()); }
    const PadicNumber& coeff(long i) const { return c_[static_cast<size_t>(i)]; }

    CyclotomicElement operator+(const CyclotomicElement& o) const;
    CyclotomicElement operator-(const CyclotomicElement& o) const;
    CyclotomicElement operator*(const CyclotomicElement& o) const;
    CyclotomicElement scaled(const PadicNumber& c) const;

    bool indistinguishable_from_zero() const;
    long min_abs() const;

    /// Embed into level n+1 via x |-> x^p (zeta_{p^(n+1)}^p = zeta_{p^n}).
    CyclotomicElement embedded_up() const;

    std::string str() const;

private:
    long p_, level_;
    std::vector<PadicNumber> c_;  // length (p-1) p^(level-1)
};

/// Evaluation f(zeta_{p^n} - 1) at level n >= 1; level 0 returns f(0) in the
/// scalar slot.  The window tail is accounted against an explicit lower bound
/// for min_{d >= hi} (val f_d + d * e) where e = 1/((p-1)p^(n-1)) is the
/// valuation of zeta_{p^n} - 1; pass tail_min_val = kBigAbs for exact
/// polynomial objects.  Throws InsufficientTruncation if the resulting
/// certificate falls below target_abs.
CyclotomicElement cyclotomic_eval(const PiSeries& f, long level, const Context& ctx,
                                  long target_abs, long tail_min_val = kBigAbs);

}  // namespace pws
