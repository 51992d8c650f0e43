#include "pws/cyclotomic.hpp"

#include <sstream>

#include "pws/matrix.hpp"

namespace pws {

namespace {
long pow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long cyclo_degree(long p, long level) { return level == 0 ? 1 : (p - 1) * pow_long(p, level - 1); }
}  // namespace

CyclotomicElement::CyclotomicElement(long p, long level, std::vector<PadicNumber> coeffs)
    : p_(p), level_(level), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != cyclo_degree(p, level)) throw Error("cyclotomic coefficient length mismatch");
}

CyclotomicElement CyclotomicElement::zero(long p, long level, long abs) {
    return CyclotomicElement(p, level,
                             std::vector<PadicNumber>(static_cast<size_t>(cyclo_degree(p, level)), PadicNumber::zero(p, abs)));
}

CyclotomicElement CyclotomicElement::scalar(long p, long level, const PadicNumber& c) {
    CyclotomicElement r = zero(p, level);
    r.c_[0] = c;
    return r;
}

CyclotomicElement CyclotomicElement::root_power(long p, long level, long k) {
    if (level == 0) return scalar(p, 0, PadicNumber::from_integer(p, 1, kBigAbs));
    long pn = pow_long(p, level);
    long deg = cyclo_degree(p, level);
    long q = pow_long(p, level - 1);
    k = ((k % pn) + pn) % pn;
    CyclotomicElement r = zero(p, level);
    if (k < deg) {
        r.c_[static_cast<size_t>(k)] = PadicNumber::from_integer(p, 1, kBigAbs);
    } else {
        // x^k = x^r * x^deg = -x^r (1 + x^q + ... + x^{(p-2)q}), r = k - deg < q
        long rr = k - deg;
        for (long i = 0; i <= p - 2; ++i)
            r.c_[static_cast<size_t>(rr + i * q)] = PadicNumber::from_integer(p, -1, kBigAbs);
    }
    return r;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
    CyclotomicElement r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
    CyclotomicElement r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
    return r;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
    long deg = degree();
    long q = level_ == 0 ? 1 : pow_long(p_, level_ - 1);
    std::vector<PadicNumber> raw(static_cast<size_t>(2 * deg - 1), PadicNumber::zero(p_, kBigAbs));
    for (long i = 0; i < deg; ++i) {
        if (c_[static_cast<size_t>(i)].indistinguishable_from_zero() && c_[static_cast<size_t>(i)].abs() >= kBigAbs / 2)
            continue;
        for (long j = 0; j < deg; ++j)
            raw[static_cast<size_t>(i + j)] = raw[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    if (level_ == 0) {
        raw.resize(1);
        return CyclotomicElement(p_, 0, std::move(raw));
    }
    // reduce top-down with x^deg = -(x^0 + x^q + ... + x^{(p-2)q}): every
    // replacement exponent d - deg + iq <= d - q sits strictly below d, so a
    // single descending sweep terminates
    for (long d = 2 * deg - 2; d >= deg; --d) {
        PadicNumber x = raw[static_cast<size_t>(d)];
        if (x.indistinguishable_from_zero() && x.abs() >= kBigAbs / 2) continue;
        for (long i = 0; i <= p_ - 2; ++i) {
            long e = d - deg + i * q;
            raw[static_cast<size_t>(e)] = raw[static_cast<size_t>(e)] - x;
        }
        raw[static_cast<size_t>(d)] = PadicNumber::zero(p_, kBigAbs);
    }
    raw.resize(static_cast<size_t>(deg));
    return CyclotomicElement(p_, level_, std::move(raw));
}

CyclotomicElement CyclotomicElement::scaled(const PadicNumber& c) const {
    CyclotomicElement r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

bool CyclotomicElement::indistinguishable_from_zero() const {
    for (const auto& x : c_)
        if (!x.indistinguishable_from_zero()) return false;
    return true;
}

long CyclotomicElement::min_abs() const {
    long a = kBigAbs;
    for (const auto& x : c_) a = std::min(a, x.abs());
    return a;
}

CyclotomicElement CyclotomicElement::embedded_up() const {
    long nl = level_ + 1;
    CyclotomicElement r = zero(p_, nl);
    for (long i = 0; i < degree(); ++i) {
        if (c_[static_cast<size_t>(i)].indistinguishable_from_zero() && c_[static_cast<size_t>(i)].abs() >= kBigAbs / 2)
            continue;
        CyclotomicElement term = root_power(p_, nl, p_ * i).scaled(c_[static_cast<size_t>(i)]);
        r = r + term;
    }
    return r;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < degree(); ++i) os << (i ? ", " : "") << c_[static_cast<size_t>(i)].str();
    os << "]";
    return os.str();
}

CyclotomicElement cyclotomic_eval(const PiSeries& f, long level, const Context& ctx, long target_abs,
                                  long tail_min_val) {
    long p = ctx.p();
    if (level == 0) return CyclotomicElement::scalar(p, 0, f.at_zero());
    long E = cyclo_degree(p, level);
    // certificate for the discarded tail sum_{d>=hi} f_d (zeta-1)^d:
    // lambda^E = p*unit, so the tail lies in p^(tail_min_val + floor(hi/E)) Z_p[lambda]
    long tail_abs = tail_min_val >= kBigAbs ? kBigAbs : tail_min_val + f.hi() / E;
    if (tail_abs < target_abs) throw InsufficientTruncation();

    CyclotomicElement lambda = CyclotomicElement::root_power(p, level, 1) -
                               CyclotomicElement::scalar(p, level, PadicNumber::from_integer(p, 1, kBigAbs));
    // Horner over the nonnegative part
    CyclotomicElement r = CyclotomicElement::zero(p, level);
    for (long d = f.hi() - 1; d >= 0; --d) {
        r = r * lambda;
        r = r + CyclotomicElement::scalar(p, level, f.coeff(d));
    }
    if (f.lo() < 0) {
        // pole part: multiply f by lambda^B via evaluation, i.e. evaluate
        // coefficients at negative degrees against the inverse of lambda
        long deg = E;
        // invert lambda by solving (multiplication matrix) x = 1
        PadicMatrix mult(deg, deg, p, kBigAbs);
        for (long j = 0; j < deg; ++j) {
            CyclotomicElement col = CyclotomicElement::root_power(p, level, j) * lambda;
            for (long i = 0; i < deg; ++i) mult.at(i, j) = col.coeff(i);
        }
        std::vector<PadicNumber> e1(static_cast<size_t>(deg), PadicNumber::zero(p, kBigAbs));
        e1[0] = PadicNumber::from_integer(p, 1, kBigAbs);
        std::vector<PadicNumber> inv = solve(mult, e1);
        CyclotomicElement linv(p, level, inv);
        CyclotomicElement pw = linv;
        for (long k = 1; k <= -f.lo(); ++k) {
            PadicNumber cm = f.coeff(-k);
            if (!(cm.indistinguishable_from_zero() && cm.abs() >= kBigAbs / 2)) r = r + pw.scaled(cm);
            if (k < -f.lo()) pw = pw * linv;
        }
    }
    // cap the certificate by the tail bound
    if (tail_abs < kBigAbs) {
        CyclotomicElement capped = CyclotomicElement::zero(p, level, tail_abs);
        r = r + capped;
    }
    return r;
}

}  // namespace pws
