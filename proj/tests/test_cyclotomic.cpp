#include "doctest.h"
#include "pws/cyclotomic.hpp"

using namespace pws;

TEST_CASE("ring relations at levels 1 and 2") {
    for (long p : {3L, 5L}) {
        // Phi_p(x) = 1 + x + ... + x^(p-1) reduces to 0
        CyclotomicElement s = CyclotomicElement::zero(p, 1);
        for (long k = 0; k < p; ++k) s = s + CyclotomicElement::root_power(p, 1, k);
        CHECK(s.indistinguishable_from_zero());
        // x^p = 1
        CyclotomicElement xp = CyclotomicElement::root_power(p, 1, 1);
        CyclotomicElement acc = xp;
        for (long k = 1; k < p; ++k) acc = acc * xp;
        CHECK((acc - CyclotomicElement::root_power(p, 1, 0)).indistinguishable_from_zero());
        // level 2: (x^{p^2} - 1)/(x^p - 1) = sum_i x^{ip} = 0
        CyclotomicElement s2 = CyclotomicElement::zero(p, 2);
        for (long i = 0; i < p; ++i) s2 = s2 + CyclotomicElement::root_power(p, 2, i * p);
        CHECK(s2.indistinguishable_from_zero());
    }
}

TEST_CASE("evaluation of exact polynomials") {
    Context ctx(3, 20);
    // f = 1 + pi evaluates at zeta_p - 1 to zeta_p (the element x)
    PiSeries f = PiSeries::monomial(3, 0, PadicNumber::from_integer(3, 1, kBigAbs), 0, 8) +
                 PiSeries::monomial(3, 1, PadicNumber::from_integer(3, 1, kBigAbs), 0, 8);
    CyclotomicElement v = cyclotomic_eval(f, 1, ctx, 15);
    CHECK((v - CyclotomicElement::root_power(3, 1, 1)).indistinguishable_from_zero());

    // Phi_p(1+pi) = ((1+pi)^p - 1)/pi evaluated at pi = zeta_p - 1 is 0
    PiSeries q = one_plus_pi_pow_minus_one(3, 3, 8).shifted(-1);
    CyclotomicElement z = cyclotomic_eval(q, 1, ctx, 15);
    CHECK(z.indistinguishable_from_zero());
}

TEST_CASE("t evaluates to log(zeta_p) = 0") {
    // oracle: direct series summation in Q_p(zeta_p); zeta_p is a torsion unit
    // so log(zeta_p) = 0.  Tail bound: t's coefficient at degree d has
    // val >= -log_p(d), and floor(d/E) soon dominates.
    Context ctx(3, 10, 6);
    long hi = 40;
    PiSeries t = t_series(ctx, hi).windowed(0, hi);
    // coefficients' valuation at degree >= hi is >= -v_p bound; use -6 (3^6 > 4*hi)
    CyclotomicElement v = cyclotomic_eval(t, 1, ctx, 8, -6);
    CHECK(v.indistinguishable_from_zero());
    CHECK(v.min_abs() >= 8);
}

TEST_CASE("level compatibility: phi then eval at level n equals eval at level n-1") {
    for (long p : {3L, 5L}) {
        Context ctx(p, 14);
        PiSeries f = PiSeries::zero(p, 0, 12);
        f.set_coeff(0, PadicNumber::from_integer(p, 2, 14));
        f.set_coeff(1, PadicNumber::from_integer(p, 7, 14));
        f.set_coeff(3, PadicNumber::from_integer(p, 1, 14));
        // phi(f)(zeta_p - 1) = f(zeta_p^p - 1) = f(0)
        PiSeries ph = frobenius(f, ctx, 3 * 12);
        CyclotomicElement lhs = cyclotomic_eval(ph, 1, ctx, 10);
        CHECK((lhs - CyclotomicElement::scalar(p, 1, f.at_zero())).indistinguishable_from_zero());
        // phi(f)(zeta_{p^2} - 1) = f(zeta_p - 1) embedded at level 2
        CyclotomicElement lhs2 = cyclotomic_eval(ph, 2, ctx, 10);
        CyclotomicElement rhs2 = cyclotomic_eval(f, 1, ctx, 10).embedded_up();
        CHECK((lhs2 - rhs2).indistinguishable_from_zero());
    }
}

TEST_CASE("insufficient truncation is reported") {
    Context ctx(3, 20);
    PiSeries f = PiSeries::zero(3, 0, 6);
    f.set_coeff(1, PadicNumber::from_integer(3, 1, 20));
    // tail only known to valuation 0: certificate floor(6/2) = 3 < 10
    CHECK_THROWS_AS(cyclotomic_eval(f, 1, ctx, 10, 0), InsufficientTruncation);
}

TEST_CASE("evaluation with a pole against direct inverse") {
    Context ctx(3, 16);
    // f = 1/pi: value is 1/(zeta - 1); check (zeta-1) * value == 1
    PiSeries f = PiSeries::monomial(3, -1, PadicNumber::from_integer(3, 1, kBigAbs), -1, 8);
    CyclotomicElement v = cyclotomic_eval(f, 1, ctx, 12);
    CyclotomicElement lambda = CyclotomicElement::root_power(3, 1, 1) -
                               CyclotomicElement::scalar(3, 1, PadicNumber::from_integer(3, 1, kBigAbs));
    CyclotomicElement prod = v * lambda;
    CHECK((prod - CyclotomicElement::scalar(3, 1, PadicNumber::from_integer(3, 1, kBigAbs))).indistinguishable_from_zero());
}
