#include "doctest.h"
#include "pws/solve.hpp"

using namespace pws;

TEST_CASE("solve_frobenius on the scalar module phi = 2") {
    Context ctx(3, 14, 8);
    long p = 3;
    PadicMatrix phi = PadicMatrix::from_rationals(p, 1, 1, {2}, ctx.coeff_abs());
    // alpha = pi
    PiSeries a = PiSeries::monomial(p, 1, PadicNumber::from_integer(p, 1, kBigAbs), 0, 30);
    auto rep = solve_frobenius({a}, phi, ctx);
    CHECK(rep.residual_valuation >= ctx.M());
    CHECK(rep.iterations > 1);
    // partial-sum oracle: F agrees with sum_{k<=K} 2^k phi^k(pi) once the tail
    // is in the ideal
    PiSeries acc = a;
    PiSeries it = a;
    for (int k = 1; k <= rep.iterations; ++k) {
        it = frobenius(it, ctx).scaled_exact(mpq_class(2));
        acc = acc + it;
    }
    PiSeries diff = rep.output[0] - acc;
    auto cert = zero_certificate(diff);
    CHECK(cert.agree);
    CHECK(cert.certified_abs >= ctx.M());
}

TEST_CASE("solve_frobenius alpha = 0 and Delta obstruction") {
    Context ctx(3, 12);
    long p = 3;
    PadicMatrix one = PadicMatrix::from_rationals(p, 1, 1, {1}, ctx.coeff_abs());
    PiSeries z = PiSeries::zero(p, 0, 10);
    auto rep = solve_frobenius({z}, one, ctx);
    CHECK(zero_certificate(rep.output[0]).agree);

    // alpha(0) != 0 with phi = 1: (1 - phi) kills constants
    PiSeries a = PiSeries::monomial(p, 0, PadicNumber::from_integer(p, 1, 20), 0, 10);
    CHECK_THROWS_AS(solve_frobenius({a}, one, ctx), Divergence);
}

TEST_CASE("solve_frobenius diverges on negative-valuation eigenvalue") {
    Context ctx(3, 10);
    long p = 3;
    PadicMatrix phi = PadicMatrix::from_rationals(p, 1, 1, {mpq_class(1, 3)}, ctx.coeff_abs());
    PiSeries a = PiSeries::monomial(p, 1, PadicNumber::from_integer(p, 1, kBigAbs), 0, 20);
    CHECK_THROWS_AS(solve_frobenius({a}, phi, ctx, 60), Divergence);
}

TEST_CASE("solve_gamma basics") {
    Context ctx(3, 14, 8);
    long p = 3;
    mpq_class c = ctx.chi();
    // b = (c-1) pi + higher: solution should start with pi
    PiSeries piser = PiSeries::monomial(p, 1, PadicNumber::from_integer(p, 1, kBigAbs), 0, 20);
    PiSeries b = gamma_act(piser, c, ctx) - piser;
    auto rep = solve_gamma(b, c, ctx);
    CHECK(rep.residual_valuation >= ctx.M());
    PiSeries diff = rep.output[0] - piser;
    // solution is unique up to constants; constant term was pinned to 0
    CHECK(zero_certificate(diff.windowed(1, 19)).agree);

    // b = 1 is obstructed
    PiSeries one = PiSeries::monomial(p, 0, PadicNumber::from_integer(p, 1, 20), 0, 10);
    CHECK_THROWS_AS(solve_gamma(one, c, ctx), ObstructedConstantTerm);
}

TEST_CASE("solve_gamma for ell(pi) with psi projection") {
    // the flagship use: (gamma - 1) b0 = ell(pi), b0 in the psi = 0 subspace
    Context ctx(3, 12, 8);
    long p = 3;
    PiSeries pi_wide = PiSeries::monomial(p, 1, PadicNumber::from_integer(p, 1, kBigAbs), 0, 150);
    PiSeries lp = ell(pi_wide, ctx, -60, 70);
    auto sol = solve_gamma_psi0(lp, ctx.chi(), ctx);
    CHECK(sol.residual_valuation >= 10);
    CHECK(sol.psi_residual_valuation >= 10);
}
