#include "pws/solve.hpp"

#include <algorithm>

namespace pws {

namespace {
PadicNumber one_at(long p) { return PadicNumber::from_integer(p, 1, kBigAbs); }

std::vector<PiSeries> apply_phi_module(const std::vector<PiSeries>& v, const PadicMatrix& phi_D, const Context& ctx,
                                       long out_hi) {
    long d = static_cast<long>(v.size());
    std::vector<PiSeries> fv;
    fv.reserve(v.size());
    for (const auto& comp : v) fv.push_back(frobenius(comp, ctx, out_hi));
    std::vector<PiSeries> out;
    out.reserve(v.size());
    for (long i = 0; i < d; ++i) {
        PiSeries acc = fv[0].scaled(phi_D.at(i, 0));
        for (long j = 1; j < d; ++j) acc = acc + fv[static_cast<size_t>(j)].scaled(phi_D.at(i, j));
        out.push_back(acc);
    }
    return out;
}
}  // namespace

OperatorReport solve_frobenius(const std::vector<PiSeries>& alpha, const PadicMatrix& phi_D, const Context& ctx,
                               long k_max) {
    long p = ctx.p();
    long d = static_cast<long>(alpha.size());
    if (d == 0 || phi_D.rows() != d || phi_D.cols() != d) throw Error("solve_frobenius shape mismatch");
    long hi = alpha[0].hi();
    for (const auto& a : alpha) {
        if (a.lo() < 0) throw Error("solve_frobenius requires nonnegative windows");
        hi = std::max(hi, a.hi());
    }

    // Delta-type obstructions: wherever 1 - p^i phi_D is singular, the i-th
    // derivative of alpha at 0 must lie in its image
    PadicMatrix id = PadicMatrix::identity(d, p, kBigAbs);
    long max_i = 2 * (ctx.M() + ctx.guard());
    std::vector<PiSeries> der = alpha;
    for (long i = 0; i <= max_i; ++i) {
        PadicMatrix op = id - phi_D.scaled(PadicNumber::from_rational(p, mpq_class(1), kBigAbs).shift(i));
        if (det(op).indistinguishable_from_zero()) {
            std::vector<PadicNumber> rhs;
            for (const auto& g : der) rhs.push_back(g.at_zero());
            try {
                solve(op, rhs);
            } catch (const InconsistentSystem& e) {
                throw Divergence("Delta_" + std::to_string(i) + " obstruction: derivative value not in im(1 - p^i phi)");
            }
        }
        if (i < max_i)
            for (auto& g : der) g = derivative(g);
        bool all_short = true;
        for (const auto& g : der) all_short &= (g.hi() <= g.lo());
        if (all_short) break;
    }

    // constant-term split: F = c + G with (1 - phi_D) c = alpha(0)
    // (consistency in the singular case was certified above at i = 0)
    std::vector<PadicNumber> a0;
    for (const auto& g : alpha) a0.push_back(g.at_zero());
    PadicMatrix one_minus_phi = id - phi_D;
    std::vector<PadicNumber> cvec = solve(one_minus_phi, a0);

    std::vector<PiSeries> alpha0;  // alpha - alpha(0), vanishing at 0
    for (long i = 0; i < d; ++i) {
        PiSeries g = alpha[static_cast<size_t>(i)];
        g.set_coeff(0, g.at_zero() - a0[static_cast<size_t>(i)]);
        alpha0.push_back(g);
    }

    long target = ctx.coeff_abs();
    std::vector<PiSeries> F = alpha0;
    std::vector<PiSeries> iter = alpha0;
    long k = 0;
    long reached = 0;
    while (true) {
        ++k;
        if (k > k_max) throw Divergence("solve_frobenius reached the iteration cap before the precision ideal");
        iter = apply_phi_module(iter, phi_D, ctx, hi);
        long mv = kBigAbs;
        for (const auto& g : iter) mv = std::min(mv, g.min_val());
        for (long i = 0; i < d; ++i) F[static_cast<size_t>(i)] = F[static_cast<size_t>(i)] + iter[static_cast<size_t>(i)];
        if (mv >= target) {
            reached = mv;
            break;
        }
    }
    // discarded tail: iterates keep gaining valuation once in the ideal
    for (auto& g : F) g = g + PiSeries::zero(p, g.lo(), g.hi(), reached);
    for (long i = 0; i < d; ++i)
        F[static_cast<size_t>(i)] =
            F[static_cast<size_t>(i)] + PiSeries::monomial(p, 0, cvec[static_cast<size_t>(i)], F[static_cast<size_t>(i)].lo(),
                                                           F[static_cast<size_t>(i)].hi());

    // residual (1 - Phi) F - alpha
    std::vector<PiSeries> phiF = apply_phi_module(F, phi_D, ctx, hi);
    long res_val = kBigAbs;
    for (long i = 0; i < d; ++i) {
        PiSeries r = F[static_cast<size_t>(i)] - phiF[static_cast<size_t>(i)] - alpha[static_cast<size_t>(i)];
        auto cert = zero_certificate(r);
        res_val = std::min(res_val, cert.agree ? cert.certified_abs : cert.worst_val);
    }

    // flat tail bound: integral series composition, matrix powers bounded below
    long m0 = 0;
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) m0 = std::min(m0, phi_D.at(i, j).val());
    long vmin_alpha = kBigAbs;
    for (const auto& g : alpha) vmin_alpha = std::min(vmin_alpha, g.min_val());
    for (const auto& cv : cvec) vmin_alpha = std::min(vmin_alpha, cv.val());
    long tail = vmin_alpha + std::min(0L, k * m0);

    OperatorReport rep;
    rep.output = std::move(F);
    rep.residual_valuation = res_val;
    rep.iterations = k;
    rep.tail_coeff_val = tail;
    return rep;
}

OperatorReport solve_gamma(const PiSeries& b, const mpq_class& c, const Context& ctx) {
    long p = ctx.p();
    long lo = b.lo(), hi = b.hi();
    if (hi <= lo) throw WindowUnderflow("solve_gamma on empty window");
    long W = hi - lo;

    // columns [gamma(pi^m)]_n for m in [lo, hi); each inverse power costs one
    // degree of window at the top, so the inverse is built with |lo| slack
    std::vector<PiSeries> col(static_cast<size_t>(W));
    {
        long slack = lo < 0 ? -lo : 0;
        PiSeries gp = gamma_pi(c, ctx, hi + slack + 3);
        if (lo < 0) {
            PiSeries gpinv = invert(gp, hi + slack + 2);
            PiSeries curneg = gpinv;  // gamma(pi)^-1
            for (long m = -1; m >= lo; --m) {
                col[static_cast<size_t>(m - lo)] = curneg.windowed(m, hi);
                if (m > lo) curneg = curneg * gpinv;
            }
        }
        PiSeries cur = PiSeries::monomial(p, 0, one_at(p), 0, hi);
        for (long m = 0; m < hi; ++m) {
            col[static_cast<size_t>(m - lo)] = cur.windowed(m, hi);
            if (m + 1 < hi) cur = (cur * gp).windowed(m + 1, hi);
        }
    }

    // triangular substitution; the n = 0 row is a consistency constraint
    PiSeries x = PiSeries::zero(p, lo, hi);
    mpq_class cpow = 1;  // c^n, updated incrementally
    for (long k = 0; k < -lo; ++k) cpow /= c;
    for (long n = lo; n < hi; ++n) {
        PadicNumber acc = b.coeff(n);
        for (long m = lo; m < n; ++m) {
            PadicNumber xm = x.coeff(m);
            if (xm.indistinguishable_from_zero() && xm.abs() >= kBigAbs / 2) continue;
            acc = acc - xm * col[static_cast<size_t>(m - lo)].coeff(n);
        }
        if (n == 0) {
            if (!acc.indistinguishable_from_zero()) throw ObstructedConstantTerm(acc.val());
            x.set_coeff(0, PadicNumber::zero(p, acc.abs()));
        } else {
            PadicNumber diag = PadicNumber::from_rational(p, cpow - 1, ctx.coeff_abs() + 40);
            x.set_coeff(n, acc / diag);
        }
        cpow *= c;
    }

    // residual through the independent composition path
    PiSeries gx = gamma_act(x, c, ctx);
    PiSeries resid = (gx - x) - b;
    auto cert = zero_certificate(resid);

    OperatorReport rep;
    rep.output = {x};
    rep.residual_valuation = cert.agree ? cert.certified_abs : cert.worst_val;
    rep.tail_coeff_val = 0;
    return rep;
}

GammaPsiSolution solve_gamma_psi0(const PiSeries& b, const mpq_class& c, const Context& ctx) {
    OperatorReport base = solve_gamma(b, c, ctx);
    PiSeries x = base.output[0];
    long p = ctx.p();
    // psi(x) solves (gamma - 1) psi(x) = psi(b); when psi(b) = 0 it is a
    // constant at working precision, and x - psi(x) is the psi = 0 solution
    PiSeries px = psi_object(x, ctx);
    if (!px.has(0)) throw WindowUnderflow("window too short to project onto psi = 0");
    PadicNumber s = px.at_zero();
    PiSeries x0 = x - PiSeries::monomial(p, 0, s, x.lo(), x.hi());
    PiSeries px0 = psi_object(x0, ctx);
    auto psicert = zero_certificate(px0);
    GammaPsiSolution sol;
    sol.x = std::move(x0);
    sol.residual_valuation = base.residual_valuation;
    sol.psi_residual_valuation = psicert.agree ? psicert.certified_abs : psicert.worst_val;
    return sol;
}

}  // namespace pws
