#pragma once

#include <vector>

#include "pws/matrix.hpp"
#include "pws/series.hpp"

namespace pws {

/// Output of a series-equation solver, with the certificates that make the
/// result usable: the residual valuation of the defining equation, and (for
/// iterative solves) a flat valuation bound for coefficients beyond the window.
struct OperatorReport {
    std::vector<PiSeries> output;
    long residual_valuation = 0;
    long iterations = 0;
    long tail_coeff_val = 0;  // val bound for coefficients at degrees >= hi
};

/// Solve (1 - Phi) F = alpha where Phi acts as phi_series (x) phi_D on
/// D-valued series, by the geometric iteration F = sum_k Phi^k(alpha) with the
/// constant term split off through (1 - phi_D)^-1.  alpha components must be
/// polynomial objects with nonnegative window.  The Delta-type obstructions
/// (solvability of (1 - p^i phi_D) x = d^i alpha(0) whenever that operator is
/// singular) are checked up front; failures and non-contracting iterations
/// raise Divergence.
OperatorReport solve_frobenius(const std::vector<PiSeries>& alpha, const PadicMatrix& phi_D,
                               const Context& ctx, long k_max = 200);

/// Solve (gamma_c - 1) x = b for an exact rational 1-unit c by the triangular
/// degree-by-degree substitution; the pi^0 equation has a zero diagonal and is
/// enforced as a consistency constraint (ObstructedConstantTerm on failure).
/// Each degree-n division by c^n - 1 costs v_p(c^n - 1) digits, which the
/// coefficient arithmetic records.
OperatorReport solve_gamma(const PiSeries& b, const mpq_class& c, const Context& ctx);

/// solve_gamma followed by the projection onto psi = 0 (subtracting the
/// constant psi(x), which is gamma-invariant up to the solver residual).
struct GammaPsiSolution {
    PiSeries x;
    long residual_valuation;      // of (gamma_c - 1) x - b
    long psi_residual_valuation;  // of psi(x)
};
GammaPsiSolution solve_gamma_psi0(const PiSeries& b, const mpq_class& c, const Context& ctx);

}  // namespace pws
