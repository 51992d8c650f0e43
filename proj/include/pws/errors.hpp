#pragma once

#include <stdexcept>
#include <string>

namespace pws {

/// Base class for every failure the workbench can report.  Each condition the
/// engine can certify as impossible (rather than merely unknown) gets its own
/// type so callers can branch on it.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByIndistinguishableZero : Error {
    explicit DivisionByIndistinguishableZero(const std::string& m = "division by a value indistinguishable from zero")
        : Error(m) {}
};

struct NotPrincipalUnit : Error {
    explicit NotPrincipalUnit(const std::string& m = "argument is not a principal unit") : Error(m) {}
};

struct InconsistentSystem : Error {
    long residual_valuation;
    explicit InconsistentSystem(long rv, const std::string& m = "linear system provably inconsistent")
        : Error(m + " (residual valuation " + std::to_string(rv) + ")"), residual_valuation(rv) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& m = "all candidate pivots indistinguishable from zero at exhausted precision")
        : Error(m) {}
};

struct WindowUnderflow : Error {
    explicit WindowUnderflow(const std::string& m = "certified output window is empty") : Error(m) {}
};

struct InsufficientTruncation : Error {
    explicit InsufficientTruncation(const std::string& m = "truncation tail not provably below requested precision")
        : Error(m) {}
};

struct NotPrincipalUnitSeries : Error {
    explicit NotPrincipalUnitSeries(const std::string& m = "series is not congruent to 1 modulo p") : Error(m) {}
};

struct Divergence : Error {
    explicit Divergence(const std::string& m = "iteration did not reach the precision ideal") : Error(m) {}
};

struct ObstructedConstantTerm : Error {
    long obstruction_valuation;
    explicit ObstructedConstantTerm(long v, const std::string& m = "constant-term component nonzero beyond precision")
        : Error(m + " (valuation " + std::to_string(v) + ")"), obstruction_valuation(v) {}
};

struct UnclassifiableAtPrecision : Error {
    explicit UnclassifiableAtPrecision(const std::string& m = "character matches a special family only marginally")
        : Error(m) {}
};

struct WrongCharacterFamily : Error {
    explicit WrongCharacterFamily(const std::string& m = "operation requires a different character family") : Error(m) {}
};

struct NonInvertiblePhi : Error {
    explicit NonInvertiblePhi(const std::string& m = "phi matrix not invertible at working precision") : Error(m) {}
};

struct NotSemisimpleAtPInverse : Error {
    explicit NotSemisimpleAtPInverse(const std::string& m = "phi restricted to D is not semisimple at 1/p") : Error(m) {}
};

struct NotPhiStable : Error {
    explicit NotPhiStable(const std::string& m = "subspace is not phi-stable at working precision") : Error(m) {}
};

struct MeetsFil0 : Error {
    explicit MeetsFil0(const std::string& m = "subspace meets Fil^0 nontrivially") : Error(m) {}
};

struct PoleCollision : Error {
    explicit PoleCollision(const std::string& m = "uncancelled pole at s = 0") : Error(m) {}
};

struct RhoCNotInvertible : Error {
    explicit RhoCNotInvertible(const std::string& m = "rho_{D,c} block is singular at working precision") : Error(m) {}
};

struct PhiHasEigenvalueOne : Error {
    explicit PhiHasEigenvalueOne(const std::string& m = "1 - phi not invertible on D_cris") : Error(m) {}
};

struct PsiOneCertificationFailed : Error {
    explicit PsiOneCertificationFailed(const std::string& m = "psi = 1 membership could not be certified") : Error(m) {}
};

struct NotTorsion : Error {
    explicit NotTorsion(const std::string& m = "presentation determinant indistinguishable from zero") : Error(m) {}
};

struct ZeroSeries : Error {
    explicit ZeroSeries(const std::string& m = "series is zero at working precision") : Error(m) {}
};

struct NotSemisimple : Error {
    explicit NotSemisimple(const std::string& m = "complex is not semisimple") : Error(m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace pws
