#pragma once

#include <optional>
#include <vector>

#include "pws/padic.hpp"

namespace pws {

/// Dense matrix over capped-precision Q_p.  Row-major.  Every elimination
/// routine pivots on the entry of minimal valuation (ties: lowest row index),
/// so results are deterministic and precision loss is minimized.
class PadicMatrix {
public:
    PadicMatrix() : rows_(0), cols_(0) {}
    PadicMatrix(long rows, long cols, long p, long abs);  // all-zero at precision
    static PadicMatrix identity(long n, long p, long abs);
    static PadicMatrix from_rationals(long p, long rows, long cols, const std::vector<mpq_class>& entries, long abs);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const PadicNumber& at(long r, long c) const { return e_[static_cast<size_t>(r * cols_ + c)]; }
    PadicNumber& at(long r, long c) { return e_[static_cast<size_t>(r * cols_ + c)]; }

    PadicMatrix operator+(const PadicMatrix& o) const;
    PadicMatrix operator-(const PadicMatrix& o) const;
    PadicMatrix operator*(const PadicMatrix& o) const;
    PadicMatrix scaled(const PadicNumber& c) const;
    PadicMatrix transposed() const;
    PadicMatrix submatrix(long r0, long c0, long nr, long nc) const;
    static PadicMatrix hstack(const PadicMatrix& a, const PadicMatrix& b);

    std::vector<PadicNumber> apply(const std::vector<PadicNumber>& v) const;  // matrix * column

private:
    long rows_, cols_;
    std::vector<PadicNumber> e_;
};

struct EchelonForm {
    PadicMatrix mat;              // reduced rows
    std::vector<long> pivot_cols; // one per pivot row
    long certified_abs;           // min abs among entries certified zero during reduction
    long rank() const { return static_cast<long>(pivot_cols.size()); }
};

/// Row echelon form by minimal-valuation pivoting.  Throws PrecisionExhausted
/// if a would-be zero block contains entries with no certified digits.
EchelonForm echelon(const PadicMatrix& m);

PadicNumber det(const PadicMatrix& m);
long rank(const PadicMatrix& m);
/// Columns form a basis of the right kernel.
PadicMatrix kernel(const PadicMatrix& m);
/// Solve m x = b; throws InconsistentSystem (with the residual valuation) if
/// the system is provably inconsistent at working precision.
std::vector<PadicNumber> solve(const PadicMatrix& m, const std::vector<PadicNumber>& b);
/// Kernel of (m - lambda I).
PadicMatrix eigenspace(const PadicMatrix& m, const PadicNumber& lambda);
PadicMatrix inverse(const PadicMatrix& m);

/// Coefficients c_0..c_n of det(1 - t m) (so c_0 = 1), exact in the entries' precision.
std::vector<PadicNumber> reversed_charpoly(const PadicMatrix& m);

/// dim of the column span intersection, via rank bookkeeping.
long intersection_dim(const PadicMatrix& a, const PadicMatrix& b);

}  // namespace pws
