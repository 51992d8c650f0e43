#include "pws/matrix.hpp"

#include <algorithm>

namespace pws {

PadicMatrix::PadicMatrix(long rows, long cols, long p, long abs) : rows_(rows), cols_(cols) {
    e_.assign(static_cast<size_t>(rows * cols), PadicNumber::zero(p, abs));
}

PadicMatrix PadicMatrix::identity(long n, long p, long abs) {
    PadicMatrix m(n, n, p, abs);
    for (long i = 0; i < n; ++i) m.at(i, i) = PadicNumber::from_integer(p, 1, abs);
    return m;
}

PadicMatrix PadicMatrix::from_rationals(long p, long rows, long cols, const std::vector<mpq_class>& entries, long abs) {
    if (static_cast<long>(entries.size()) != rows * cols) throw Error("entry count mismatch");
    PadicMatrix m(rows, cols, p, abs);
    for (long i = 0; i < rows * cols; ++i)
        m.e_[static_cast<size_t>(i)] = PadicNumber::from_rational(p, entries[static_cast<size_t>(i)], abs);
    return m;
}

PadicMatrix PadicMatrix::operator+(const PadicMatrix& o) const {
    PadicMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PadicMatrix PadicMatrix::operator-(const PadicMatrix& o) const {
    PadicMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    long p = e_.empty() ? (o.e_.empty() ? 0 : o.e_[0].prime()) : e_[0].prime();
    PadicMatrix r(rows_, o.cols_, p, 1);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < o.cols_; ++j) {
            PadicNumber s = at(i, 0) * o.at(0, j);
            for (long k = 1; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

PadicMatrix PadicMatrix::scaled(const PadicNumber& c) const {
    PadicMatrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

PadicMatrix PadicMatrix::transposed() const {
    PadicMatrix r(cols_, rows_, e_.empty() ? 0 : e_[0].prime(), 1);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PadicMatrix PadicMatrix::submatrix(long r0, long c0, long nr, long nc) const {
    PadicMatrix r(nr, nc, e_.empty() ? 0 : e_[0].prime(), 1);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

PadicMatrix PadicMatrix::hstack(const PadicMatrix& a, const PadicMatrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack row mismatch");
    PadicMatrix r(a.rows(), a.cols() + b.cols(), a.e_.empty() ? 0 : a.e_[0].prime(), 1);
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

std::vector<PadicNumber> PadicMatrix::apply(const std::vector<PadicNumber>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw Error("apply size mismatch");
    std::vector<PadicNumber> r;
    r.reserve(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) {
        PadicNumber s = at(i, 0) * v[0];
        for (long k = 1; k < cols_; ++k) s = s + at(i, k) * v[static_cast<size_t>(k)];
        r.push_back(s);
    }
    return r;
}

EchelonForm echelon(const PadicMatrix& m0) {
    EchelonForm ef{m0, {}, kBigAbs};
    PadicMatrix& m = ef.mat;
    long pr = 0;
    for (long c = 0; c < m.cols() && pr < m.rows(); ++c) {
        long best = -1;
        long bestval = 0;
        for (long r = pr; r < m.rows(); ++r) {
            const PadicNumber& x = m.at(r, c);
            if (x.indistinguishable_from_zero()) continue;
            if (best < 0 || x.val() < bestval) {
                best = r;
                bestval = x.val();
            }
        }
        if (best < 0) {
            for (long r = pr; r < m.rows(); ++r) {
                if (m.at(r, c).abs() <= 0) throw PrecisionExhausted();
                ef.certified_abs = std::min(ef.certified_abs, m.at(r, c).abs());
            }
            continue;
        }
        if (best != pr)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(best, j));
        PadicNumber piv = m.at(pr, c);
        for (long j = 0; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) / piv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            PadicNumber f = m.at(r, c);
            if (f.indistinguishable_from_zero()) continue;
            for (long j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) - f * m.at(pr, j);
        }
        ef.pivot_cols.push_back(c);
        ++pr;
    }
    return ef;
}

PadicNumber det(const PadicMatrix& m0) {
    if (m0.rows() != m0.cols()) throw Error("det on non-square matrix");
    PadicMatrix m = m0;
    long n = m.rows();
    long p = n ? m.at(0, 0).prime() : 0;
    int sign = 1;
    PadicNumber prod = PadicNumber::from_integer(p, 1, kBigAbs);
    long pivot_val_sum = 0;
    for (long c = 0; c < n; ++c) {
        long best = -1, bestval = 0;
        for (long r = c; r < n; ++r) {
            const PadicNumber& x = m.at(r, c);
            if (x.indistinguishable_from_zero()) continue;
            if (best < 0 || x.val() < bestval) {
                best = r;
                bestval = x.val();
            }
        }
        if (best < 0) {
            // determinant certified zero: bound uses remaining columns' minimal valuations
            long bound = pivot_val_sum;
            long colabs = kBigAbs;
            for (long r = c; r < n; ++r) colabs = std::min(colabs, m.at(r, c).abs());
            bound += colabs;
            for (long c2 = c + 1; c2 < n; ++c2) {
                long mv = kBigAbs;
                for (long r = c; r < n; ++r) mv = std::min(mv, m.at(r, c2).val());
                bound += mv;
            }
            return PadicNumber::zero(p, bound);
        }
        if (best != c) {
            for (long j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(best, j));
            sign = -sign;
        }
        PadicNumber piv = m.at(c, c);
        prod = prod * piv;
        pivot_val_sum += piv.val();
        for (long r = c + 1; r < n; ++r) {
            PadicNumber f = m.at(r, c);
            if (f.indistinguishable_from_zero()) continue;
            f = f / piv;
            for (long j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    if (sign < 0) prod = -prod;
    return prod;
}

long rank(const PadicMatrix& m) { return echelon(m).rank(); }

PadicMatrix kernel(const PadicMatrix& m) {
    EchelonForm ef = echelon(m);
    long p = m.rows() && m.cols() ? m.at(0, 0).prime() : 0;
    long n = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (long c : ef.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    PadicMatrix K(n, static_cast<long>(free_cols.size()), p, ef.certified_abs == kBigAbs ? 1 : ef.certified_abs);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        long fc = free_cols[k];
        K.at(fc, static_cast<long>(k)) = PadicNumber::from_integer(p, 1, kBigAbs);
        for (size_t r = 0; r < ef.pivot_cols.size(); ++r) {
            K.at(ef.pivot_cols[r], static_cast<long>(k)) = -ef.mat.at(static_cast<long>(r), fc);
        }
    }
    return K;
}

std::vector<PadicNumber> solve(const PadicMatrix& m, const std::vector<PadicNumber>& b) {
    if (static_cast<long>(b.size()) != m.rows()) throw Error("solve size mismatch");
    long p = m.rows() && m.cols() ? m.at(0, 0).prime() : (b.empty() ? 0 : b[0].prime());
    PadicMatrix aug(m.rows(), m.cols() + 1, p, 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    // eliminate using only the coefficient columns
    long pr = 0;
    std::vector<long> pivot_cols;
    for (long c = 0; c < m.cols() && pr < m.rows(); ++c) {
        long best = -1, bestval = 0;
        for (long r = pr; r < m.rows(); ++r) {
            const PadicNumber& x = aug.at(r, c);
            if (x.indistinguishable_from_zero()) continue;
            if (best < 0 || x.val() < bestval) {
                best = r;
                bestval = x.val();
            }
        }
        if (best < 0) continue;
        if (best != pr)
            for (long j = 0; j <= m.cols(); ++j) std::swap(aug.at(pr, j), aug.at(best, j));
        PadicNumber piv = aug.at(pr, c);
        for (long j = 0; j <= m.cols(); ++j) aug.at(pr, j) = aug.at(pr, j) / piv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            PadicNumber f = aug.at(r, c);
            if (f.indistinguishable_from_zero()) continue;
            for (long j = 0; j <= m.cols(); ++j) aug.at(r, j) = aug.at(r, j) - f * aug.at(pr, j);
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    for (long r = pr; r < m.rows(); ++r) {
        if (!aug.at(r, m.cols()).indistinguishable_from_zero())
            throw InconsistentSystem(aug.at(r, m.cols()).val());
    }
    std::vector<PadicNumber> x(static_cast<size_t>(m.cols()), PadicNumber::zero(p, kBigAbs));
    for (size_t r = 0; r < pivot_cols.size(); ++r) x[static_cast<size_t>(pivot_cols[r])] = aug.at(static_cast<long>(r), m.cols());
    return x;
}

PadicMatrix eigenspace(const PadicMatrix& m, const PadicNumber& lambda) {
    if (m.rows() != m.cols()) throw Error("eigenspace on non-square matrix");
    PadicMatrix a = m;
    for (long i = 0; i < m.rows(); ++i) a.at(i, i) = a.at(i, i) - lambda;
    return kernel(a);
}

PadicMatrix inverse(const PadicMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    long n = m.rows();
    long p = n ? m.at(0, 0).prime() : 0;
    PadicMatrix aug = PadicMatrix::hstack(m, PadicMatrix::identity(n, p, kBigAbs));
    EchelonForm ef = echelon(aug);
    if (ef.rank() < n || ef.pivot_cols.back() >= n) throw NonInvertiblePhi("matrix not invertible at precision");
    for (long c : ef.pivot_cols)
        if (c >= n) throw NonInvertiblePhi("matrix not invertible at precision");
    return ef.mat.submatrix(0, n, n, n);
}

std::vector<PadicNumber> reversed_charpoly(const PadicMatrix& m) {
    if (m.rows() != m.cols()) throw Error("charpoly of non-square matrix");
    long n = m.rows();
    long p = n ? m.at(0, 0).prime() : 0;
    // det(1 - t m) = sum_k (-1)^k e_k t^k with e_k = sum of principal k x k minors
    std::vector<PadicNumber> c(static_cast<size_t>(n + 1), PadicNumber::zero(p, kBigAbs));
    c[0] = PadicNumber::from_integer(p, 1, kBigAbs);
    std::vector<long> idx;
    for (long k = 1; k <= n; ++k) {
        // iterate over k-subsets of {0..n-1}
        idx.assign(static_cast<size_t>(k), 0);
        for (long i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        PadicNumber ek = PadicNumber::zero(p, kBigAbs);
        bool done = false;
        while (!done) {
            PadicMatrix sub(k, k, p, 1);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j) sub.at(i, j) = m.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
            ek = ek + det(sub);
            // next subset
            long i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) {
                done = true;
            } else {
                ++idx[static_cast<size_t>(i)];
                for (long j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
        c[static_cast<size_t>(k)] = (k % 2) ? -ek : ek;
    }
    return c;
}

long intersection_dim(const PadicMatrix& a, const PadicMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return 0;
    return rank(a) + rank(b) - rank(PadicMatrix::hstack(a, b));
}

}  // namespace pws
