#include <random>

#include "doctest.h"
#include "pws/matrix.hpp"

using namespace pws;

namespace {
PadicMatrix random_int_matrix(std::mt19937_64& eng, long p, long n, long abs) {
    std::vector<mpq_class> e;
    for (long i = 0; i < n * n; ++i) e.emplace_back(static_cast<long>(eng() % 19) - 9);
    return PadicMatrix::from_rationals(p, n, n, e, abs);
}

// independent oracle: cofactor expansion
PadicNumber det_cofactor(const PadicMatrix& m) {
    long n = m.rows();
    if (n == 1) return m.at(0, 0);
    PadicNumber s = PadicNumber::zero(m.at(0, 0).prime(), kBigAbs);
    for (long j = 0; j < n; ++j) {
        PadicMatrix minor(n - 1, n - 1, m.at(0, 0).prime(), 1);
        for (long r = 1; r < n; ++r) {
            long cc = 0;
            for (long c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        PadicNumber term = m.at(0, j) * det_cofactor(minor);
        if (j % 2) term = -term;
        s = s + term;
    }
    return s;
}
}  // namespace

TEST_CASE("determinant basics") {
    PadicMatrix id = PadicMatrix::identity(3, 3, 20);
    PadicNumber d = det(id);
    CHECK((d - PadicNumber::from_integer(3, 1, 20)).indistinguishable_from_zero());
}

TEST_CASE("eigenspace of diag(1/p, 2) at 1/p") {
    long p = 3;
    PadicMatrix m = PadicMatrix::from_rationals(p, 2, 2, {mpq_class(1, p), 0, 0, 2}, 20);
    PadicMatrix K = eigenspace(m, PadicNumber::from_rational(p, mpq_class(1, p), 20));
    REQUIRE(K.cols() == 1);
    CHECK(!K.at(0, 0).indistinguishable_from_zero());
    CHECK(K.at(1, 0).indistinguishable_from_zero());
}

TEST_CASE("det matches cofactor oracle and is multiplicative") {
    std::mt19937_64 eng(99);
    for (int it = 0; it < 40; ++it) {
        long p = (it % 2) ? 3 : 5;
        PadicMatrix a = random_int_matrix(eng, p, 3, 25);
        PadicMatrix b = random_int_matrix(eng, p, 3, 25);
        PadicNumber da = det(a), db = det(b), dab = det(a * b);
        CHECK((da - det_cofactor(a)).indistinguishable_from_zero());
        CHECK((dab - da * db).indistinguishable_from_zero());
    }
}

TEST_CASE("charpoly det(1 - t m) via principal minors") {
    long p = 5;
    PadicMatrix m = PadicMatrix::from_rationals(p, 2, 2, {2, 0, 0, 7}, 20);
    auto c = reversed_charpoly(m);
    // (1-2t)(1-7t) = 1 - 9t + 14t^2
    CHECK((c[1] + PadicNumber::from_integer(p, 9, 20)).indistinguishable_from_zero());
    CHECK((c[2] - PadicNumber::from_integer(p, 14, 20)).indistinguishable_from_zero());
}

TEST_CASE("solve and inconsistency detection") {
    long p = 3;
    PadicMatrix m = PadicMatrix::from_rationals(p, 2, 2, {1, 2, 2, 4}, 20);  // rank 1
    std::vector<PadicNumber> consistent = {PadicNumber::from_integer(p, 1, 20), PadicNumber::from_integer(p, 2, 20)};
    auto x = solve(m, consistent);
    auto mx = m.apply(x);
    CHECK((mx[0] - consistent[0]).indistinguishable_from_zero());
    CHECK((mx[1] - consistent[1]).indistinguishable_from_zero());
    std::vector<PadicNumber> bad = {PadicNumber::from_integer(p, 1, 20), PadicNumber::from_integer(p, 1, 20)};
    CHECK_THROWS_AS(solve(m, bad), InconsistentSystem);
}

TEST_CASE("kernel dimension and membership") {
    long p = 3;
    PadicMatrix m = PadicMatrix::from_rationals(p, 2, 3, {1, 0, 1, 0, 1, 1}, 20);
    PadicMatrix K = kernel(m);
    REQUIRE(K.cols() == 1);
    auto v = std::vector<PadicNumber>{K.at(0, 0), K.at(1, 0), K.at(2, 0)};
    auto mv = m.apply(v);
    CHECK(mv[0].indistinguishable_from_zero());
    CHECK(mv[1].indistinguishable_from_zero());
}

TEST_CASE("inverse") {
    std::mt19937_64 eng(5);
    long p = 3;
    for (int it = 0; it < 10; ++it) {
        PadicMatrix a = random_int_matrix(eng, p, 3, 25);
        PadicNumber da = det(a);
        if (da.indistinguishable_from_zero()) continue;
        PadicMatrix ai = inverse(a);
        PadicMatrix prod = a * ai;
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j) {
                PadicNumber expect = PadicNumber::from_integer(p, i == j ? 1 : 0, 15);
                CHECK((prod.at(i, j) - expect).indistinguishable_from_zero());
            }
    }
}
