/*
   Copyright 2026 the mindex authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mindex/linalg.hpp"

using namespace mindex;

namespace {

std::mt19937 rng(20260809);

Rational rand_rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
}

PolyQ rand_poly(int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(rand_rational());
    return PolyQ(std::move(c), Var::eta);
}

} // namespace

TEST_CASE("rational invariants") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::from_string("7/3") == Rational(7, 3));
    CHECK(Rational::from_string("-2") == Rational(-2));
    CHECK(Rational::from_string(" 5/10 ") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string("1/0"), usage_error);
    CHECK_THROWS_AS(Rational(1, 0), usage_error);
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-3, 4).pow(-2) == Rational(16, 9));
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(2, 3), Rational(-1, 5));
    CHECK(z.conj().conj() == z);
    CHECK(z * z.inv() == GaussianRational(1));
    CHECK((z + z.conj()).is_real());
}

TEST_CASE("poly arithmetic basics") {
    PolyQ eta = PolyQ::variable(Var::eta);
    PolyQ one(Rational(1), Var::eta);
    CHECK((eta + one) * (eta - one) == eta * eta - one);
    PolyQ p = rand_poly(5);
    CHECK(p + PolyQ(Var::eta) == p);
    CHECK((Rational(2) * eta) * Rational(3, 2) == Rational(3) * eta);
    CHECK(PolyQ(Var::eta).degree() == -1);  // zero sentinel
}

TEST_CASE("poly variable mismatch is a usage error") {
    PolyQ a = PolyQ::variable(Var::eta);
    PolyQ b = PolyQ::variable(Var::x);
    CHECK_THROWS_AS(a + b, usage_error);
    CHECK_THROWS_AS(a * b, usage_error);
}

TEST_CASE("divrem") {
    PolyQ eta = PolyQ::variable(Var::eta);
    PolyQ one(Rational(1), Var::eta);
    auto [q1, r1] = divrem(eta * eta - one, eta - one);
    CHECK(q1 == eta + one);
    CHECK(r1.is_zero());
    auto [q2, r2] = divrem(eta, one);
    CHECK(q2 == eta);
    CHECK(r2.is_zero());
    auto [q3, r3] = divrem(one, eta);
    CHECK(q3.is_zero());
    CHECK(r3 == one);
    CHECK_THROWS_AS(divrem(eta, PolyQ(Var::eta)), usage_error);
}

TEST_CASE("divrem round trip on random pairs") {
    for (int trial = 0; trial < 50; ++trial) {
        PolyQ a = rand_poly(9);
        PolyQ b = rand_poly(5);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("distributivity is exact") {
    for (int trial = 0; trial < 30; ++trial) {
        PolyQ p = rand_poly(6), q = rand_poly(6), r = rand_poly(6);
        CHECK((p + q) * r == p * r + q * r);
    }
}

TEST_CASE("fraction-free determinant basics") {
    Matrix<PolyQ> id3(3, std::vector<PolyQ>(3, PolyQ(Var::eta)));
    for (int i = 0; i < 3; ++i) id3[i][i] = PolyQ(Rational(1), Var::eta);
    CHECK(det_fraction_free(id3) == PolyQ(Rational(1), Var::eta));

    Matrix<Rational> m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(det_fraction_free(m) == Rational(1));

    PolyQ p = rand_poly(4);
    Matrix<PolyQ> m1{{p}};
    CHECK(det_fraction_free(m1) == p);

    Matrix<Rational> bad{{Rational(1), Rational(2)}};
    CHECK_THROWS_AS(det_fraction_free(bad), usage_error);
}

TEST_CASE("determinant with duplicated row vanishes") {
    std::uniform_int_distribution<size_t> sz(2, 4);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = sz(rng);
        Matrix<PolyQ> m(n, std::vector<PolyQ>(n, PolyQ(Var::eta)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i][j] = rand_poly(2);
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        size_t a = pick(rng), b = pick(rng);
        if (a == b) b = (b + 1) % n;
        m[a] = m[b];
        CHECK(det_fraction_free(m).is_zero());
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<PolyQ> m(3, std::vector<PolyQ>(3, PolyQ(Var::eta)));
        for (auto& row : m)
            for (auto& e : row) e = rand_poly(2);
        PolyQ cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(det_fraction_free(m) == cof);
    }
}

TEST_CASE("solve_exact classification") {
    // x = 3 with rows {x=3, 2x=6}
    Matrix<Rational> a{{Rational(1)}, {Rational(2)}};
    auto r = solve_exact(a, {Rational(3), Rational(6)});
    CHECK(r.kind == SolveKind::unique);
    CHECK(r.solution[0] == Rational(3));

    // rows {x=3, x=4}: inconsistent with witness
    auto r2 = solve_exact(Matrix<Rational>{{Rational(1)}, {Rational(1)}},
                          {Rational(3), Rational(4)});
    CHECK(r2.kind == SolveKind::inconsistent);
    CHECK(r2.witness.has_value());

    // empty constraint on one unknown
    auto r3 = solve_exact(Matrix<Rational>{{Rational(0)}}, {Rational(0)});
    CHECK(r3.kind == SolveKind::underdetermined);
}

TEST_CASE("solve_exact residual is exactly zero when consistent") {
    std::uniform_int_distribution<size_t> sz(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        size_t cols = sz(rng), rows = cols + sz(rng);
        Matrix<Rational> a(rows, std::vector<Rational>(cols));
        std::vector<Rational> x(cols), b(rows, Rational(0));
        for (auto& v : x) v = rand_rational();
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                a[i][j] = rand_rational();
                b[i] += a[i][j] * x[j];
            }
        auto r = solve_exact(a, b);
        REQUIRE(r.kind != SolveKind::inconsistent);
        for (size_t i = 0; i < rows; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < cols; ++j) acc += a[i][j] * r.solution[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("laurent polynomial algebra") {
    LaurentQ z = LaurentQ::monomial(Rational(1), 1, Var::z);
    LaurentQ zi = LaurentQ::monomial(Rational(1), -1, Var::z);
    CHECK(z * zi == LaurentQ(Rational(1), Var::z));
    LaurentQ f = z + zi;
    CHECK(f.invert_arg() == f);
    CHECK(f.scale_arg(Rational(2)) == Rational(2) * LaurentQ::monomial(Rational(1), 1, Var::z) +
                                          LaurentQ::monomial(Rational(1, 2), -1, Var::z));
    CHECK((z * z).derivative() == Rational(2) * z);
    CHECK(zi.derivative() == LaurentQ::monomial(Rational(-1), -2, Var::z));
}

TEST_CASE("determinant over rational-function entries") {
    PolyQ eta = PolyQ::variable(Var::eta);
    PolyQ one(Rational(1), Var::eta);
    Matrix<RationalFunction> m{
        {RationalFunction(one, eta), RationalFunction(eta)},
        {RationalFunction(one), RationalFunction(eta, eta + one)},
    };
    RationalFunction expect = RationalFunction(one, eta) * RationalFunction(eta, eta + one) -
                              RationalFunction(eta);
    CHECK(det_fraction_free(m) == expect);
}

TEST_CASE("rational function reduction") {
    PolyQ eta = PolyQ::variable(Var::eta);
    PolyQ one(Rational(1), Var::eta);
    RationalFunction f(eta * eta - one, eta - one);
    CHECK(f.is_polynomial());
    CHECK(f.to_poly() == eta + one);
    RationalFunction g(one, eta);
    CHECK_FALSE(g.is_polynomial());
    CHECK((g * RationalFunction(eta)).to_poly() == one);
    CHECK_THROWS_AS(RationalFunction(one, PolyQ(Var::eta)), usage_error);
}
