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

#include "mindex/rings.hpp"

using namespace mindex;

namespace {

std::mt19937 rng(97531);

PolyQ rand_eta_poly(int max_deg, bool nonzero = false) {
    std::uniform_int_distribution<int> d(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (;;) {
        int deg = d(rng);
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.push_back(Rational(num(rng), den(rng)));
        PolyQ p(std::move(c), Var::eta);
        if (!nonzero || !p.is_zero()) return p;
    }
}

const Rational t_samples[3] = {Rational(1, 2), Rational(2, 3), Rational(3)};

} // namespace

TEST_CASE("wilson ring shift_eval") {
    IdqmRing ring(IdqmKind::wilson);
    PolyQ eta = PolyQ::variable(Var::eta);

    // eta shifted by m=-1: (x - i/2)^2 = x^2 - i x - 1/4
    auto e = ring.shift_eval(eta, -1);
    PolyG expect(Var::x);
    expect.set_coeff(0, GaussianRational(Rational(-1, 4)));
    expect.set_coeff(1, GaussianRational(Rational(0), Rational(-1)));
    expect.set_coeff(2, GaussianRational(1));
    CHECK(e.w == expect);

    // sum of the two opposite shifts: cross terms cancel, 2 eta - 1/2
    auto s = ring.add(ring.shift_eval(eta, -1), ring.shift_eval(eta, +1));
    CHECK(ring.sym_extract(s) == PolyQ({Rational(-1, 2), Rational(2)}, Var::eta));
}

TEST_CASE("askey-wilson ring shift_eval") {
    IdqmRing ring(IdqmKind::askey_wilson, Rational(1, 2));
    PolyQ eta = PolyQ::variable(Var::eta);
    // unshifted eta is (z + 1/z)/2
    auto e = ring.shift_eval(eta, 0);
    LaurentQ expect = LaurentQ::monomial(Rational(1, 2), 1, Var::z) +
                      LaurentQ::monomial(Rational(1, 2), -1, Var::z);
    CHECK(e.aw == expect);
    CHECK_THROWS_AS(IdqmRing(IdqmKind::askey_wilson, Rational(1)), usage_error);
    CHECK_THROWS_AS(IdqmRing(IdqmKind::askey_wilson, Rational(0)), usage_error);
}

TEST_CASE("sym_extract") {
    IdqmRing w(IdqmKind::wilson);
    // 2x^2 - 1/2 -> 2 eta - 1/2
    PolyG f(Var::x);
    f.set_coeff(0, GaussianRational(Rational(-1, 2)));
    f.set_coeff(2, GaussianRational(2));
    CHECK(w.sym_extract({f, {}}) == PolyQ({Rational(-1, 2), Rational(2)}, Var::eta));

    // odd element is rejected
    PolyG odd(Var::x);
    odd.set_coeff(1, GaussianRational(1));
    CHECK_THROWS_AS(w.sym_extract({odd, {}}), not_check_polynomial_error);

    // AW: (z^2 + z^-2)/2 -> 2 eta^2 - 1 (Chebyshev)
    IdqmRing aw(IdqmKind::askey_wilson, Rational(1, 2));
    LaurentQ g = LaurentQ::monomial(Rational(1, 2), 2, Var::z) +
                 LaurentQ::monomial(Rational(1, 2), -2, Var::z);
    CHECK(aw.sym_extract({{}, g}) == PolyQ({Rational(-1), Rational(0), Rational(2)}, Var::eta));
}

TEST_CASE("difference quotients") {
    PolyQ eta = PolyQ::variable(Var::eta);
    PolyQ one(Rational(1), Var::eta);
    for (auto kind : {IdqmKind::wilson, IdqmKind::askey_wilson}) {
        IdqmRing ring(kind, Rational(1, 2));
        CHECK(ring.diff_quotient(eta) == one);
        CHECK(ring.shift_product(one) == one);
    }
    IdqmRing w(IdqmKind::wilson);
    CHECK(w.diff_quotient(eta * eta) == PolyQ({Rational(-1, 2), Rational(2)}, Var::eta));
}

TEST_CASE("all symmetric combinations extract for random polynomials") {
    PolyQ eta = PolyQ::variable(Var::eta);
    for (int kindi = 0; kindi < 2; ++kindi) {
        for (const auto& t : t_samples) {
            if (kindi == 0 && t != Rational(1, 2)) continue;  // W has no t
            IdqmRing ring(kindi == 0 ? IdqmKind::wilson : IdqmKind::askey_wilson, t);
            for (int trial = 0; trial < 12; ++trial) {
                PolyQ p = rand_eta_poly(6), p1 = rand_eta_poly(6), p2 = rand_eta_poly(6);
                CHECK_NOTHROW(ring.shift_sum(p));
                CHECK_NOTHROW(ring.diff_quotient(p));
                CHECK_NOTHROW(ring.shift_product(p));
                CHECK_NOTHROW(ring.double_shift_quotient(p1, p2));
                CHECK_NOTHROW(ring.weighted_mixed(p1, p2));
            }
        }
    }
}

TEST_CASE("degree bookkeeping of the combinations") {
    IdqmRing ring(IdqmKind::askey_wilson, Rational(2, 3));
    for (int trial = 0; trial < 10; ++trial) {
        PolyQ p = rand_eta_poly(6, true);
        int d = p.degree();
        CHECK(ring.shift_sum(p).degree() == d);
        if (d >= 1) CHECK(ring.diff_quotient(p).degree() == d - 1);
        CHECK(ring.shift_product(p).degree() == 2 * d);
    }
}

TEST_CASE("sym_extract round-trips on shift-symmetrized elements") {
    for (const auto& t : t_samples) {
        IdqmRing ring(IdqmKind::askey_wilson, t);
        for (int trial = 0; trial < 34; ++trial) {
            PolyQ p = rand_eta_poly(8);
            auto e = ring.add(ring.shift_eval(p, -1), ring.shift_eval(p, +1));
            PolyQ q = ring.sym_extract(e);
            CHECK(ring.equal(ring.shift_eval(q, 0), e));
        }
    }
}

TEST_CASE("auxiliary function constant") {
    CHECK(IdqmRing(IdqmKind::wilson).c_phi() == Rational(1));
    Rational t(1, 2);
    CHECK(IdqmRing(IdqmKind::askey_wilson, t).c_phi() == Rational(2) / (t.inv() - t));
}

TEST_CASE("laguerre carrier derivation") {
    LaurentQ x3 = LaurentQ::monomial(Rational(1), 3, Var::x);
    CHECK(oqm_l_derivative(x3) == LaurentQ::monomial(Rational(3), 2, Var::x));
    CHECK(oqm_l_eta() == LaurentQ::monomial(Rational(1), 2, Var::x));
}

TEST_CASE("jacobi quadratic extension derivation") {
    JQuadElem eta = JQuadElem::eta();
    JQuadElem s = JQuadElem::s();
    // D(eta) = -2s, D(s) = 2 eta
    CHECK(oqm_j_derivative(eta) ==
          JQuadElem{RationalFunction(), RationalFunction(PolyQ(Rational(-2), Var::eta))});
    CHECK(oqm_j_derivative(s) ==
          JQuadElem{RationalFunction(Rational(2) * PolyQ::variable(Var::eta)), RationalFunction()});

    // D(s^2) two ways: chain rule on 1 - eta^2 vs Leibniz on s*s
    JQuadElem s2 = s * s;
    JQuadElem via_chain = oqm_j_derivative(s2);
    JQuadElem via_leibniz = oqm_j_derivative(s) * s + s * oqm_j_derivative(s);
    CHECK(via_chain == via_leibniz);
    // and s^2 reduces to 1 - eta^2
    PolyQ one_m({Rational(1), Rational(0), Rational(-1)}, Var::eta);
    CHECK(s2 == JQuadElem::from_poly(one_m));
}

TEST_CASE("jacobi derivation satisfies leibniz on random products") {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    auto rand_elem = [&] {
        JQuadElem e;
        e.a = RationalFunction(rand_eta_poly(3));
        e.b = RationalFunction(rand_eta_poly(3));
        return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
        JQuadElem u = rand_elem(), v = rand_elem();
        CHECK(oqm_j_derivative(u * v) == oqm_j_derivative(u) * v + u * oqm_j_derivative(v));
    }
}
