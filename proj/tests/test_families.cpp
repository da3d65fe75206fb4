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

#include "mindex/families.hpp"

using namespace mindex;

// -------------------------------------------------------------------------
// independent series oracles (hypergeometric sums, no recurrences)
// -------------------------------------------------------------------------
namespace {

Rational poch(const Rational& x, int k) {
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= x + Rational(j);
    return r;
}

Rational qpoch(const Rational& x, const Rational& q, int k) {
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= Rational(1) - x * q.pow(j);
    return r;
}

Rational factorial(int n) {
    Rational r(1);
    for (int j = 2; j <= n; ++j) r *= Rational(j);
    return r;
}

PolyQ eta() { return PolyQ::variable(Var::eta); }

// L_n^{(alpha)}(eta) = sum_k (-1)^k/k! * C(n+alpha, n-k) eta^k
PolyQ laguerre_series(int n, const Rational& alpha) {
    PolyQ out(Var::eta);
    for (int k = 0; k <= n; ++k) {
        Rational c = poch(alpha + Rational(k) + Rational(1), n - k) / factorial(n - k) / factorial(k);
        if (k % 2 == 1) c = -c;
        out.set_coeff(static_cast<size_t>(k), c);
    }
    return out;
}

// P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
PolyQ jacobi_series(int n, const Rational& a, const Rational& b) {
    PolyQ out(Var::eta);
    PolyQ xm = (eta() - PolyQ(Rational(1), Var::eta)) / Rational(2);
    PolyQ xp = (eta() + PolyQ(Rational(1), Var::eta)) / Rational(2);
    for (int s = 0; s <= n; ++s) {
        Rational c1 = poch(a + Rational(s + 1), n - s) / factorial(n - s);
        Rational c2 = poch(b + Rational(n - s + 1), s) / factorial(s);
        PolyQ term(Rational(1), Var::eta);
        for (int i = 0; i < s; ++i) term = term * xm;
        for (int i = 0; i < n - s; ++i) term = term * xp;
        out += (c1 * c2) * term;
    }
    return out;
}

// terminating 4F3 form of the Wilson polynomial, TTR normalization
PolyQ wilson_series(int n, const std::array<Rational, 4>& a) {
    Rational b1 = a[0] + a[1] + a[2] + a[3];
    PolyQ out(Var::eta);
    for (int k = 0; k <= n; ++k) {
        Rational c = poch(Rational(-n), k) * poch(Rational(n) + b1 - Rational(1), k) /
                     (poch(a[0] + a[1], k) * poch(a[0] + a[2], k) * poch(a[0] + a[3], k) *
                      factorial(k));
        PolyQ prod(Rational(1), Var::eta);
        for (int m = 0; m < k; ++m)
            prod = prod * (eta() + PolyQ((a[0] + Rational(m)) * (a[0] + Rational(m)), Var::eta));
        out += c * prod;
    }
    return out;
}

// terminating 4phi3 form of the Askey-Wilson polynomial, TTR normalization
PolyQ askey_wilson_series(int n, const std::array<Rational, 4>& a, const Rational& q) {
    Rational b4 = a[0] * a[1] * a[2] * a[3];
    PolyQ out(Var::eta);
    for (int k = 0; k <= n; ++k) {
        Rational c = qpoch(q.pow(-n), q, k) * qpoch(b4 * q.pow(n - 1), q, k) * q.pow(k) /
                     (qpoch(a[0] * a[1], q, k) * qpoch(a[0] * a[2], q, k) *
                      qpoch(a[0] * a[3], q, k) * qpoch(q, q, k));
        // (a e^{i th}; q)_k (a e^{-i th}; q)_k = prod_m (1 - 2 a q^m eta + a^2 q^{2m})
        PolyQ prod(Rational(1), Var::eta);
        for (int m = 0; m < k; ++m) {
            PolyQ f({Rational(1) + a[0] * a[0] * q.pow(2 * m), Rational(-2) * a[0] * q.pow(m)},
                    Var::eta);
            prod = prod * f;
        }
        out += c * prod;
    }
    return out;
}

const std::array<Rational, 4> w_params{Rational(1, 3), Rational(7, 3), Rational(3, 5),
                                       Rational(9, 5)};
const std::array<Rational, 4> aw_params{Rational(1, 2), Rational(1, 3), Rational(1, 5),
                                        Rational(1, 7)};

} // namespace

TEST_CASE("classical polynomials match the series oracles") {
    FamilySpec lspec = FamilySpec::laguerre(Rational(7, 3));
    FamilySpec jspec = FamilySpec::jacobi(Rational(5, 2), Rational(3, 2));
    FamilySpec wspec = FamilySpec::wilson(w_params);
    FamilySpec awspec = FamilySpec::askey_wilson(aw_params, Rational(1, 2));
    for (int n = 0; n <= 10; ++n) {
        CHECK(classical_poly(lspec, n) == laguerre_series(n, lspec.g - Rational(1, 2)));
        CHECK(classical_poly(jspec, n) ==
              jacobi_series(n, jspec.g - Rational(1, 2), jspec.h - Rational(1, 2)));
        CHECK(classical_poly(wspec, n) == wilson_series(n, w_params));
        CHECK(classical_poly(awspec, n) == askey_wilson_series(n, aw_params, awspec.q()));
    }
}

TEST_CASE("classical degree law across parameter samples") {
    std::vector<FamilySpec> specs = {
        FamilySpec::laguerre(Rational(1)),
        FamilySpec::laguerre(Rational(3, 2)),
        FamilySpec::laguerre(Rational(7, 3)),
        FamilySpec::jacobi(Rational(2), Rational(1)),
        FamilySpec::jacobi(Rational(5, 2), Rational(3, 2)),
        FamilySpec::jacobi(Rational(7, 3), Rational(4, 3)),
        FamilySpec::wilson(w_params),
        FamilySpec::wilson({Rational(2, 5), Rational(9, 4), Rational(7, 6), Rational(5, 3)}),
        FamilySpec::wilson({Rational(3, 7), Rational(13, 7), Rational(4, 5), Rational(8, 5)}),
        FamilySpec::askey_wilson(aw_params, Rational(1, 2)),
        FamilySpec::askey_wilson({Rational(1, 3), Rational(2, 5), Rational(1, 4), Rational(2, 7)},
                                 Rational(2, 3)),
        FamilySpec::askey_wilson({Rational(1, 2), Rational(2, 3), Rational(1, 6), Rational(1, 5)},
                                 Rational(1, 3)),
    };
    for (const auto& spec : specs)
        for (int n = 0; n <= 12; ++n) CHECK(classical_poly(spec, n).degree() == n);
}

TEST_CASE("classical small cases") {
    CHECK(classical_poly(FamilySpec::laguerre(Rational(3)), 0) ==
          PolyQ(Rational(1), Var::eta));
    // L_1^{(1/2)} = 3/2 - eta
    CHECK(classical_poly(FamilySpec::laguerre(Rational(1)), 1) ==
          PolyQ({Rational(3, 2), Rational(-1)}, Var::eta));
    CHECK(classical_poly(FamilySpec::laguerre(Rational(1)), -1).is_zero());
}

TEST_CASE("eigenvalues") {
    FamilySpec l = FamilySpec::laguerre(Rational(1));
    CHECK(eigen_energy(l, 0) == Rational(0));
    CHECK(eigen_energy(l, 1) == Rational(4));
    FamilySpec j = FamilySpec::jacobi(Rational(2), Rational(1));
    CHECK(eigen_energy(j, 2) == Rational(8) * (Rational(2) + Rational(3)));
    FamilySpec aw = FamilySpec::askey_wilson(aw_params, Rational(1, 2));
    Rational q = aw.q();
    Rational b4 = aw_params[0] * aw_params[1] * aw_params[2] * aw_params[3];
    CHECK(eigen_energy(aw, 1) == (q.inv() - Rational(1)) * (Rational(1) - b4));
}

TEST_CASE("virtual seeds") {
    FamilySpec l = FamilySpec::laguerre(Rational(7, 3));
    SeedDescriptor s = virtual_seed(l, 1, SeedType::I);
    // xi = eta + g + 1/2
    CHECK(s.xi == PolyQ({l.g + Rational(1, 2), Rational(1)}, Var::eta));
    CHECK(s.etilde == Rational(-4) * (l.g + Rational(3, 2)));
    CHECK_THROWS_AS(virtual_seed(l, 0, SeedType::I), usage_error);

    FamilySpec j = FamilySpec::jacobi(Rational(2), Rational(1));
    SeedDescriptor js = virtual_seed(j, 1, SeedType::I);
    // xi prop to (g-h+2) eta + (g+h-1)
    PolyQ anchor({j.g + j.h - Rational(1), j.g - j.h + Rational(2)}, Var::eta);
    CHECK(js.xi * anchor.leading() == anchor * js.xi.leading());

    for (const FamilySpec& spec :
         {l, j, FamilySpec::wilson(w_params), FamilySpec::askey_wilson(aw_params, Rational(1, 2))})
        for (int v = 1; v <= 5; ++v)
            for (SeedType type : {SeedType::I, SeedType::II})
                CHECK(virtual_seed(spec, v, type).xi.degree() == v);
}

TEST_CASE("virtual energies avoid the spectrum at generic parameters") {
    for (const FamilySpec& spec :
         {FamilySpec::laguerre(Rational(7, 3)), FamilySpec::jacobi(Rational(7, 3), Rational(4, 3)),
          FamilySpec::wilson(w_params), FamilySpec::askey_wilson(aw_params, Rational(1, 2))})
        for (int v = 1; v <= 5; ++v)
            for (SeedType type : {SeedType::I, SeedType::II}) {
                Rational et = virtual_seed(spec, v, type).etilde;
                for (int n = 0; n <= 12; ++n) CHECK(et != eigen_energy(spec, n));
            }
}

TEST_CASE("operator tables") {
    FamilySpec l = FamilySpec::laguerre(Rational(7, 3));
    // first chain step, type I: s_I = 1, s_II = 0 (counts include d_s)
    OqmOperatorEntry e = oqm_operator_table(l, SeedType::I, 1, 0, Rational(2));
    CHECK(e.e_f == PolyQ(Rational(1), Var::eta));
    CHECK(e.e_b == PolyQ::variable(Var::eta));
    CHECK(e.et_f == Rational(-2));
    CHECK(e.et_b == Rational(-2) * (l.g + Rational(1)) + Rational(1));

    FamilySpec j = FamilySpec::jacobi(Rational(2), Rational(1));
    OqmOperatorEntry ej = oqm_operator_table(j, SeedType::II, 0, 1, Rational(-4));
    // e^F for a type-II step is (1 - eta)/2
    CHECK(ej.e_f == PolyQ({Rational(1, 2), Rational(-1, 2)}, Var::eta));
    CHECK(ej.e_b == PolyQ({Rational(1, 2), Rational(1, 2)}, Var::eta));

    FamilySpec w = FamilySpec::wilson(w_params);
    IdqmRing ring = make_ring(w);
    IdqmOperatorEntry ew = idqm_operator_table(w, SeedType::I, ring);
    // e^B = (a3 + ix)(a4 + ix): real part a3 a4 - x^2, imag part (a3+a4) x
    PolyG eb(Var::x);
    eb.set_coeff(0, GaussianRational(w.a[2] * w.a[3]));
    eb.set_coeff(1, GaussianRational(Rational(0), w.a[2] + w.a[3]));
    eb.set_coeff(2, GaussianRational(Rational(-1)));
    CHECK(ew.e_b.w == eb);
}

TEST_CASE("index set parsing and validation") {
    IndexSet d = IndexSet::parse("1I,2II");
    CHECK(d.size() == 2);
    CHECK(d.entries[1].v == 2);
    CHECK(d.entries[1].type == SeedType::II);
    CHECK(ell(d) == 1 + 2 - 1 + 2 * 1 * 1);
    CHECK_THROWS_AS(IndexSet::parse("1I,1I"), usage_error);
    CHECK_THROWS_AS(IndexSet::parse("0I"), usage_error);
    CHECK_THROWS_AS(IndexSet::parse("2X"), usage_error);
    CHECK_THROWS_AS(IndexSet::parse(""), usage_error);
}

TEST_CASE("degenerate parameters are rejected lazily with diagnostics") {
    // b1 = 1 makes the Wilson n=0 recurrence denominator (b1)(b1-1) vanish
    FamilySpec w = FamilySpec::wilson({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    CHECK_THROWS_AS(classical_poly(w, 2), degenerate_parameter_error);
    CHECK_THROWS_AS(FamilySpec::askey_wilson(aw_params, Rational(1)), usage_error);
    // g + h = -1 zeroes the Jacobi recurrence denominator at n = 2
    FamilySpec j = FamilySpec::jacobi(Rational(1, 2), Rational(-3, 2));
    CHECK_THROWS_AS(classical_poly(j, 2), degenerate_parameter_error);
}
