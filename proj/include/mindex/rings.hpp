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

#pragma once

#include "mindex/poly.hpp"

namespace mindex {

struct not_check_polynomial_error : extraction_error {
    using extraction_error::extraction_error;
};

// ---------------------------------------------------------------------------
// oQM rings
// ---------------------------------------------------------------------------

// Laguerre wavefunction-level carrier: Laurent polynomials in x (eta = x^2).
// d/dx is the ordinary derivative.
inline LaurentQ oqm_l_derivative(const LaurentQ& e) { return e.derivative(); }

// eta(x) = x^2 as an L-ring element
inline LaurentQ oqm_l_eta() { return LaurentQ::monomial(Rational(1), 2, Var::x); }

/**
 * Jacobi quadratic-extension element A(eta) + B(eta)*s with s^2 = 1 - eta^2
 * (eta = cos 2x, s = sin 2x). Components are rational functions of eta.
 * The x-derivation acts by D(eta) = -2s, D(s) = 2*eta.
 */
struct JQuadElem {
    RationalFunction a, b;

    static JQuadElem eta() {
        return {RationalFunction(PolyQ::variable(Var::eta)), RationalFunction()};
    }
    static JQuadElem s() {
        return {RationalFunction(), RationalFunction(PolyQ(Rational(1), Var::eta))};
    }
    static JQuadElem from_poly(const PolyQ& p) { return {RationalFunction(p), RationalFunction()}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend JQuadElem operator+(const JQuadElem& u, const JQuadElem& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend JQuadElem operator-(const JQuadElem& u, const JQuadElem& v) {
        return {u.a - v.a, u.b - v.b};
    }
    friend JQuadElem operator*(const JQuadElem& u, const JQuadElem& v) {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 (1-eta^2) + (a1 b2 + a2 b1) s
        RationalFunction one_m(PolyQ({Rational(1), Rational(0), Rational(-1)}, Var::eta));
        return {u.a * v.a + u.b * v.b * one_m, u.a * v.b + u.b * v.a};
    }
    friend bool operator==(const JQuadElem& u, const JQuadElem& v) {
        return u.a == v.a && u.b == v.b;
    }
};

// Leibniz-correct d/dx on the J ring.
inline JQuadElem oqm_j_derivative(const JQuadElem& e) {
    RationalFunction two(PolyQ(Rational(2), Var::eta));
    RationalFunction one_m(PolyQ({Rational(1), Rational(0), Rational(-1)}, Var::eta));
    RationalFunction etaf(PolyQ::variable(Var::eta));
    // d/dx (A + B s) = A'(eta)(-2s) + B'(eta)(-2s)s + B(2 eta)
    //               = [-2(1-eta^2) B' + 2 eta B] + [-2 A'] s
    return {-(two * one_m * e.b.derivative()) + two * etaf * e.b, -(two * e.a.derivative())};
}

// ---------------------------------------------------------------------------
// idQM rings (pure imaginary shifts)
// ---------------------------------------------------------------------------

enum class IdqmKind : uint8_t { wilson, askey_wilson };

/**
 * Shift ring for the discrete families. Elements:
 *   Wilson      : polynomials in x over Gaussian rationals (eta = x^2, gamma = 1)
 *   Askey-Wilson: Laurent polynomials in z = e^{ix} over rationals, with the
 *                 half-shift unit t = q^{1/2} a fixed nonzero rational, so
 *                 x -> x - i m gamma/2 acts as z -> z t^m.
 */
class IdqmRing {
public:
    struct Elem {
        PolyG w;     // wilson carrier (in x)
        LaurentQ aw; // askey-wilson carrier (in z)
    };

    explicit IdqmRing(IdqmKind kind, Rational t = Rational(0)) : kind_(kind), t_(std::move(t)) {
        if (kind_ == IdqmKind::askey_wilson) {
            if (t_.is_zero() || t_ == Rational(1) || t_ == Rational(-1))
                throw usage_error("IdqmRing: t must differ from 0, 1, -1");
        }
    }

    IdqmKind kind() const { return kind_; }
    const Rational& t() const { return t_; }
    Rational q() const { return t_ * t_; }

    // auxiliary-function constant: W: 1, AW: 2/(t^{-1} - t)
    Rational c_phi() const {
        if (kind_ == IdqmKind::wilson) return Rational(1);
        return Rational(2) / (t_.inv() - t_);
    }

    Elem zero() const {
        return kind_ == IdqmKind::wilson ? Elem{PolyG(Var::x), {}} : Elem{{}, LaurentQ(Var::z)};
    }

    // p-check shifted: represents p(eta(x + i*m*gamma/2)).
    // Wilson: substitute x -> x + i m/2. AW: substitute z -> z t^{-m}.
    Elem shift_eval(const PolyQ& p, int m) const {
        if (kind_ == IdqmKind::wilson) {
            PolyG px(Var::x);
            for (size_t k = 0; k < p.coeffs().size(); ++k)
                px.set_coeff(k, GaussianRational(p[k]));
            // eta = x^2, then x -> x + i m/2
            PolyG sq = PolyG({GaussianRational(0), GaussianRational(0), GaussianRational(1)}, Var::x);
            PolyG e = px.compose(sq);
            GaussianRational c(Rational(0), Rational(m, 2));
            return {e.shift_arg(c), {}};
        }
        // eta = (z + 1/z)/2
        LaurentQ e(Var::z);
        LaurentQ half_sum = LaurentQ::monomial(Rational(1, 2), 1, Var::z) +
                            LaurentQ::monomial(Rational(1, 2), -1, Var::z);
        LaurentQ acc(Var::z);
        for (size_t k = p.coeffs().size(); k-- > 0;) {
            acc = acc * half_sum;
            acc += LaurentQ(p[k], Var::z);
        }
        return {{}, acc.scale_arg(t_.pow(-m))};
    }

    Elem shifted(const Elem& e, int m) const {
        if (kind_ == IdqmKind::wilson) {
            GaussianRational c(Rational(0), Rational(m, 2));
            return {e.w.shift_arg(c), {}};
        }
        return {{}, e.aw.scale_arg(t_.pow(-m))};
    }

    // Ring involution: W: x -> -x with coefficient conjugation; AW: z -> 1/z.
    Elem mirror(const Elem& e) const {
        if (kind_ == IdqmKind::wilson) {
            PolyG r(Var::x);
            for (int k = 0; k <= e.w.degree(); ++k) {
                GaussianRational c = e.w[static_cast<size_t>(k)].conj();
                if (k % 2 == 1) c = -c;
                r.set_coeff(static_cast<size_t>(k), c);
            }
            return {r, {}};
        }
        return {{}, e.aw.invert_arg()};
    }

    // The *-conjugate f*(x): W: conjugate coefficients; AW: z -> 1/z.
    Elem star(const Elem& e) const {
        if (kind_ == IdqmKind::wilson) {
            PolyG r(Var::x);
            for (int k = 0; k <= e.w.degree(); ++k)
                r.set_coeff(static_cast<size_t>(k), e.w[static_cast<size_t>(k)].conj());
            return {r, {}};
        }
        return {{}, e.aw.invert_arg()};
    }

    Elem add(const Elem& u, const Elem& v) const {
        if (kind_ == IdqmKind::wilson) return {u.w + v.w, {}};
        return {{}, u.aw + v.aw};
    }
    Elem sub(const Elem& u, const Elem& v) const {
        if (kind_ == IdqmKind::wilson) return {u.w - v.w, {}};
        return {{}, u.aw - v.aw};
    }
    Elem mul(const Elem& u, const Elem& v) const {
        if (kind_ == IdqmKind::wilson) return {u.w * v.w, {}};
        return {{}, u.aw * v.aw};
    }
    bool is_zero(const Elem& e) const {
        return kind_ == IdqmKind::wilson ? e.w.is_zero() : e.aw.is_zero();
    }
    bool equal(const Elem& u, const Elem& v) const {
        return kind_ == IdqmKind::wilson ? u.w == v.w : u.aw == v.aw;
    }

    /**
     * Extracts the unique polynomial P with P(eta(x)) = e. The element must be
     * invariant under the ring involution; verified by re-substitution.
     */
    PolyQ sym_extract(const Elem& e) const {
        if (!equal(e, mirror(e)))
            throw not_check_polynomial_error("sym_extract: element not involution-invariant");
        PolyQ out(Var::eta);
        if (kind_ == IdqmKind::wilson) {
            for (int k = 0; k <= e.w.degree(); ++k) {
                const GaussianRational& c = e.w[static_cast<size_t>(k)];
                if (c.is_zero()) continue;
                if (k % 2 == 1 || !c.is_real())
                    throw not_check_polynomial_error("sym_extract: residue in x after extraction");
                out.set_coeff(static_cast<size_t>(k / 2), c.re());
            }
            return out;
        }
        LaurentQ rem = e.aw;
        while (!rem.is_zero() && rem.high() > 0) {
            int m = rem.high();
            Rational c = rem.coeff(m) * Rational(2).pow(m);
            out.set_coeff(static_cast<size_t>(m), c);
            rem -= shift_eval(PolyQ::monomial(c, m, Var::eta), 0).aw;
        }
        if (!rem.is_zero()) {
            if (rem.high() < 0 || rem.low() < 0)
                throw not_check_polynomial_error("sym_extract: residue in z after extraction");
            out.set_coeff(0, rem.coeff(0));
            rem -= LaurentQ(rem.coeff(0), Var::z);
        }
        if (!equal({{}, rem}, zero()))
            throw not_check_polynomial_error("sym_extract: nonzero residue");
        return out;
    }

    // eta(x - i gamma/2) - eta(x + i gamma/2) as a ring element.
    Elem eta_gap() const {
        PolyQ e = PolyQ::variable(Var::eta);
        return sub(shift_eval(e, -1), shift_eval(e, +1));
    }

    /**
     * Exactly divides an element by eta(x-i gamma/2) - eta(x+i gamma/2).
     * W: gap = -2ix ; AW: gap = (z - 1/z)(t - 1/t)/2. Non-divisibility means a
     * wrong convention upstream and raises.
     */
    Elem div_eta_gap(const Elem& e) const {
        if (kind_ == IdqmKind::wilson) {
            // gap = -2ix: shift powers down once, scale by 1/(-2i) = i/2
            if (e.w.is_zero()) return e;
            if (!e.w[0].is_zero())
                throw extraction_error("div_eta_gap: numerator not divisible by x");
            GaussianRational f(Rational(0), Rational(1, 2));
            PolyG r(Var::x);
            for (int k = 1; k <= e.w.degree(); ++k)
                r.set_coeff(static_cast<size_t>(k - 1), e.w[static_cast<size_t>(k)] * f);
            return {r, {}};
        }
        // gap = (z - 1/z)(t - 1/t)/2. With u = z^{l0} u0 (u0 low 0), the
        // quotient is z^{l0+1} (u0 / (z^2 - 1)); the polynomial division must
        // be exact.
        if (e.aw.is_zero()) return e;
        int l0 = e.aw.low();
        LaurentQ rem = e.aw.mul_monomial(-l0);
        LaurentQ qz(Var::z);
        while (!rem.is_zero() && rem.high() >= 2) {
            int k = rem.high();
            Rational c = rem.coeff(k);
            qz += LaurentQ::monomial(c, k - 2, Var::z);
            rem -= LaurentQ::monomial(c, k, Var::z) - LaurentQ::monomial(c, k - 2, Var::z);
        }
        if (!rem.is_zero())
            throw extraction_error("div_eta_gap: numerator not divisible by z - 1/z");
        Rational scal = (t_ - t_.inv()) / Rational(2);
        qz *= scal.inv();
        return {{}, qz.mul_monomial(l0 + 1)};
    }

    // ---- the symmetric combinations that are polynomials in eta ----

    // p(x-ig/2) + p(x+ig/2)
    PolyQ shift_sum(const PolyQ& p) const {
        return sym_extract(add(shift_eval(p, -1), shift_eval(p, +1)));
    }

    // (p(x-ig/2) - p(x+ig/2)) / (eta(x-ig/2) - eta(x+ig/2))
    PolyQ diff_quotient(const PolyQ& p) const {
        return sym_extract(div_eta_gap(sub(shift_eval(p, -1), shift_eval(p, +1))));
    }

    // p(x-ig/2) * p(x+ig/2)
    PolyQ shift_product(const PolyQ& p) const {
        return sym_extract(mul(shift_eval(p, -1), shift_eval(p, +1)));
    }

    // (p1(x-ig) p2(x-ig/2) - p1(x+ig) p2(x+ig/2)) / (eta(x-ig/2) - eta(x+ig/2))
    PolyQ double_shift_quotient(const PolyQ& p1, const PolyQ& p2) const {
        Elem u = mul(shift_eval(p1, -2), shift_eval(p2, -1));
        Elem v = mul(shift_eval(p1, +2), shift_eval(p2, +1));
        return sym_extract(div_eta_gap(sub(u, v)));
    }

    /**
     * The weighted mixed combination:
     *   W : x (G - G*) / i with G = p1(x+ig/2) p2(x-ig/2)
     *   AW: e^{ix} p1(x+ig/2) p2(x-ig/2) + e^{-ix} p1(x-ig/2) p2(x+ig/2)
     * Both are involution-symmetric, hence polynomials in eta.
     */
    PolyQ weighted_mixed(const PolyQ& p1, const PolyQ& p2) const {
        Elem g = mul(shift_eval(p1, +1), shift_eval(p2, -1));
        if (kind_ == IdqmKind::wilson) {
            Elem d = sub(g, mirror(g));
            PolyG r(Var::x);
            GaussianRational inv_i = GaussianRational(Rational(0), Rational(1)).inv();
            for (int k = 0; k <= d.w.degree(); ++k)
                r.set_coeff(static_cast<size_t>(k + 1), d.w[static_cast<size_t>(k)] * inv_i);
            return sym_extract({r, {}});
        }
        Elem h = {{}, g.aw.mul_monomial(1)};
        return sym_extract(add(h, mirror(h)));
    }

private:
    IdqmKind kind_;
    Rational t_;
};

} // namespace mindex
