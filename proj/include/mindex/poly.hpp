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

#include <algorithm>
#include <cassert>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "mindex/rational.hpp"

namespace mindex {

// Variable tags; arithmetic across different variables is a usage error.
enum class Var : uint8_t { eta, x, z };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::eta: return "eta";
        case Var::x: return "x";
        default: return "z";
    }
}

/**
 * Dense univariate polynomial over an exact scalar S.
 *
 * Invariants: trailing (highest-index) coefficient nonzero unless zero
 * polynomial; the zero polynomial has an empty coefficient vector and
 * degree() == -1 (the sentinel).
 */
template <class S>
class Poly {
public:
    Poly() : var_(Var::eta) {}
    explicit Poly(Var v) : var_(v) {}
    Poly(S c, Var v = Var::eta) : var_(v) {
        if (!c.is_zero()) coeff_.push_back(std::move(c));
    }
    Poly(std::initializer_list<S> cs, Var v = Var::eta) : coeff_(cs), var_(v) { trim(); }
    Poly(std::vector<S> cs, Var v = Var::eta) : coeff_(std::move(cs)), var_(v) { trim(); }

    static Poly monomial(S c, int k, Var v = Var::eta) {
        if (k < 0) throw usage_error("Poly: negative exponent");
        Poly p(v);
        if (c.is_zero()) return p;
        p.coeff_.assign(static_cast<size_t>(k) + 1, scalar_traits<S>::zero());
        p.coeff_.back() = std::move(c);
        return p;
    }
    static Poly variable(Var v = Var::eta) { return monomial(scalar_traits<S>::one(), 1, v); }

    Var var() const { return var_; }
    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }

    const S& operator[](size_t k) const {
        static const S z = scalar_traits<S>::zero();
        return k < coeff_.size() ? coeff_[k] : z;
    }
    const std::vector<S>& coeffs() const { return coeff_; }

    const S& leading() const {
        if (is_zero()) throw usage_error("Poly: leading coefficient of zero");
        return coeff_.back();
    }

    void set_coeff(size_t k, S c) {
        if (k >= coeff_.size()) {
            if (c.is_zero()) return;
            coeff_.resize(k + 1, scalar_traits<S>::zero());
        }
        coeff_[k] = std::move(c);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_var(o);
        if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), scalar_traits<S>::zero());
        for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_var(o);
        if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), scalar_traits<S>::zero());
        for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.var_);
        std::vector<S> out(a.coeff_.size() + b.coeff_.size() - 1, scalar_traits<S>::zero());
        for (size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                out[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        return Poly(std::move(out), a.var_);
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const S& c) {
        if (c.is_zero()) { coeff_.clear(); return *this; }
        for (auto& a : coeff_) a = a * c;
        return *this;
    }
    friend Poly operator*(Poly a, const S& c) { return a *= c; }
    friend Poly operator*(const S& c, Poly a) { return a *= c; }
    Poly& operator/=(const S& c) {
        for (auto& a : coeff_) a = a / c;
        return *this;
    }
    friend Poly operator/(Poly a, const S& c) { return a /= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        a.check_var(b);
        if (b.is_zero()) throw usage_error("Poly: division by zero polynomial");
        Poly q(a.var_), r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.coeff_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, scalar_traits<S>::zero());
        const S& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            S f = r.leading() / lb;
            q.coeff_[static_cast<size_t>(k)] = f;
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[static_cast<size_t>(k) + j] -= f * b.coeff_[j];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    // Exact division; throws if a remainder is left.
    friend Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw extraction_error("Poly: division expected to be exact");
        return q;
    }

    Poly derivative() const {
        if (coeff_.size() <= 1) return Poly(var_);
        std::vector<S> out(coeff_.size() - 1, scalar_traits<S>::zero());
        for (size_t k = 1; k < coeff_.size(); ++k)
            out[k - 1] = coeff_[k] * S(static_cast<long>(k));
        return Poly(std::move(out), var_);
    }

    S eval(const S& v) const {
        S acc = scalar_traits<S>::zero();
        for (size_t k = coeff_.size(); k-- > 0;) acc = acc * v + coeff_[k];
        return acc;
    }

    // p(c * X): coefficient k scaled by c^k.
    Poly scale_arg(const S& c) const {
        Poly r = *this;
        S f = scalar_traits<S>::one();
        for (size_t k = 0; k < r.coeff_.size(); ++k) {
            r.coeff_[k] = r.coeff_[k] * f;
            f = f * c;
        }
        r.trim();
        return r;
    }

    // p(X + c) via Horner in (X + c).
    Poly shift_arg(const S& c) const {
        Poly xc(std::vector<S>{c, scalar_traits<S>::one()}, var_);
        Poly acc(var_);
        for (size_t k = coeff_.size(); k-- > 0;) {
            acc = acc * xc;
            acc += Poly(coeff_[k], var_);
        }
        return acc;
    }

    // Composition p(q(X)).
    Poly compose(const Poly& q) const {
        Poly acc(q.var_);
        for (size_t k = coeff_.size(); k-- > 0;) {
            acc = acc * q;
            acc += Poly(coeff_[k], q.var_);
        }
        return acc;
    }

    Poly with_var(Var v) const {
        Poly r = *this;
        r.var_ = v;
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = coeff_.size(); k-- > 0;) {
            if (coeff_[k].is_zero()) continue;
            if (!first) os << " + ";
            os << coeff_[k].str();
            if (k > 0) os << "*" << var_name(var_) << "^" << k;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }
    void check_var(const Poly& o) const {
        if (var_ != o.var_)
            throw usage_error(std::string("Poly: variable mismatch ") + var_name(var_) +
                              " vs " + var_name(o.var_));
    }
    std::vector<S> coeff_;
    Var var_;
};

using PolyQ = Poly<Rational>;
using PolyG = Poly<GaussianRational>;

// Content (gcd of coefficients) of a rational-coefficient polynomial.
inline Rational content(const PolyQ& p) {
    Rational c(0);
    for (const auto& a : p.coeffs()) c = gcd(c, a);
    return c;
}

// Primitive part with positive leading coefficient; zero stays zero.
inline PolyQ normalize_primitive(const PolyQ& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    if (p.leading().sign() < 0) c = -c;
    return p / c;
}

/**
 * Laurent polynomial: coefficients for exponents low()..low()+size-1.
 * Used for the z = e^{ix} shift algebra and x-space oQM carriers.
 */
template <class S>
class LaurentPoly {
public:
    LaurentPoly() : low_(0), var_(Var::z) {}
    explicit LaurentPoly(Var v) : low_(0), var_(v) {}
    LaurentPoly(S c, Var v = Var::z) : low_(0), var_(v) {
        if (!c.is_zero()) coeff_.push_back(std::move(c));
    }
    static LaurentPoly monomial(S c, int k, Var v = Var::z) {
        LaurentPoly p(v);
        if (c.is_zero()) return p;
        p.low_ = k;
        p.coeff_.push_back(std::move(c));
        return p;
    }
    static LaurentPoly from_poly(const Poly<S>& p, Var v = Var::z) {
        LaurentPoly r(v);
        r.coeff_ = p.coeffs();
        r.low_ = 0;
        r.trim();
        return r;
    }

    Var var() const { return var_; }
    bool is_zero() const { return coeff_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeff_.size()) - 1; }

    S coeff(int k) const {
        if (k < low_ || k > high()) return scalar_traits<S>::zero();
        return coeff_[static_cast<size_t>(k - low_)];
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = add(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = add(*this, o, true); }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, true); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.var_);
        LaurentPoly r(a.var_);
        r.low_ = a.low_ + b.low_;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, scalar_traits<S>::zero());
        for (size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        r.trim();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const S& c) {
        if (c.is_zero()) { coeff_.clear(); low_ = 0; return *this; }
        for (auto& a : coeff_) a = a * c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const S& c) { return a *= c; }
    friend LaurentPoly operator*(const S& c, LaurentPoly a) { return a *= c; }
    LaurentPoly& operator/=(const S& c) {
        for (auto& a : coeff_) a = a / c;
        return *this;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.low_ == b.low_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly mul_monomial(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    // substitute X -> c*X (coefficient at exponent k picks up c^k; c != 0)
    LaurentPoly scale_arg(const S& c) const {
        LaurentPoly r = *this;
        for (int k = r.low_; k <= r.high(); ++k) {
            S f = pow_int(c, k);
            r.coeff_[static_cast<size_t>(k - r.low_)] = r.coeff_[static_cast<size_t>(k - r.low_)] * f;
        }
        return r;
    }

    // substitute X -> 1/X
    LaurentPoly invert_arg() const {
        LaurentPoly r(var_);
        if (is_zero()) return r;
        r.coeff_.assign(coeff_.rbegin(), coeff_.rend());
        r.low_ = -high();
        return r;
    }

    // d/dX
    LaurentPoly derivative() const {
        LaurentPoly r(var_);
        if (is_zero()) return r;
        r.low_ = low_ - 1;
        r.coeff_.assign(coeff_.size(), scalar_traits<S>::zero());
        for (int k = low_; k <= high(); ++k)
            r.coeff_[static_cast<size_t>(k - low_)] =
                coeff_[static_cast<size_t>(k - low_)] * S(static_cast<long>(k));
        r.trim();
        return r;
    }

    const std::vector<S>& coeffs() const { return coeff_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = high(); k >= low_; --k) {
            S c = coeff(k);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << c.str();
            if (k != 0) os << "*" << var_name(var_) << "^" << k;
            first = false;
        }
        return os.str();
    }

private:
    static S pow_int(const S& c, int k) {
        if (k == 0) return scalar_traits<S>::one();
        bool neg = k < 0;
        long e = neg ? -static_cast<long>(k) : k;
        S base = c, acc = scalar_traits<S>::one();
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        if (neg) {
            // field inverse via 1/acc
            S one = scalar_traits<S>::one();
            return one / acc;
        }
        return acc;
    }
    static LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
        a.check_var(b);
        if (a.is_zero()) return sub ? -b : b;
        if (b.is_zero()) return a;
        LaurentPoly r(a.var_);
        r.low_ = std::min(a.low_, b.low_);
        int hi = std::max(a.high(), b.high());
        r.coeff_.assign(static_cast<size_t>(hi - r.low_) + 1, scalar_traits<S>::zero());
        for (int k = a.low_; k <= a.high(); ++k)
            r.coeff_[static_cast<size_t>(k - r.low_)] += a.coeff(k);
        for (int k = b.low_; k <= b.high(); ++k) {
            if (sub)
                r.coeff_[static_cast<size_t>(k - r.low_)] -= b.coeff(k);
            else
                r.coeff_[static_cast<size_t>(k - r.low_)] += b.coeff(k);
        }
        r.trim();
        return r;
    }
    void trim() {
        size_t lead = 0;
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
        while (lead < coeff_.size() && coeff_[lead].is_zero()) ++lead;
        if (lead > 0) {
            coeff_.erase(coeff_.begin(), coeff_.begin() + static_cast<long>(lead));
            low_ += static_cast<int>(lead);
        }
        if (coeff_.empty()) low_ = 0;
    }
    void check_var(const LaurentPoly& o) const {
        if (var_ != o.var_)
            throw usage_error(std::string("LaurentPoly: variable mismatch ") + var_name(var_) +
                              " vs " + var_name(o.var_));
    }

    std::vector<S> coeff_;
    int low_;
    Var var_;
};

using LaurentQ = LaurentPoly<Rational>;
using LaurentG = LaurentPoly<GaussianRational>;

// gcd of rational-coefficient polynomials, monic result.
inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a / a.leading();
}

/**
 * Rational function num/den over Rational coefficients.
 * Reduced (gcd = 1) with monic denominator.
 */
class RationalFunction {
public:
    RationalFunction() : num_(Var::eta), den_(Rational(1), Var::eta) {}
    RationalFunction(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw usage_error("RationalFunction: zero denominator");
        reduce();
    }
    explicit RationalFunction(PolyQ num)
        : num_(std::move(num)), den_(Rational(1), num_.var()) {}

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    PolyQ to_poly() const {
        if (!is_polynomial())
            throw extraction_error("RationalFunction: not a polynomial");
        return num_ / den_[0];
    }

    RationalFunction operator-() const { return with(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw usage_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

private:
    static RationalFunction with(PolyQ n, PolyQ d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    void reduce() {
        if (num_.is_zero()) {
            den_ = PolyQ(Rational(1), den_.var());
            return;
        }
        PolyQ g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        Rational lc = den_.leading();
        num_ /= lc;
        den_ /= lc;
    }
    PolyQ num_, den_;
};

} // namespace mindex
