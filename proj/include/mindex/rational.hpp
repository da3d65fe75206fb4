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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mindex {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degenerate_parameter_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct calibration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal-consistency failures (wrong convention upstream, g' table bug, ...).
struct extraction_error : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
 * Thin value wrapper over GMP's mpq_class; all arithmetic exact.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw usage_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "p", "-p/q", with optional surrounding whitespace.
    static Rational from_string(std::string_view s) {
        std::string t(s);
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        if (a == std::string::npos) throw usage_error("Rational: empty string");
        t = t.substr(a, b - a + 1);
        mpq_class q;
        if (q.set_str(t, 10) != 0)
            throw usage_error("Rational: cannot parse '" + std::string(s) + "'");
        if (q.get_den() == 0) throw usage_error("Rational: zero denominator in '" + t + "'");
        q.canonicalize();
        return Rational(q, no_canon{});
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(-q_, no_canon{}); }
    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.is_zero()) throw usage_error("Rational: division by zero");
        q_ /= r.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw usage_error("Rational: inverse of zero");
        return Rational(1 / q_, no_canon{});
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inv().pow(-e);
        Rational base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    const mpq_class& raw() const { return q_; }

private:
    struct no_canon {};
    Rational(mpq_class q, no_canon) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd over Q (content helper): gcd(num)/lcm(den) of |a|,|b|
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, gd;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(gd.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(mpq_class(gn, gd));
}

/**
 * Gaussian rational a + b*i. Conjugation is an involution; field ops exact.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_; im_ += o.im_; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_; im_ -= o.im_; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i2 = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r); im_ = std::move(i2);
        return *this;
    }
    GaussianRational inv() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n.is_zero()) throw usage_error("GaussianRational: inverse of zero");
        return {re_ / n, -im_ / n};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        return "(" + re_.str() + (im_.sign() >= 0 ? "+" : "-") + im_.abs().str() + "i)";
    }

private:
    Rational re_, im_;
};

// Scalar traits shared by the exact kernels.
template <class S> struct scalar_traits;

template <> struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational conj(const Rational& a) { return a; }
};

template <> struct scalar_traits<GaussianRational> {
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational conj(const GaussianRational& a) { return a.conj(); }
};

} // namespace mindex
