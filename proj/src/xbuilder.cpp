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

#include "mindex/xbuilder.hpp"

namespace mindex {

namespace {

Rational binom(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

Rational factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

// [[m]]' = (t^{-m} - t^m)/(t^{-1} - t)
Rational bracket_prime(long m, const Rational& t) {
    return (t.pow(-m) - t.pow(m)) / (t.inv() - t);
}

} // namespace

PolyQ antiderivative_continuous(const PolyQ& integrand) {
    if (integrand.is_zero()) return integrand;
    PolyQ out(integrand.var());
    for (int k = 0; k <= integrand.degree(); ++k)
        out.set_coeff(static_cast<size_t>(k + 1),
                      integrand[static_cast<size_t>(k)] / Rational(k + 1));
    return out;
}

Rational gprime(IdqmKind kind, int n, int k, const Rational& t) {
    if (k < 0 || k > n) throw usage_error("gprime: need 0 <= k <= n");
    if (kind == IdqmKind::wilson)
        return Rational(((k % 2) == 0) ? 1 : -1) / Rational(2).pow(2 * k + 1) *
               binom(2L * n + 2, 2L * k + 1);
    if (k % 2 == 1) return Rational(0);
    Rational sum(0);
    for (int r = 0; r <= k / 2; ++r) {
        Rational term = binom(n - k + r, r) * bracket_prime(n - k + 1 + 2 * r, t) /
                        (factorial(k / 2 - r) * factorial(n - k / 2 + 1 + r));
        if (r % 2 == 1) term = -term;
        sum += term;
    }
    return factorial(n + 1) / Rational(2).pow(k) * sum;
}

PolyQ discrete_antiderivative(const PolyQ& p, const IdqmRing& ring, bool verify) {
    if (p.is_zero()) return p;
    const int n = p.degree();
    std::vector<Rational> b(static_cast<size_t>(n) + 2, Rational(0));
    for (int k = n; k >= 0; --k) {
        Rational acc = p[static_cast<size_t>(k)];
        for (int j = k + 1; j <= n; ++j)
            acc -= gprime(ring.kind(), j, j - k, ring.t()) * b[static_cast<size_t>(j) + 1];
        b[static_cast<size_t>(k) + 1] = acc / gprime(ring.kind(), k, 0, ring.t());
    }
    PolyQ out(std::move(b), Var::eta);
    if (verify && ring.diff_quotient(out) != p)
        throw extraction_error("discrete_antiderivative: defining identity failed (g' table bug)");
    return out;
}

XCandidate make_x(MultiIndexedSystem& sys, const PolyQ& y, bool verify) {
    if (y.is_zero()) throw usage_error("make_x: Y must be nonzero");
    XCandidate c;
    c.y = y;
    PolyQ integrand = sys.xi() * y;
    if (is_oqm(sys.spec().family)) {
        c.x = antiderivative_continuous(integrand);
        c.kind = XKind::continuous_antiderivative;
    } else {
        c.x = discrete_antiderivative(integrand, *sys.ring(), verify);
        c.kind = XKind::discrete_antiderivative;
    }
    c.band = c.x.degree();
    if (c.band != sys.ell() + y.degree() + 1)
        throw extraction_error("make_x: deg X != ell + deg Y + 1");
    return c;
}

XCandidate xi_squared_times(MultiIndexedSystem& sys, const PolyQ& p, bool verify) {
    if (p.is_zero()) throw usage_error("xi_squared_times: p must be nonzero");
    const PolyQ& xi = sys.xi();
    XCandidate c;
    c.kind = XKind::xi_squared_times_p;
    if (is_oqm(sys.spec().family)) {
        c.x = xi * xi * p;
        c.y = Rational(2) * xi.derivative() * p + xi * p.derivative();
    } else {
        const IdqmRing& ring = *sys.ring();
        c.x = ring.sym_extract(ring.mul(
            ring.mul(ring.shift_eval(xi, -1), ring.shift_eval(xi, +1)), ring.shift_eval(p, 0)));
        c.y = ring.double_shift_quotient(xi, p);
        if (verify && ring.diff_quotient(c.x) != xi * c.y)
            throw extraction_error("xi_squared_times: ring identity failed");
    }
    c.band = c.x.degree();
    return c;
}

} // namespace mindex
