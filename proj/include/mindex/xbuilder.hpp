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

#include "mindex/darboux.hpp"

namespace mindex {

enum class XKind : uint8_t {
    continuous_antiderivative,
    discrete_antiderivative,
    xi_squared_times_p,
    custom
};

struct XCandidate {
    PolyQ x;       // the relation polynomial X(eta)
    PolyQ y;       // generating Y (zero for custom)
    int band = 0;  // L = deg X
    XKind kind = XKind::custom;
};

// Term-wise exact antiderivative with zero constant term.
PolyQ antiderivative_continuous(const PolyQ& integrand);

/**
 * g'_n^{(k)} coefficients of the symmetric power expansion
 *   (eta1^{n+1} - eta2^{n+1})/(eta1 - eta2) = sum_k g'_n^{(k)} eta^{n-k},
 * eta1/2 the half-shifted sinusoidal coordinates.
 * W: (-1)^k 2^{-2k-1} C(2n+2, 2k+1); AW: the bracketed double sum (0 for odd k).
 */
Rational gprime(IdqmKind kind, int n, int k, const Rational& t = Rational(0));

/**
 * Discrete antiderivative I[p]: the unique polynomial with zero constant term
 * whose shift difference quotient reproduces p. Computed by the descending
 * b-recursion over the g' table; with verify set, the defining identity is
 * re-checked in the shift ring on every call.
 */
PolyQ discrete_antiderivative(const PolyQ& p, const IdqmRing& ring, bool verify = true);

// X = (discrete) antiderivative of Xi_D * Y; deg X = ell_D + deg Y + 1.
XCandidate make_x(MultiIndexedSystem& sys, const PolyQ& y, bool verify = true);

// X with X-check = Xi_D(x-ig/2) Xi_D(x+ig/2) p-check (idQM) / X = Xi_D^2 p (oQM).
XCandidate xi_squared_times(MultiIndexedSystem& sys, const PolyQ& p, bool verify = true);

} // namespace mindex
