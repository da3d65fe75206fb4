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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mindex/poly.hpp"
#include "mindex/rings.hpp"

namespace mindex {

enum class Family : uint8_t { L, J, W, AW };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::J: return "J";
        case Family::W: return "W";
        default: return "AW";
    }
}

inline bool is_oqm(Family f) { return f == Family::L || f == Family::J; }

std::optional<Family> family_from_string(const std::string& s);

/**
 * Family plus instantiated rational parameters.
 *   L : g          J : g, h
 *   W : a1..a4     AW: a1..a4 and t = q^{1/2}
 * All-rational parameter choices keep the W/AW sets self-conjugate.
 * Degenerate values (those zeroing a recurrence denominator or a leading
 * coefficient during construction) are rejected lazily where they bite.
 */
struct FamilySpec {
    Family family = Family::L;
    Rational g, h;
    std::array<Rational, 4> a{};
    Rational t;

    static FamilySpec laguerre(Rational g);
    static FamilySpec jacobi(Rational g, Rational h);
    static FamilySpec wilson(std::array<Rational, 4> a);
    static FamilySpec askey_wilson(std::array<Rational, 4> a, Rational t);

    Rational q() const { return t * t; }
    std::string str() const;
};

enum class SeedType : uint8_t { I, II };

inline const char* seed_type_name(SeedType t) { return t == SeedType::I ? "I" : "II"; }

struct IndexEntry {
    int v = 1;
    SeedType type = SeedType::I;
    friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

/**
 * Ordered multiset D = {d_1, ..., d_M} of virtual-state labels. Duplicate
 * (v, type) pairs are rejected (the Wronskian would vanish identically);
 * order matters only up to the sign of Xi_D and P_{D,n}.
 */
struct IndexSet {
    std::vector<IndexEntry> entries;

    IndexSet() = default;
    explicit IndexSet(std::vector<IndexEntry> e);

    static IndexSet parse(const std::string& tokens);  // "1I,2II"

    size_t size() const { return entries.size(); }
    int count(SeedType t) const;
    std::string str() const;
};

// ell_D = sum d_j - M(M-1)/2 + 2 s_I s_II
int ell(const IndexSet& d);

/**
 * One virtual-state seed: polynomial part, energy, and the prefactor
 * descriptor consumed by the Wronskian/Casoratian kernels.
 *
 * oQM: the prefactor enters through its eta-logarithmic derivative
 * p(eta)/denom(eta) (denom = 2*eta for L, 2(1-eta^2) for J).
 * idQM: the shift-ratio prefactor(x-ig/2)/prefactor(x+ig/2) as the ring
 * rational eF_mirror/eF; the M=1 build folds it into the seed column.
 */
struct SeedDescriptor {
    PolyQ xi;         // degree v, in eta
    Rational etilde;  // virtual energy
    PolyQ logderiv_num;  // oQM only: p(eta) with rho = p / structural denom
};

// Classical polynomial P_n(eta), standard Askey-scheme normalization
// (L: Laguerre L_n^{(g-1/2)}; J: Jacobi P_n^{(g-1/2,h-1/2)}; W/AW: the
// three-term-recurrence normalizations of the Wilson/Askey-Wilson families).
PolyQ classical_poly(const FamilySpec& spec, int n);

// E_n: L: 4n; J: 4n(n+g+h); W: n(n+b1-1); AW: (q^{-n}-1)(1-b4 q^{n-1}).
Rational eigen_energy(const FamilySpec& spec, int n);

SeedDescriptor virtual_seed(const FamilySpec& spec, int v, SeedType type);

// eta-logarithmic-derivative numerator of the eigenstate prefactor, over the
// same structural denominator as the seeds.
PolyQ eigen_logderiv_num(const FamilySpec& spec);

// structural denominator of the oQM log-derivatives: L: 2 eta, J: 2(1-eta^2)
PolyQ oqm_logderiv_denom(const FamilySpec& spec);

/**
 * Exact entries of the forward/backward shift operators at chain step s.
 * s_I/s_II count types over d_1..d_s *including* d_s (fixed by calibration
 * against the B-hat F-hat round trip).
 */
struct OqmOperatorEntry {
    PolyQ e_f, e_b;       // in eta
    Rational et_f, et_b;  // scalar parts
};

struct IdqmOperatorEntry {
    IdqmRing::Elem e_f, e_b;  // v-function products in the shift ring
};

OqmOperatorEntry oqm_operator_table(const FamilySpec& spec, SeedType ds, int s_i, int s_ii,
                                    Rational c_f);

// idQM table, first chain step only (M >= 2 Casoratians are out of the
// supported scope; see darboux).
IdqmOperatorEntry idqm_operator_table(const FamilySpec& spec, SeedType ds, const IdqmRing& ring);

// Conventions subject to the calibration pass. Candidates are tried in
// order; the anchored one comes first, a decoy second so a broken table is
// caught loudly rather than silently absorbed.
struct ConventionCandidate {
    Rational c_f;       // oQM step constant
    bool swap_twists;   // exchange the type-I/II seed conventions
};

std::vector<ConventionCandidate> convention_candidates(Family f);

IdqmRing make_ring(const FamilySpec& spec);

} // namespace mindex
