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

#include <map>
#include <memory>
#include <optional>

#include "mindex/families.hpp"
#include "mindex/linalg.hpp"

namespace mindex {

struct BuildOptions {
    int calib_n_max = 3;  // round-trip checked for n = 0..calib_n_max
    std::optional<std::vector<ConventionCandidate>> candidates_override;
    Rational etb_delta;   // test hook: perturbs e~^B in the calibration round trip
    bool allow_idqm_multistep = false;  // M >= 2 Casoratians: unsupported stretch
};

struct CalibrationInfo {
    ConventionCandidate convention;
    Rational kappa{1};  // idQM step scalar (B-hat normalization); oQM: 1
    std::string anchor; // which anchor pinned the convention
};

/**
 * A fully built multi-indexed system: denominator polynomial Xi_D, the chain
 * of its prefixes, and the polynomials P_{D,n} (lazily extended cache).
 *
 * Build order: seeds -> Wronskian/Casoratian chain -> calibration (anchors +
 * exact B-hat F-hat round trips). Construction fails loudly on degree-law or
 * calibration violations. After build() returns, the only mutable state is
 * the n-cache, extended by extend()/p().
 */
class MultiIndexedSystem {
public:
    static MultiIndexedSystem build(const FamilySpec& spec, const IndexSet& d,
                                    const BuildOptions& opt = {});

    const FamilySpec& spec() const { return spec_; }
    const IndexSet& index_set() const { return d_; }
    int ell() const { return ell_; }
    size_t steps() const { return d_.size(); }
    const CalibrationInfo& calibration() const { return calib_; }

    // Xi_{d_1..d_s}; s = 0 gives 1, s = M gives Xi_D.
    const PolyQ& xi_prefix(size_t s) const;
    const PolyQ& xi() const { return xi_prefix(d_.size()); }

    // P_{D,n}; n < 0 returns the zero polynomial.
    const PolyQ& p(int n);
    void extend(int n_max);

    PolyQ classical(int n) const { return classical_poly(spec_, n); }
    Rational energy(int n) const { return eigen_energy(spec_, n); }
    Rational seed_energy(size_t j) const;  // E~_{d_j}, 1-based like the chain
    const SeedDescriptor& seed(size_t j) const;

    const IdqmRing* ring() const { return ring_.get(); }

    // True when P_{D,n} comes from the bordered determinant; false when the
    // build fell back to the forward chain (the determinant route degenerates
    // exactly when a virtual seed collides with an eigenstate, e.g. at
    // parameter values sitting on the edge of the admissible range).
    bool determinant_built() const { return !chain_mode_; }

    // 0 normally; at boundary points, the number of leading members outside
    // reach of rational construction (both routes annihilate them).
    int lowest_available() const { return n_absent_; }

private:
    FamilySpec spec_;
    IndexSet d_;
    int ell_ = 0;
    CalibrationInfo calib_;
    std::vector<SeedDescriptor> seeds_;
    std::vector<PolyQ> xi_chain_;  // [0..M]
    std::map<int, PolyQ> p_cache_;
    Rational p_scale_{1};
    std::shared_ptr<IdqmRing> ring_;  // idQM only
    PolyQ zero_{Var::eta};
    bool chain_mode_ = false;
    int n_absent_ = 0;

    MultiIndexedSystem() = default;
    PolyQ build_p_raw(int n) const;
    PolyQ chain_p(int n) const;
};

// ---- raw Wronskian kernel (exposed for the permutation-sign property) ----

// Raw eta-space Wronskian determinant of the given seed set, polynomial part
// extracted but not normalized (sign and content preserved).
PolyQ wronskian_xi_raw(const FamilySpec& spec, const IndexSet& d);
PolyQ wronskian_p_raw(const FamilySpec& spec, const IndexSet& d, int n);

/**
 * Forward shift at chain step s (1-based): maps level s-1 polynomials to
 * level s. For p = P_{prefix,n} the image is proportional to P_{prefix+d_s,n}
 * with an n-independent constant. Throws on non-exact internal division
 * (a convention error).
 */
PolyQ apply_F(const MultiIndexedSystem& sys, size_t s, const PolyQ& p);

struct ApplyBResult {
    bool polynomial = false;
    PolyQ value;    // the image when polynomial
    PolyQ witness;  // nonzero remainder otherwise (semantically meaningful)
};

// Backward shift at chain step s; non-polynomiality is a result, not an error.
ApplyBResult apply_B(const MultiIndexedSystem& sys, size_t s, const PolyQ& p);

// Internal round-trip helper shared by calibrate and the tests:
// B_s(F_s(P_{prefix,n})) == (E_n - E~_{d_s}) P_{prefix,n} exactly.
bool round_trip_holds(MultiIndexedSystem& sys, size_t s, int n);

} // namespace mindex
