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

#include "mindex/xbuilder.hpp"

namespace mindex {

/**
 * Exact coefficients r_{n,k} of X(eta) P_{D,n} = sum_k r_{n,k} P_{D,n+k},
 * solved in the wide form k = -n..L so the band property is checkable.
 * Inconsistency is a first-class result (a potential counterexample), never
 * suppressed: the witness records the offending coefficient row.
 */
struct RecurrenceTable {
    int band = 0;   // L = deg X
    int n_min = 0;  // 1 when the lowest member is absent (boundary parameters)
    int n_max = 0;
    std::map<std::pair<int, int>, Rational> r;  // (n, k) -> r_{n,k}
    std::vector<bool> consistent;               // index n - n_min
    struct Witness {
        int n;
        size_t row;        // coefficient row (power of eta) that failed
        Rational residual; // its nonzero residual
    };
    std::vector<Witness> witnesses;

    bool all_consistent() const {
        for (bool c : consistent)
            if (!c) return false;
        return true;
    }
    Rational at(int n, int k) const {
        auto it = r.find({n, k});
        return it == r.end() ? Rational(0) : it->second;
    }
    // whether the (n, k) entry was part of the solve (it references only
    // constructible members)
    bool entry_defined(int n, int k) const {
        return n >= n_min && (n + k >= n_min || n + k < 0) && n <= n_max;
    }
};

RecurrenceTable solve_recurrence(MultiIndexedSystem& sys, const XCandidate& x, int n_max);

struct BandReport {
    bool ok = true;
    std::vector<std::pair<int, int>> offending;  // (n, k) with k < -L and r != 0
};

// Checks r_{n,k} = 0 for all k < -L in the wide-form table.
BandReport band_check(const RecurrenceTable& table);

/**
 * Normalization-free combinations:
 *   rho_{n,k}  = r_{n,k} r_{n+k,-k} / (r_{n,0} r_{n+k,0})
 *   sigma_n    = r_{n,0} / r_{0,0}
 *   tau_{n,k}  = r_{n,k} r_{n+k,-k} / (r_{0,1} r_{1,-1})
 * invariant under X -> cX and any per-n rescaling of P_{D,n}; tau avoids
 * r_{n,0} entirely. Vanishing denominators are flagged, not skipped silently.
 */
struct InvariantTable {
    std::map<std::pair<int, int>, Rational> rho;
    std::map<int, Rational> sigma;
    std::map<std::pair<int, int>, Rational> tau;
    std::vector<std::pair<int, int>> rho_undefined;
    std::vector<int> sigma_undefined;
    bool tau_defined = true;
};

InvariantTable invariants(const RecurrenceTable& table);

struct Route2Result {
    bool polynomial = true;  // every B-hat level stayed polynomial
    bool energy_collision = false;  // an E_{n+k} hit a virtual energy: the
                                    // dividing step is undefined at these
                                    // parameters and the route is unavailable
    size_t failed_level = 0; // first non-polynomial level otherwise (1-based from the top)
    PolyQ witness;           // its remainder
    RecurrenceTable table;   // valid when polynomial
};

/**
 * The second route: push X P_{D,n} down the whole B-hat chain, expand in the
 * classical basis, and divide by the energy products. Non-polynomial
 * intermediates are a necessary-condition violation report.
 */
Route2Result route2_coeffs(MultiIndexedSystem& sys, const XCandidate& x, int n_max);

struct NecessaryConditionResult {
    bool pass = false;
    PolyQ y;        // quotient when pass
    PolyQ witness;  // remainder when fail
};

// oQM: Xi_D | dX/deta; idQM: Xi_D | shift-difference-quotient of X.
NecessaryConditionResult necessary_condition(MultiIndexedSystem& sys, const PolyQ& x);

} // namespace mindex
