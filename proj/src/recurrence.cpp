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

#include "mindex/recurrence.hpp"

namespace mindex {

RecurrenceTable solve_recurrence(MultiIndexedSystem& sys, const XCandidate& x, int n_max) {
    if (x.x.is_zero()) throw usage_error("solve_recurrence: X is zero");
    RecurrenceTable table;
    table.band = x.x.degree();
    table.n_min = sys.lowest_available();
    table.n_max = n_max;
    const int band = table.band;
    const int ell_d = sys.ell();
    const int m_lo = table.n_min;
    sys.extend(n_max + band);

    for (int n = m_lo; n <= n_max; ++n) {
        PolyQ lhs = x.x * sys.p(n);
        const int m_hi = n + band;
        const size_t rows = static_cast<size_t>(ell_d + m_hi) + 1;
        const size_t cols = static_cast<size_t>(m_hi - m_lo) + 1;
        Matrix<Rational> a(rows, std::vector<Rational>(cols, Rational(0)));
        std::vector<Rational> rhs(rows, Rational(0));
        for (size_t c = 0; c < cols; ++c) {
            const PolyQ& pm = sys.p(m_lo + static_cast<int>(c));
            for (int j = 0; j <= pm.degree(); ++j)
                a[static_cast<size_t>(j)][c] = pm[static_cast<size_t>(j)];
        }
        for (int j = 0; j <= lhs.degree(); ++j) rhs[static_cast<size_t>(j)] = lhs[static_cast<size_t>(j)];

        SolveResult<Rational> sol = solve_exact(a, rhs);
        if (sol.kind == SolveKind::inconsistent) {
            table.consistent.push_back(false);
            table.witnesses.push_back({n, *sol.witness,
                                       rhs[*sol.witness]});  // row index = eta power
            continue;
        }
        // distinct degrees make the columns independent, so the solution is unique
        table.consistent.push_back(true);
        for (size_t c = 0; c < cols; ++c) {
            const Rational& v = sol.solution[c];
            if (!v.is_zero()) table.r[{n, m_lo + static_cast<int>(c) - n}] = v;
        }
    }
    return table;
}

BandReport band_check(const RecurrenceTable& table) {
    BandReport rep;
    for (const auto& [nk, v] : table.r) {
        if (nk.second < -table.band && !v.is_zero()) {
            rep.ok = false;
            rep.offending.push_back(nk);
        }
    }
    return rep;
}

InvariantTable invariants(const RecurrenceTable& table) {
    InvariantTable inv;
    bool have0 = table.n_min == 0;
    Rational r00 = table.at(0, 0);
    Rational tden = table.at(0, 1) * table.at(1, -1);
    inv.tau_defined = have0 && !tden.is_zero();
    for (int n = table.n_min; n <= table.n_max; ++n) {
        if (!have0 || r00.is_zero())
            inv.sigma_undefined.push_back(n);
        else
            inv.sigma[n] = table.at(n, 0) / r00;
        for (int k = -table.band; k <= table.band; ++k) {
            if (k == 0 || n + k < table.n_min || n + k > table.n_max) continue;
            Rational num = table.at(n, k) * table.at(n + k, -k);
            Rational den = table.at(n, 0) * table.at(n + k, 0);
            if (den.is_zero())
                inv.rho_undefined.push_back({n, k});
            else
                inv.rho[{n, k}] = num / den;
            if (inv.tau_defined) inv.tau[{n, k}] = num / tden;
        }
    }
    return inv;
}

Route2Result route2_coeffs(MultiIndexedSystem& sys, const XCandidate& x, int n_max) {
    Route2Result res;
    res.table.band = x.x.degree();
    res.table.n_min = sys.lowest_available();
    res.table.n_max = n_max;
    const int band = res.table.band;
    const size_t m_steps = sys.steps();
    sys.extend(n_max + band);

    // classical basis cache up to the largest degree needed
    std::vector<PolyQ> classical;
    for (int m = 0; m <= n_max + band; ++m) classical.push_back(sys.classical(m));

    for (int n = res.table.n_min; n <= n_max; ++n) {
        PolyQ cur = x.x * sys.p(n);
        for (size_t s = m_steps; s >= 1; --s) {
            ApplyBResult b = apply_B(sys, s, cur);
            if (!b.polynomial) {
                res.polynomial = false;
                res.failed_level = s;
                res.witness = b.witness;
                return res;
            }
            cur = std::move(b.value);
        }
        // expand in {P_m}: degrees are distinct, eliminate from the top
        std::vector<Rational> coeff(static_cast<size_t>(n + band) + 1, Rational(0));
        PolyQ rem = std::move(cur);
        for (int m = n + band; m >= 0; --m) {
            if (rem.degree() < m) continue;
            Rational c = rem[static_cast<size_t>(m)] / classical[static_cast<size_t>(m)].leading();
            if (c.is_zero()) continue;
            coeff[static_cast<size_t>(m)] = c;
            rem -= c * classical[static_cast<size_t>(m)];
        }
        if (!rem.is_zero())
            throw extraction_error("route2: classical-basis expansion left a residue");
        res.table.consistent.push_back(true);
        for (int m = 0; m <= n + band; ++m) {
            if (coeff[static_cast<size_t>(m)].is_zero()) continue;
            Rational denom(1);
            for (size_t j = 1; j <= m_steps; ++j) {
                Rational f = sys.energy(m) - sys.seed_energy(j);
                if (f.is_zero()) {
                    res.energy_collision = true;
                    return res;
                }
                denom *= f;
            }
            res.table.r[{n, m - n}] = coeff[static_cast<size_t>(m)] / denom;
        }
    }
    return res;
}

NecessaryConditionResult necessary_condition(MultiIndexedSystem& sys, const PolyQ& x) {
    NecessaryConditionResult res;
    PolyQ dq = is_oqm(sys.spec().family) ? x.derivative() : sys.ring()->diff_quotient(x);
    auto [q, r] = divrem(dq, sys.xi());
    if (r.is_zero()) {
        res.pass = true;
        res.y = std::move(q);
    } else {
        res.pass = false;
        res.witness = std::move(r);
    }
    return res;
}

} // namespace mindex
