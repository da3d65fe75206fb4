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

#include "mindex/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mindex {

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "L") return Family::L;
    if (s == "J") return Family::J;
    if (s == "W") return Family::W;
    if (s == "AW") return Family::AW;
    return std::nullopt;
}

FamilySpec FamilySpec::laguerre(Rational g) {
    FamilySpec s;
    s.family = Family::L;
    s.g = std::move(g);
    return s;
}

FamilySpec FamilySpec::jacobi(Rational g, Rational h) {
    FamilySpec s;
    s.family = Family::J;
    s.g = std::move(g);
    s.h = std::move(h);
    return s;
}

FamilySpec FamilySpec::wilson(std::array<Rational, 4> a) {
    FamilySpec s;
    s.family = Family::W;
    s.a = std::move(a);
    return s;
}

FamilySpec FamilySpec::askey_wilson(std::array<Rational, 4> a, Rational t) {
    FamilySpec s;
    s.family = Family::AW;
    s.a = std::move(a);
    s.t = std::move(t);
    if (s.t.is_zero() || s.t == Rational(1) || s.t == Rational(-1))
        throw usage_error("askey_wilson: t must differ from 0, 1, -1");
    return s;
}

std::string FamilySpec::str() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::L: os << "(g=" << g.str() << ")"; break;
        case Family::J: os << "(g=" << g.str() << ",h=" << h.str() << ")"; break;
        case Family::W:
            os << "(a=" << a[0].str() << "," << a[1].str() << "," << a[2].str() << ","
               << a[3].str() << ")";
            break;
        case Family::AW:
            os << "(a=" << a[0].str() << "," << a[1].str() << "," << a[2].str() << ","
               << a[3].str() << ";t=" << t.str() << ")";
            break;
    }
    return os.str();
}

IndexSet::IndexSet(std::vector<IndexEntry> e) : entries(std::move(e)) {
    std::set<std::pair<int, int>> seen;
    for (const auto& d : entries) {
        if (d.v < 1) throw usage_error("IndexSet: virtual-state degree must be >= 1");
        if (!seen.insert({d.v, static_cast<int>(d.type)}).second)
            throw usage_error("IndexSet: duplicate seed " + std::to_string(d.v) +
                              seed_type_name(d.type) + " (Wronskian vanishes identically)");
    }
}

IndexSet IndexSet::parse(const std::string& tokens) {
    std::vector<IndexEntry> out;
    std::stringstream ss(tokens);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t p = 0;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p == 0 || p == tok.size())
            throw usage_error("IndexSet: bad token '" + tok + "' (expect e.g. 2I or 1II)");
        int v = std::stoi(tok.substr(0, p));
        std::string ty = tok.substr(p);
        if (ty == "I")
            out.push_back({v, SeedType::I});
        else if (ty == "II")
            out.push_back({v, SeedType::II});
        else
            throw usage_error("IndexSet: bad type in token '" + tok + "'");
    }
    if (out.empty()) throw usage_error("IndexSet: empty index list");
    return IndexSet(std::move(out));
}

int IndexSet::count(SeedType t) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [&](const IndexEntry& e) { return e.type == t; }));
}

std::string IndexSet::str() const {
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i].v);
        s += seed_type_name(entries[i].type);
    }
    return s;
}

int ell(const IndexSet& d) {
    int s = static_cast<int>(d.size());
    int sum = 0;
    for (const auto& e : d.entries) sum += e.v;
    return sum - s * (s - 1) / 2 + 2 * d.count(SeedType::I) * d.count(SeedType::II);
}

namespace {

const Rational kHalf(1, 2);

PolyQ eta_poly() { return PolyQ::variable(Var::eta); }

// Laguerre L_n^{(alpha)} by the three-term recurrence.
PolyQ laguerre_ttr(int n, const Rational& alpha) {
    if (n < 0) return PolyQ(Var::eta);
    PolyQ prev(Rational(1), Var::eta);
    if (n == 0) return prev;
    PolyQ cur = PolyQ(alpha + Rational(1), Var::eta) - eta_poly();
    for (int k = 1; k < n; ++k) {
        PolyQ lhs = (PolyQ(Rational(2 * k) + alpha + Rational(1), Var::eta) - eta_poly()) * cur -
                    (alpha + Rational(k)) * prev;
        prev = std::move(cur);
        cur = lhs / Rational(k + 1);
    }
    return cur;
}

// Jacobi P_n^{(alpha,beta)} by the three-term recurrence.
PolyQ jacobi_ttr(int n, const Rational& alpha, const Rational& beta) {
    if (n < 0) return PolyQ(Var::eta);
    PolyQ prev(Rational(1), Var::eta);
    if (n == 0) return prev;
    PolyQ cur = (alpha + beta + Rational(2)) * kHalf * eta_poly() +
                PolyQ((alpha - beta) * kHalf, Var::eta);
    for (int k = 2; k <= n; ++k) {
        Rational k2ab = Rational(2 * k) + alpha + beta;
        Rational denom = Rational(2 * k) * (Rational(k) + alpha + beta) * (k2ab - Rational(2));
        if (denom.is_zero())
            throw degenerate_parameter_error("jacobi: degenerate parameters in recurrence at n=" +
                                             std::to_string(k));
        PolyQ mid = (k2ab - Rational(1)) *
                    ((k2ab * (k2ab - Rational(2))) * eta_poly() +
                     PolyQ(alpha * alpha - beta * beta, Var::eta)) * cur;
        PolyQ low = Rational(2) * (Rational(k - 1) + alpha) * (Rational(k - 1) + beta) * k2ab * prev;
        prev = cur;
        cur = (mid - low) / denom;
    }
    return cur;
}

// Wilson, TTR normalization W~_n = W_n / ((a1+a2)_n (a1+a3)_n (a1+a4)_n).
PolyQ wilson_ttr(int n, const std::array<Rational, 4>& a) {
    if (n < 0) return PolyQ(Var::eta);
    Rational b1 = a[0] + a[1] + a[2] + a[3];
    PolyQ prev(Var::eta);
    PolyQ cur(Rational(1), Var::eta);
    for (int k = 0; k < n; ++k) {
        Rational kk(k);
        Rational dA = (Rational(2 * k) + b1 - Rational(1)) * (Rational(2 * k) + b1);
        Rational dC = (Rational(2 * k) + b1 - Rational(2)) * (Rational(2 * k) + b1 - Rational(1));
        if (dA.is_zero() || dC.is_zero())
            throw degenerate_parameter_error("wilson: degenerate parameters in recurrence at n=" +
                                             std::to_string(k));
        Rational A = (kk + a[0] + a[1]) * (kk + a[0] + a[2]) * (kk + a[0] + a[3]) *
                     (kk + b1 - Rational(1)) / dA;
        Rational C = kk * (kk + a[1] + a[2] - Rational(1)) * (kk + a[1] + a[3] - Rational(1)) *
                     (kk + a[2] + a[3] - Rational(1)) / dC;
        if (A.is_zero())
            throw degenerate_parameter_error("wilson: vanishing recurrence leading factor at n=" +
                                             std::to_string(k));
        PolyQ rhs = (PolyQ(A + C - a[0] * a[0], Var::eta) - eta_poly()) * cur - C * prev;
        prev = cur;
        cur = rhs / A;
    }
    return cur;
}

// Askey-Wilson, TTR normalization p~_n = a1^n p_n / ((a1a2;q)_n (a1a3;q)_n (a1a4;q)_n).
PolyQ askey_wilson_ttr(int n, const std::array<Rational, 4>& a, const Rational& q) {
    if (n < 0) return PolyQ(Var::eta);
    for (const auto& ai : a)
        if (ai.is_zero())
            throw degenerate_parameter_error("askey_wilson: parameters must be nonzero");
    Rational b4 = a[0] * a[1] * a[2] * a[3];
    PolyQ prev(Var::eta);
    PolyQ cur(Rational(1), Var::eta);
    for (int k = 0; k < n; ++k) {
        Rational qk = q.pow(k), qk1 = q.pow(k - 1);
        Rational dA = a[0] * (Rational(1) - b4 * q.pow(2 * k - 1)) * (Rational(1) - b4 * q.pow(2 * k));
        Rational dC = (Rational(1) - b4 * q.pow(2 * k - 2)) * (Rational(1) - b4 * q.pow(2 * k - 1));
        if (dA.is_zero() || dC.is_zero())
            throw degenerate_parameter_error(
                "askey_wilson: degenerate parameters in recurrence at n=" + std::to_string(k));
        Rational A = (Rational(1) - a[0] * a[1] * qk) * (Rational(1) - a[0] * a[2] * qk) *
                     (Rational(1) - a[0] * a[3] * qk) * (Rational(1) - b4 * qk1) / dA;
        Rational C = a[0] * (Rational(1) - q.pow(k)) * (Rational(1) - a[1] * a[2] * qk1) *
                     (Rational(1) - a[1] * a[3] * qk1) * (Rational(1) - a[2] * a[3] * qk1) / dC;
        if (A.is_zero())
            throw degenerate_parameter_error(
                "askey_wilson: vanishing recurrence leading factor at n=" + std::to_string(k));
        PolyQ rhs = (Rational(2) * eta_poly() - PolyQ(a[0] + a[0].inv() - A - C, Var::eta)) * cur -
                    C * prev;
        prev = cur;
        cur = rhs / A;
    }
    return cur;
}

std::array<Rational, 4> twisted_params(const FamilySpec& spec, SeedType type) {
    auto a = spec.a;
    if (spec.family == Family::W) {
        if (type == SeedType::I) {
            a[0] = Rational(1) - a[0];
            a[1] = Rational(1) - a[1];
        } else {
            a[2] = Rational(1) - a[2];
            a[3] = Rational(1) - a[3];
        }
    } else {
        Rational q = spec.q();
        if (type == SeedType::I) {
            a[0] = q / a[0];
            a[1] = q / a[1];
        } else {
            a[2] = q / a[2];
            a[3] = q / a[3];
        }
    }
    return a;
}

} // namespace

PolyQ classical_poly(const FamilySpec& spec, int n) {
    if (n < 0) return PolyQ(Var::eta);  // zero convention
    PolyQ p(Var::eta);
    switch (spec.family) {
        case Family::L: p = laguerre_ttr(n, spec.g - kHalf); break;
        case Family::J: p = jacobi_ttr(n, spec.g - kHalf, spec.h - kHalf); break;
        case Family::W: p = wilson_ttr(n, spec.a); break;
        case Family::AW: p = askey_wilson_ttr(n, spec.a, spec.q()); break;
    }
    if (p.degree() != n)
        throw degenerate_parameter_error("classical_poly: leading coefficient vanished for " +
                                         spec.str() + " at n=" + std::to_string(n));
    return p;
}

Rational eigen_energy(const FamilySpec& spec, int n) {
    Rational nn(n);
    switch (spec.family) {
        case Family::L: return Rational(4) * nn;
        case Family::J: return Rational(4) * nn * (nn + spec.g + spec.h);
        case Family::W: {
            Rational b1 = spec.a[0] + spec.a[1] + spec.a[2] + spec.a[3];
            return nn * (nn + b1 - Rational(1));
        }
        case Family::AW: {
            Rational q = spec.q();
            Rational b4 = spec.a[0] * spec.a[1] * spec.a[2] * spec.a[3];
            return (q.pow(-n) - Rational(1)) * (Rational(1) - b4 * q.pow(n - 1));
        }
    }
    throw usage_error("eigen_energy: bad family");
}

SeedDescriptor virtual_seed(const FamilySpec& spec, int v, SeedType type) {
    if (v < 1) throw usage_error("virtual_seed: degree must be >= 1");
    SeedDescriptor sd;
    Rational vv(v);
    switch (spec.family) {
        case Family::L:
            if (type == SeedType::I) {
                sd.xi = laguerre_ttr(v, spec.g - kHalf).scale_arg(Rational(-1));
                sd.etilde = -(Rational(4) * (vv + spec.g) + Rational(2));
                // prefactor e^{+eta/2} eta^{g/2}: d/deta log = (eta + g)/(2 eta)
                sd.logderiv_num = eta_poly() + PolyQ(spec.g, Var::eta);
            } else {
                sd.xi = laguerre_ttr(v, kHalf - spec.g);
                sd.etilde = -(Rational(4) * (spec.g - vv) - Rational(2));
                // e^{-eta/2} eta^{(1-g)/2}
                sd.logderiv_num = -eta_poly() + PolyQ(Rational(1) - spec.g, Var::eta);
            }
            break;
        case Family::J:
            if (type == SeedType::I) {
                sd.xi = jacobi_ttr(v, spec.g - kHalf, kHalf - spec.h);
                sd.etilde = Rational(-4) * (spec.g + vv + kHalf) * (spec.h - vv - kHalf);
                // sin^g cos^{1-h}: p = -g(1+eta) + (1-h)(1-eta)
                sd.logderiv_num = PolyQ({Rational(1) - spec.h - spec.g,
                                         -(spec.g + Rational(1) - spec.h)},
                                        Var::eta);
            } else {
                sd.xi = jacobi_ttr(v, kHalf - spec.g, spec.h - kHalf);
                sd.etilde = Rational(-4) * (spec.g - vv - kHalf) * (spec.h + vv + kHalf);
                // sin^{1-g} cos^h: p = -(1-g)(1+eta) + h(1-eta)
                sd.logderiv_num = PolyQ({spec.h + spec.g - Rational(1),
                                         -(Rational(1) - spec.g + spec.h)},
                                        Var::eta);
            }
            break;
        case Family::W: {
            sd.xi = wilson_ttr(v, twisted_params(spec, type));
            Rational s1 = spec.a[0] + spec.a[1], s1p = spec.a[2] + spec.a[3];
            sd.etilde = (type == SeedType::I) ? -(s1 - vv - Rational(1)) * (s1p + vv)
                                              : -(s1p - vv - Rational(1)) * (s1 + vv);
            break;
        }
        case Family::AW: {
            sd.xi = askey_wilson_ttr(v, twisted_params(spec, type), spec.q());
            Rational q = spec.q();
            Rational s2 = spec.a[0] * spec.a[1], s2p = spec.a[2] * spec.a[3];
            sd.etilde = (type == SeedType::I)
                            ? -(Rational(1) - s2 * q.pow(-v - 1)) * (Rational(1) - s2p * q.pow(v))
                            : -(Rational(1) - s2p * q.pow(-v - 1)) * (Rational(1) - s2 * q.pow(v));
            break;
        }
    }
    if (sd.xi.degree() != v)
        throw degenerate_parameter_error("virtual_seed: xi degree " +
                                         std::to_string(sd.xi.degree()) + " != v for " + spec.str());
    return sd;
}

PolyQ eigen_logderiv_num(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::L:
            // e^{-eta/2} eta^{g/2}
            return -eta_poly() + PolyQ(spec.g, Var::eta);
        case Family::J:
            // sin^g cos^h: p = -g(1+eta) + h(1-eta)
            return PolyQ({spec.h - spec.g, -(spec.g + spec.h)}, Var::eta);
        default:
            throw usage_error("eigen_logderiv_num: oQM families only");
    }
}

PolyQ oqm_logderiv_denom(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::L:
            return PolyQ({Rational(0), Rational(2)}, Var::eta);  // 2 eta
        case Family::J:
            return PolyQ({Rational(2), Rational(0), Rational(-2)}, Var::eta);  // 2(1-eta^2)
        default:
            throw usage_error("oqm_logderiv_denom: oQM families only");
    }
}

OqmOperatorEntry oqm_operator_table(const FamilySpec& spec, SeedType ds, int s_i, int s_ii,
                                    Rational c_f) {
    (void)c_f;
    OqmOperatorEntry e;
    PolyQ one(Rational(1), Var::eta);
    PolyQ et = eta_poly();
    Rational si(s_i), sii(s_ii);
    if (spec.family == Family::L) {
        if (ds == SeedType::I) {
            e.e_f = one;
            e.e_b = et;
            e.et_f = Rational(-2);
            e.et_b = Rational(-2) * (spec.g + si - sii) + Rational(1);
        } else {
            e.e_f = et;
            e.e_b = one;
            e.et_f = Rational(2) * (spec.g + si - sii) + Rational(1);
            e.et_b = Rational(2);
        }
    } else if (spec.family == Family::J) {
        PolyQ plus = (one + et) * kHalf;
        PolyQ minus = (one - et) * kHalf;
        if (ds == SeedType::I) {
            e.e_f = plus;
            e.e_b = minus;
            e.et_f = Rational(-2) * (spec.h + sii - si) - Rational(1);
            e.et_b = Rational(-2) * (spec.g + si - sii) + Rational(1);
        } else {
            e.e_f = minus;
            e.e_b = plus;
            e.et_f = Rational(2) * (spec.g + si - sii) + Rational(1);
            e.et_b = Rational(2) * (spec.h + sii - si) - Rational(1);
        }
    } else {
        throw usage_error("oqm_operator_table: oQM families only");
    }
    return e;
}

IdqmRing make_ring(const FamilySpec& spec) {
    if (spec.family == Family::W) return IdqmRing(IdqmKind::wilson);
    if (spec.family == Family::AW) return IdqmRing(IdqmKind::askey_wilson, spec.t);
    throw usage_error("make_ring: idQM families only");
}

namespace {

// v1/v2 products (a_j + ix) (W) and z^{-1}(1 - a_j z) (AW) over a pair.
IdqmRing::Elem v_product(const IdqmRing& ring, const Rational& a1, const Rational& a2) {
    if (ring.kind() == IdqmKind::wilson) {
        PolyG f1({GaussianRational(a1), GaussianRational::i()}, Var::x);
        PolyG f2({GaussianRational(a2), GaussianRational::i()}, Var::x);
        return {f1 * f2, {}};
    }
    LaurentQ f1 = LaurentQ(Rational(1), Var::z) - LaurentQ::monomial(a1, 1, Var::z);
    LaurentQ f2 = LaurentQ(Rational(1), Var::z) - LaurentQ::monomial(a2, 1, Var::z);
    return {{}, (f1 * f2).mul_monomial(-1)};
}

} // namespace

IdqmOperatorEntry idqm_operator_table(const FamilySpec& spec, SeedType ds, const IdqmRing& ring) {
    if (!(spec.family == Family::W || spec.family == Family::AW))
        throw usage_error("idqm_operator_table: idQM families only");
    // Forward entry carries the once-stepped parameters of the twisted pair:
    // additively -1/2 (W) / multiplicatively t^{-1} (AW), calibrated against
    // the round-trip identity.
    Rational sh_add(-1, 2);
    IdqmOperatorEntry e;
    if (spec.family == Family::W) {
        if (ds == SeedType::I) {
            e.e_f = v_product(ring, spec.a[0] + sh_add, spec.a[1] + sh_add);
            e.e_b = v_product(ring, spec.a[2], spec.a[3]);
        } else {
            e.e_f = v_product(ring, spec.a[2] + sh_add, spec.a[3] + sh_add);
            e.e_b = v_product(ring, spec.a[0], spec.a[1]);
        }
    } else {
        Rational tinv = spec.t.inv();
        if (ds == SeedType::I) {
            e.e_f = v_product(ring, spec.a[0] * tinv, spec.a[1] * tinv);
            e.e_b = v_product(ring, spec.a[2], spec.a[3]);
        } else {
            e.e_f = v_product(ring, spec.a[2] * tinv, spec.a[3] * tinv);
            e.e_b = v_product(ring, spec.a[0], spec.a[1]);
        }
    }
    return e;
}

std::vector<ConventionCandidate> convention_candidates(Family f) {
    switch (f) {
        case Family::L: return {{Rational(2), false}, {Rational(-2), false}, {Rational(2), true}};
        case Family::J: return {{Rational(-4), false}, {Rational(4), false}, {Rational(-4), true}};
        default:        return {{Rational(1), false}, {Rational(1), true}};
    }
}

} // namespace mindex
