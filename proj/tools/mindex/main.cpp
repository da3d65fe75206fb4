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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mindex/cli_config.hpp"
#include "mindex/golden.hpp"
#include "mindex/report.hpp"

namespace fs = std::filesystem;
using namespace mindex;

namespace {

// exit codes: 0 all checks pass, 1 usage/infrastructure error,
// 2 conjecture-inconsistency found (counterexample report emitted)
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

class PhaseTimer {
public:
    void lap(nlohmann::json& timing, const std::string& phase) {
        auto t1 = std::chrono::steady_clock::now();
        timing[phase] =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0_).count() / 1000.0;
        t0_ = t1;
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    std::string body = report::serialize(j);
    if (out_path.empty())
        std::cout << body;
    else
        write_file(out_path, body);
}

int run_verify_config(const RunConfig& cfg, const std::string& out_path,
                      const std::string& csv_path, const PolyQ* x_override = nullptr) {
    PhaseTimer timer;
    nlohmann::json timing;

    auto sys = MultiIndexedSystem::build(cfg.spec, cfg.indices);
    timer.lap(timing, "build");

    XCandidate x;
    if (x_override) {
        if (x_override->is_zero()) throw usage_error("--x gives the zero polynomial");
        x.x = *x_override;
        x.band = x.x.degree();
        x.kind = XKind::custom;
    } else {
        x = cfg.y_is_min ? make_x(sys, PolyQ(Rational(1), Var::eta), cfg.checked)
                         : make_x(sys, cfg.y_poly, cfg.checked);
    }
    timer.lap(timing, "make_x");

    RecurrenceTable table = solve_recurrence(sys, x, cfg.n_max);
    timer.lap(timing, "solve");

    BandReport band = band_check(table);
    InvariantTable inv = invariants(table);
    NecessaryConditionResult nec = necessary_condition(sys, x.x);
    timer.lap(timing, "checks");

    Route2Result r2 = route2_coeffs(sys, x, std::min(cfg.n_max, 4));
    bool ratio_const = true;
    Rational ratio(0);
    if (r2.polynomial && !r2.energy_collision) {
        for (const auto& [nk, v] : r2.table.r) {
            Rational v1 = table.at(nk.first, nk.second);
            if (v1.is_zero()) {
                ratio_const = ratio_const && v.is_zero();
                continue;
            }
            Rational q = v / v1;
            if (ratio.is_zero())
                ratio = q;
            else if (q != ratio)
                ratio_const = false;
        }
    }
    timer.lap(timing, "route2");

    nlohmann::json rep;
    rep["schema"] = 1;
    rep["mode"] = "verify";
    rep["config"] = cfg.to_json();
    rep["calibration"] = {
        {"c_F", sys.calibration().convention.c_f.str()},
        {"kappa", sys.calibration().kappa.str()},
        {"anchors", sys.calibration().anchor},
        {"p_route", sys.determinant_built() ? "determinant" : "forward-chain"},
    };
    rep["ell"] = sys.ell();
    rep["band_L"] = table.band;
    rep["xi"] = report::poly_to_json(sys.xi());
    rep["x"] = report::poly_to_json(x.x);
    rep["r_table"] = report::rtable_to_json(table);
    rep["invariants"] = report::invariants_to_json(inv);
    rep["band_check"] = {{"ok", band.ok}};
    rep["necessary_condition"] = {{"pass", nec.pass}};
    if (nec.pass) rep["necessary_condition"]["y"] = report::poly_to_json(nec.y);
    if (r2.energy_collision) {
        rep["route2"] = {{"available", false},
                         {"reason", "an E_{n+k} coincides with a virtual energy at these "
                                    "parameters; the dividing step is undefined"}};
    } else {
        rep["route2"] = {{"available", true},
                         {"polynomial", r2.polynomial},
                         {"constant_ratio_to_route1", r2.polynomial && ratio_const}};
        if (r2.polynomial && ratio_const && !ratio.is_zero()) rep["route2"]["ratio"] = ratio.str();
    }
    if (cfg.y_is_min && !x_override) {
        bool div = x.x[0].is_zero();
        bool deg_drop = div && !x.x.is_zero() &&
                        div_exact(x.x, PolyQ::variable(Var::eta)).degree() == sys.ell();
        rep["observations"] = {{"xmin_divisible_by_eta", div},
                               {"xmin_over_eta_degree_is_ell", deg_drop}};
    }
    bool ok = table.all_consistent() && band.ok && nec.pass &&
              (r2.energy_collision || (r2.polynomial && ratio_const));
    rep["verdict"] = ok ? "consistent" : "counterexample";
    rep["timing_ms"] = timing;

    emit(rep, out_path);
    if (!csv_path.empty()) write_file(csv_path, report::rtable_to_csv(table));
    return ok ? kExitOk : kExitCounterexample;
}

int run_appendixb_case(golden::CaseId cid, const FamilySpec& spec, int n_max,
                       const std::string& out_path) {
    golden::CaseComparison cmp = golden::compare_case(cid, spec, n_max);
    nlohmann::json rep;
    rep["schema"] = 1;
    rep["mode"] = "appendixb";
    rep["case"] = golden::case_name(cid);
    rep["config"] = report::spec_to_json(spec);
    rep["n_max"] = n_max;
    rep["xmin_match"] = cmp.xmin_match;
    rep["consistent"] = cmp.consistent;
    rep["band_L"] = cmp.band;
    rep["band_expected"] = golden::case_band(cid);
    rep["invariants_checked"] = {{"rho", cmp.rho_checked},
                                 {"sigma", cmp.sigma_checked},
                                 {"tau", cmp.tau_checked},
                                 {"reference_undefined", cmp.reference_undefined},
                                 {"solver_undefined", cmp.solver_undefined}};
    rep["mismatches"] = cmp.mismatches;
    if (cmp.n_min > 0)
        rep["solver_note"] = "the leading members are not constructible at these parameters "
                             "(a virtual seed coincides with an eigenstate); relations and "
                             "invariants are verified from n = " + std::to_string(cmp.n_min);
    if (cmp.reference_undefined > 0) {
        rep["external"] =
            "some printed reference entries are unavailable at these parameters (externally "
            "hosted r_{n,0} data or a removable singularity of the printed closed form); the "
            "affected invariants are skipped and reported, and the route-1/route-2 "
            "cross-check runs instead";
        rep["route_crosscheck"] = {{"ran", cmp.route2_ran}, {"ok", cmp.route2_ok}};
    }
    rep["verdict"] = cmp.ok() ? "match" : "mismatch";
    emit(rep, out_path);
    return cmp.ok() ? kExitOk : kExitCounterexample;
}

int run_equivalences(Family fam, const FamilySpec& base, int n_max, const std::string& out_path) {
    nlohmann::json rep;
    rep["schema"] = 1;
    rep["mode"] = "appendixb";
    rep["equivalences"] = nlohmann::json::array();
    bool all_ok = true;
    for (const auto& eq : golden::equivalences(fam, base)) {
        Rational c(0);
        bool ok = golden::equivalence_holds(eq, n_max, &c);
        rep["equivalences"].push_back(
            {{"name", eq.name}, {"holds", ok}, {"constant", ok ? c.str() : std::string("-")}});
        all_ok = all_ok && ok;
    }
    rep["verdict"] = all_ok ? "match" : "mismatch";
    emit(rep, out_path);
    return all_ok ? kExitOk : kExitCounterexample;
}

int run_calibrate(const FamilySpec& spec, const IndexSet& d, const std::string& out_path) {
    auto sys = MultiIndexedSystem::build(spec, d);
    nlohmann::json rep;
    rep["schema"] = 1;
    rep["mode"] = "calibrate";
    rep["config"] = report::spec_to_json(spec);
    rep["indices"] = d.str();
    rep["convention"] = {
        {"c_F", sys.calibration().convention.c_f.str()},
        {"swap_twists", sys.calibration().convention.swap_twists},
    };
    rep["kappa"] = sys.calibration().kappa.str();
    rep["anchors"] = sys.calibration().anchor;
    rep["round_trip"] = "B-hat F-hat = (E_n - E~) id verified exactly for n = 0..3";
    rep["p_route"] = sys.determinant_built() ? "determinant" : "forward-chain";
    emit(rep, out_path);
    return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& outdir) {
    std::ifstream is(config_path);
    if (!is) {
        std::cerr << "sweep: cannot read " << config_path << "\n";
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    std::vector<RunConfig> instances = parse_sweep_toml(text);
    fs::create_directories(outdir);
    int worst = kExitOk;
    size_t ran = 0, skipped = 0;
    for (const auto& cfg : instances) {
        std::string hash = report::content_hash(cfg.to_json());
        fs::path out = fs::path(outdir) / (hash + ".json");
        if (fs::exists(out)) {
            ++skipped;  // resumable: content-addressed outputs are final
            continue;
        }
        int rc = run_verify_config(cfg, out.string(), "");
        worst = std::max(worst, rc);
        ++ran;
    }
    std::cout << "sweep: " << ran << " instance(s) run, " << skipped << " already present\n";
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for multi-indexed orthogonal polynomial "
                 "recurrence relations"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for the parameter flag

    std::string family_s, indices_s = "1I", g_s, h_s, a_s, t_s, y_s = "min";
    std::string out_path, csv_path, case_s, equiv_s, config_path, outdir = "sweep-out";
    std::string x_s;
    int n_max = 6;
    bool checked = false;

    auto add_common = [&](CLI::App* cmd, bool with_y) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--family", family_s, "family: L, J, W or AW");
        cmd->add_option("--indices", indices_s, "index set, e.g. 1I,2II");
        cmd->add_option("--g", g_s, "rational g (L, J)");
        cmd->add_option("--h", h_s, "rational h (J)");
        cmd->add_option("--a", a_s, "a1,a2,a3,a4 rationals (W, AW)");
        cmd->add_option("--t", t_s, "rational t = q^(1/2) (AW)");
        cmd->add_option("--nmax", n_max, "largest n verified");
        cmd->add_option("--out", out_path, "write the JSON report here (default stdout)");
        if (with_y) {
            cmd->add_option("--y", y_s, "Y polynomial: 'min' or coefficients c0,c1,...");
            cmd->add_option("--x", x_s,
                            "verify an explicit X candidate (coefficients c0,c1,...) instead");
            cmd->add_option("--csv", csv_path, "also export the r-table as CSV");
            cmd->add_flag("--checked", checked, "enable per-call ring verifications");
        }
    };

    CLI::App* verify = app.add_subcommand("verify", "build a system and verify its recurrence");
    add_common(verify, true);

    CLI::App* appxb = app.add_subcommand("appendixb", "compare against the published tables");
    appxb->add_option("--case", case_s, "one of L.Ex1..3, J.Ex1..3, W.Ex1, AW.Ex1");
    appxb->add_option("--equiv", equiv_s, "check the printed equivalences for a family (L or J)");
    add_common(appxb, false);

    CLI::App* calib = app.add_subcommand("calibrate", "report calibrated conventions and scalars");
    add_common(calib, false);

    CLI::App* sweep = app.add_subcommand("sweep", "run every instance of a TOML config");
    sweep->set_help_flag("--help", "print help");
    sweep->add_option("--config", config_path, "TOML file enumerating instances")->required();
    sweep->add_option("--outdir", outdir, "directory for per-instance reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(sweep)) return run_sweep(config_path, outdir);

        if (app.got_subcommand(calib)) {
            FamilySpec spec = spec_from_strings(family_s, g_s, h_s, a_s, t_s);
            return run_calibrate(spec, IndexSet::parse(indices_s), out_path);
        }

        if (app.got_subcommand(appxb)) {
            if (!equiv_s.empty()) {
                auto fam = family_from_string(equiv_s);
                if (!fam || !is_oqm(*fam)) throw usage_error("--equiv expects L or J");
                FamilySpec base =
                    *fam == Family::L
                        ? FamilySpec::laguerre(g_s.empty() ? Rational(7, 3)
                                                           : Rational::from_string(g_s))
                        : FamilySpec::jacobi(
                              g_s.empty() ? Rational(5, 2) : Rational::from_string(g_s),
                              h_s.empty() ? Rational(6, 5) : Rational::from_string(h_s));
                return run_equivalences(*fam, base, std::min(n_max, 5), out_path);
            }
            auto cid = golden::case_from_string(case_s);
            if (!cid) throw usage_error("unknown --case '" + case_s + "'");
            std::string fam_name = family_name(golden::case_family(*cid));
            FamilySpec spec = spec_from_strings(fam_name, g_s, h_s, a_s, t_s);
            return run_appendixb_case(*cid, spec, n_max, out_path);
        }

        RunConfig cfg =
            make_run_config(family_s, indices_s, g_s, h_s, a_s, t_s, y_s, n_max, checked);
        if (!x_s.empty()) {
            PolyQ x = parse_eta_poly(x_s);
            return run_verify_config(cfg, out_path, csv_path, &x);
        }
        return run_verify_config(cfg, out_path, csv_path);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
