// Scenario-driven front end for the casimir core library. Subcommands
// compute single points or sweeps and emit CSV plus an optional JSON
// diagnostics sidecar; all CSV numbers are "%.15e" so identical inputs give
// byte-identical files.

#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/plasma_gap.hpp"
#include "casimir/resonance.hpp"
#include "casimir/scenario.hpp"
#include "casimir/selftest.hpp"
#include "casimir/sweep.hpp"
#include "casimir/units.hpp"

#ifndef CASIMIR_CLI_VERSION
#define CASIMIR_CLI_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace casimir;

struct CommonFlags {
    std::string scenario_path;
    std::string out_path;
    std::string json_path;
    double tol = 0.0;  // 0 means "use the subcommand default"
    int threads = 1;
    std::string units;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_scenario = true) {
    if (with_scenario) {
        cmd->add_option("scenario", f.scenario_path, "scenario file")
            ->required()
            ->check(CLI::ExistingFile);
    }
    cmd->add_option("--out", f.out_path, "write CSV (or report text) here");
    cmd->add_option("--json", f.json_path, "write a JSON diagnostics sidecar");
    cmd->add_option("--tol", f.tol, "relative tolerance target");
    cmd->add_option("--threads", f.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--units", f.units, "report units: si or natural");
}

double pick_tol(const CommonFlags& f, double fallback) {
    return f.tol > 0.0 ? f.tol : fallback;
}

UnitSystem pick_units(const CommonFlags& f, const Scenario& sc) {
    return f.units.empty() ? sc.units : unit_system_from_string(f.units);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw InputError("failed writing output file: " + path);
    }
}

template <typename T>
const T& need(const std::optional<T>& v, const char* what) {
    if (!v) {
        throw InputError(std::string("scenario is missing ") + what);
    }
    return *v;
}

template <class... Ts>
struct overload : Ts... {
    using Ts::operator()...;
};

json describe_model(const DielectricModel& m) {
    json j;
    j["model"] = model_name(m);
    std::visit(overload{
                   [&](const ConstantEps& c) { j["eps"] = c.eps; },
                   [&](const Plasma& p) { j["omega_p_rad_s"] = p.omega_p; },
                   [&](const Drude& d) {
                       j["omega_p_rad_s"] = d.omega_p;
                       j["gamma_rad_s"] = d.gamma_diss;
                   },
                   [&](const Oscillator& o) {
                       json terms = json::array();
                       for (const auto& t : o.terms) {
                           terms.push_back({{"strength", t.strength},
                                            {"omega0_rad_s", t.omega0}});
                       }
                       j["terms"] = std::move(terms);
                   },
                   [&](const auto&) {},
               },
               m);
    return j;
}

void write_json(const std::string& path, json j) {
    j["version"] = CASIMIR_CLI_VERSION;
    write_file(path, j.dump(2) + "\n");
}

void print_quantity(const char* label, double si_value, Dimension dim,
                    UnitSystem us) {
    const Quantity q = convert(Quantity{si_value, dim, UnitSystem::SI}, us);
    std::printf("%-18s = %.15e %s\n", label, q.value,
                unit_label(dim, us).c_str());
}

PlanarScenario planar_from(const Scenario& sc) {
    return PlanarScenario{need(sc.halfspace, "[materials] halfspace_model"),
                          need(sc.gap, "[materials] gap_model"),
                          need(sc.separation, "[geometry] d_um or d_fm"),
                          need(sc.temperature, "[thermal] T_K")};
}

int run_free_energy(const CommonFlags& f) {
    const Scenario sc = parse_scenario_file(f.scenario_path);
    const UnitSystem us = pick_units(f, sc);
    const PlanarScenario ps = planar_from(sc);
    EngineOptions opt;
    opt.tol = pick_tol(f, 1e-8);
    opt.threads = f.threads;
    opt.keep_breakdown = !f.json_path.empty();

    EnergyResult r;
    bool ok = true;
    std::string fail_reason;
    try {
        r = ps.temperature > 0.0 ? free_energy(ps, opt)
                                 : free_energy_zero_temperature(ps, opt);
    } catch (const ConvergenceError& e) {
        r.value = e.partial_value;
        r.abs_error = e.partial_error;
        r.quad_evals = e.evaluations;
        ok = false;
        fail_reason = e.what();
    }

    print_quantity("free energy", r.value, Dimension::EnergyPerArea, us);
    print_quantity("abs error bound", r.abs_error, Dimension::EnergyPerArea, us);
    std::printf("%-18s = %d\n", "matsubara terms", r.n_terms_used);
    std::printf("%-18s = %zu\n", "quad evals", r.quad_evals);
    if (!ok) {
        std::printf("%-18s = FAILED: %s\n", "status", fail_reason.c_str());
    }

    const CurveRecord rec{ps.separation,
                          ps.temperature,
                          r.value,
                          r.abs_error,
                          static_cast<std::size_t>(r.n_terms_used),
                          r.quad_evals,
                          ok};
    if (!f.out_path.empty()) {
        SweepResult one;
        one.records = {rec};
        one.all_ok = ok;
        write_file(f.out_path, render_sweep_csv(one));
    }
    if (!f.json_path.empty()) {
        json j;
        j["subcommand"] = "free-energy";
        j["scenario"] = f.scenario_path;
        j["inputs"] = {{"separation_m", ps.separation},
                       {"temperature_K", ps.temperature},
                       {"tol", opt.tol},
                       {"threads", opt.threads},
                       {"halfspace", describe_model(ps.halfspace)},
                       {"gap", describe_model(ps.gap)}};
        j["result"] = {{"value_J_per_m2", r.value},
                       {"abs_error_J_per_m2", r.abs_error},
                       {"n_terms", r.n_terms_used},
                       {"quad_evals", r.quad_evals},
                       {"status", ok ? "ok" : "failed"}};
        j["matsubara"] = {{"n_max", r.grid.n_max},
                          {"tail_estimate_J_per_m2", r.grid.tail_estimate}};
        if (!r.breakdown.empty()) {
            json terms = json::array();
            for (const TermBreakdown& t : r.breakdown) {
                terms.push_back({{"n", t.n},
                                 {"xi_rad_s", t.xi},
                                 {"tm_J_per_m2", t.tm},
                                 {"te_J_per_m2", t.te}});
            }
            j["breakdown"] = std::move(terms);
        }
        write_json(f.json_path, std::move(j));
    }
    return ok ? 0 : 3;
}

int run_sweep_cmd(const CommonFlags& f, const std::string& force_path) {
    const Scenario sc = parse_scenario_file(f.scenario_path);
    SweepRequest req;
    req.halfspace = need(sc.halfspace, "[materials] halfspace_model");
    req.gap = need(sc.gap, "[materials] gap_model");
    req.spec = need(sc.sweep, "[sweep] section");
    if (req.spec.variable == "d") {
        req.temperature = need(sc.temperature, "[thermal] T_K");
    } else {
        req.separation = need(sc.separation, "[geometry] d_um");
    }
    req.tol = pick_tol(f, 1e-8);
    req.threads = f.threads;

    const SweepResult res = run_sweep(req);
    const std::string csv = render_sweep_csv(res);
    if (f.out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(f.out_path, csv);
        std::printf("wrote %zu records to %s\n", res.records.size(),
                    f.out_path.c_str());
    }
    if (!res.all_ok) {
        std::fprintf(stderr,
                     "sweep: some points failed to converge; rows are flagged "
                     "in the status column\n");
    }

    if (!force_path.empty()) {
        if (req.spec.variable != "d") {
            throw InputError("--force requires a sweep over d");
        }
        if (res.all_ok) {
            write_file(force_path, render_force_csv(force_from_energy(res.records)));
            std::printf("wrote pressure curve to %s\n", force_path.c_str());
        } else {
            std::fprintf(stderr,
                         "sweep: skipping --force output, curve has failed "
                         "points\n");
        }
    }

    if (!f.json_path.empty()) {
        json rows = json::array();
        for (const CurveRecord& r : res.records) {
            rows.push_back({{"d_m", r.separation},
                            {"T_K", r.temperature},
                            {"value_J_per_m2", r.value},
                            {"abs_error_J_per_m2", r.abs_error},
                            {"n_terms", r.n_terms},
                            {"quad_evals", r.quad_evals},
                            {"status", r.ok ? "ok" : "failed"}});
        }
        json j;
        j["subcommand"] = "sweep";
        j["scenario"] = f.scenario_path;
        j["inputs"] = {{"variable", req.spec.variable},
                       {"points", req.spec.points},
                       {"tol", req.tol},
                       {"threads", req.threads},
                       {"halfspace", describe_model(req.halfspace)},
                       {"gap", describe_model(req.gap)}};
        j["all_ok"] = res.all_ok;
        j["records"] = std::move(rows);
        write_json(f.json_path, std::move(j));
    }
    return res.all_ok ? 0 : 3;
}

int run_extra_term(const CommonFlags& f, int n_cap) {
    const Scenario sc = parse_scenario_file(f.scenario_path);
    const PlanarScenario ps = planar_from(sc);
    const double tol = pick_tol(f, 1e-4);

    ExtraTermResult et;
    bool ok = true;
    std::string fail_reason;
    try {
        et = extra_term(ps, tol, n_cap);
    } catch (const ConvergenceError& e) {
        et.value_real = e.partial_value;
        et.quad_evals = e.evaluations;
        ok = false;
        fail_reason = e.what();
    }

    std::printf("%-18s = %.15e J/m^2\n", "value_real", et.value_real);
    std::printf("%-18s = %.15e J/m^2\n", "value_imag_part", et.value_imag_part);
    std::printf("%-18s = %.3e J/m^2 (conservative, series truncation)\n",
                "remainder", et.remainder_estimate);
    std::printf("%-18s = %d\n", "series terms", et.n_series_terms);
    std::printf("%-18s = %zu\n", "quad evals", et.quad_evals);
    if (!ok) {
        std::printf("%-18s = FAILED: %s\n", "status", fail_reason.c_str());
    }

    if (!f.out_path.empty()) {
        std::string csv =
            "d[m],T[K],value_real[J/m^2],value_imag_part[J/m^2],"
            "remainder_estimate[J/m^2],n_series_terms,quad_evals,status\n";
        csv += format_sci(ps.separation) + ',' + format_sci(ps.temperature) +
               ',' + format_sci(et.value_real) + ',' +
               format_sci(et.value_imag_part) + ',' +
               format_sci(et.remainder_estimate) + ',' +
               std::to_string(et.n_series_terms) + ',' +
               std::to_string(et.quad_evals) + ',' + (ok ? "ok" : "failed") +
               '\n';
        write_file(f.out_path, csv);
    }
    if (!f.json_path.empty()) {
        json windows = json::array();
        for (const auto& [lo, hi] : et.pv_windows) {
            windows.push_back({{"xi_lo_rad_s", lo}, {"xi_hi_rad_s", hi}});
        }
        json j;
        j["subcommand"] = "extra-term";
        j["scenario"] = f.scenario_path;
        j["inputs"] = {{"separation_m", ps.separation},
                       {"temperature_K", ps.temperature},
                       {"tol", tol},
                       {"n_cap", n_cap},
                       {"halfspace", describe_model(ps.halfspace)}};
        j["result"] = {{"value_real_J_per_m2", et.value_real},
                       {"value_imag_part_J_per_m2", et.value_imag_part},
                       {"n_series_terms", et.n_series_terms},
                       {"remainder_estimate_J_per_m2", et.remainder_estimate},
                       {"quad_error_J_per_m2", et.quad_error},
                       {"quad_evals", et.quad_evals},
                       {"status", ok ? "ok" : "failed"}};
        j["pv_windows"] = std::move(windows);
        write_json(f.json_path, std::move(j));
    }
    return ok ? 0 : 3;
}

int run_plasma_gap(const CommonFlags& f) {
    const Scenario sc = parse_scenario_file(f.scenario_path);
    const UnitSystem us = pick_units(f, sc);
    const double d = need(sc.separation, "[geometry] d_um or d_fm");
    const double t = need(sc.temperature, "[thermal] T_K");
    const double tol = pick_tol(f, 1e-10);

    PlasmaGapParams params;
    if (sc.kappa_source == "pair-density") {
        params = gap_params_from_pair_density(d, t);
    } else {
        params = make_gap_params(
            d, t, need(sc.kappa_per_m, "[materials] kappa_per_m"));
    }

    const EnergyResult series = screened_free_energy(params, tol);
    const ScreenedExpansion ex = screened_expansion(params);

    std::printf("%-18s = %.6e 1/m (%s), kappa*d = %.4f\n", "kappa",
                params.kappa_pl, params.kappa_source.c_str(),
                params.kappa_pl * d);
    print_quantity("free energy", series.value, Dimension::EnergyPerArea, us);
    print_quantity("abs error bound", series.abs_error,
                   Dimension::EnergyPerArea, us);
    std::printf("%-18s = %d\n", "matsubara terms", series.n_terms_used);
    print_quantity("expansion n=0", ex.term_n0, Dimension::EnergyPerArea, us);
    print_quantity("expansion n>0", ex.term_n_pos, Dimension::EnergyPerArea, us);

    if (!f.out_path.empty()) {
        std::string csv =
            "d[m],T[K],kappa[1/m],value[J/m^2],abs_error[J/m^2],"
            "term_n0[J/m^2],term_n_pos[J/m^2],n_terms,status\n";
        csv += format_sci(d) + ',' + format_sci(t) + ',' +
               format_sci(params.kappa_pl) + ',' + format_sci(series.value) +
               ',' + format_sci(series.abs_error) + ',' +
               format_sci(ex.term_n0) + ',' + format_sci(ex.term_n_pos) + ',' +
               std::to_string(series.n_terms_used) + ",ok\n";
        write_file(f.out_path, csv);
    }
    if (!f.json_path.empty()) {
        json j;
        j["subcommand"] = "plasma-gap";
        j["scenario"] = f.scenario_path;
        j["inputs"] = {{"separation_m", d},
                       {"temperature_K", t},
                       {"tol", tol},
                       {"kappa_source", params.kappa_source}};
        j["params"] = {{"kappa_per_m", params.kappa_pl},
                       {"eta_per_m", params.eta},
                       {"pair_density_per_m3", params.rho},
                       {"rho_star", params.rho_star}};
        j["result"] = {{"value_J_per_m2", series.value},
                       {"abs_error_J_per_m2", series.abs_error},
                       {"n_terms", series.n_terms_used},
                       {"term_n0_J_per_m2", ex.term_n0},
                       {"term_n_pos_J_per_m2", ex.term_n_pos}};
        write_json(f.json_path, std::move(j));
    }
    return 0;
}

int run_resonance(const CommonFlags& f) {
    const Scenario sc = parse_scenario_file(f.scenario_path);
    const PolarizabilityModel pol =
        need(sc.polarizability, "[materials] alpha0_m3");
    const double t = need(sc.temperature, "[thermal] T_K");
    const double tol = pick_tol(f, 1e-10);

    std::vector<double> grid;
    if (sc.sweep) {
        if (sc.sweep->variable != "d") {
            throw InputError("resonance sweeps run over d only");
        }
        grid = sweep_grid(*sc.sweep);
    } else {
        grid.push_back(need(sc.separation, "[geometry] d_um (or a [sweep] section)"));
    }

    std::string csv = "d[m],U_series[J],U_closed[J],U_n0[J],x\n";
    json rows = json::array();
    for (const double d : grid) {
        const ResonanceQuery q{d, t, sc.branch_sign};
        const ResonanceSum series = resonance_series(q, pol, tol);
        const double closed = resonance_closed_form(q, pol.alpha0);
        const double n0 = resonance_n0(d, t, pol.alpha0, sc.branch_sign);
        csv += format_sci(d) + ',' + format_sci(series.value) + ',' +
               format_sci(closed) + ',' + format_sci(n0) + ',' +
               format_sci(series.x) + '\n';
        if (!f.json_path.empty()) {
            rows.push_back({{"d_m", d},
                            {"U_series_J", series.value},
                            {"U_closed_J", closed},
                            {"U_n0_J", n0},
                            {"x", series.x},
                            {"series_abs_error_J", series.abs_error},
                            {"n_terms", series.n_terms}});
        }
    }

    if (f.out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(f.out_path, csv);
        std::printf("wrote %zu records to %s\n", grid.size(),
                    f.out_path.c_str());
    }
    if (!f.json_path.empty()) {
        json j;
        j["subcommand"] = "resonance";
        j["scenario"] = f.scenario_path;
        j["inputs"] = {{"temperature_K", t},
                       {"alpha0_m3", pol.alpha0},
                       {"mode", pol.mode == PolarizabilityMode::London
                                    ? "london"
                                    : "static"},
                       {"branch_sign", sc.branch_sign},
                       {"tol", tol}};
        j["records"] = std::move(rows);
        write_json(f.json_path, std::move(j));
    }
    return 0;
}

int run_nuclear_demo(const CommonFlags& f, bool acknowledged) {
    if (!acknowledged) {
        throw InputError(
            "nuclear-demo is an order-of-magnitude illustration with "
            "non-validated inputs; pass --demo-acknowledge to run it");
    }
    const Scenario sc = parse_scenario_file(f.scenario_path);
    const double d = need(sc.separation, "[geometry] d_fm");
    const double t = need(sc.temperature, "[thermal] T_K");
    const double d_fm = d / si::metre_per_fm;

    const NuclearDemoReport report = nuclear_demo(d_fm, t);
    const std::string text = format_report(report);
    std::fputs(text.c_str(), stdout);
    if (!f.out_path.empty()) {
        write_file(f.out_path, text);
    }
    if (!f.json_path.empty()) {
        json j;
        j["subcommand"] = "nuclear-demo";
        j["scenario"] = f.scenario_path;
        j["disclaimer"] = report.disclaimer;
        j["inputs"] = {{"d_fm", report.d_fm}, {"temperature_K", t}};
        j["params"] = {{"kappa_per_m", report.params.kappa_pl},
                       {"kappa_source", report.params.kappa_source},
                       {"omega_p_rad_s", report.omega_p},
                       {"pair_density_per_m3", report.params.rho},
                       {"eta_per_m", report.params.eta},
                       {"rho_star", report.params.rho_star}};
        j["result"] = {{"term_n0_J_per_m2", report.term_n0},
                       {"term_n_pos_J_per_m2", report.term_n_pos},
                       {"term_n0_patch_MeV", report.term_n0_mev},
                       {"term_n_pos_patch_MeV", report.term_n_pos_mev}};
        write_json(f.json_path, std::move(j));
    }
    return 0;
}

int run_selftest(const CommonFlags& f) {
    const std::vector<CheckResult> checks = run_acceptance_checks();
    const std::string report = render_report(checks);
    std::fputs(report.c_str(), stdout);
    if (!f.out_path.empty()) {
        write_file(f.out_path, report);
    }
    if (!f.json_path.empty()) {
        json rows = json::array();
        for (const CheckResult& c : checks) {
            rows.push_back({{"id", c.id},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"detail", c.detail}});
        }
        json j;
        j["subcommand"] = "selftest";
        j["all_passed"] = all_passed(checks);
        j["checks"] = std::move(rows);
        write_json(f.json_path, std::move(j));
    }
    return all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-temperature dispersion-force engine"};
    app.set_version_flag("--version", CASIMIR_CLI_VERSION);
    app.require_subcommand(1);

    CommonFlags free_f;
    CLI::App* cmd_free =
        app.add_subcommand("free-energy", "plate free energy at one (d, T)");
    add_common(cmd_free, free_f);

    CommonFlags sweep_f;
    std::string force_path;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "free-energy curve over d or T");
    add_common(cmd_sweep, sweep_f);
    cmd_sweep->add_option("--force", force_path,
                          "also write the pressure curve -dF/dd to this path");

    CommonFlags extra_f;
    int n_cap = 12;
    CLI::App* cmd_extra = app.add_subcommand(
        "extra-term", "dissipation-asymmetry diagnostic series");
    add_common(cmd_extra, extra_f);
    cmd_extra->add_option("--n-cap", n_cap, "series terms to sum (default 12)")
        ->check(CLI::PositiveNumber);

    CommonFlags gap_f;
    CLI::App* cmd_gap = app.add_subcommand(
        "plasma-gap", "screened ideal-metal energy with a plasma-filled gap");
    add_common(cmd_gap, gap_f);

    CommonFlags res_f;
    CLI::App* cmd_res = app.add_subcommand(
        "resonance", "excited-state pair interaction curve over d");
    add_common(cmd_res, res_f);

    CommonFlags demo_f;
    bool acknowledged = false;
    CLI::App* cmd_demo = app.add_subcommand(
        "nuclear-demo", "order-of-magnitude short-distance screened-gap demo");
    add_common(cmd_demo, demo_f);
    cmd_demo->add_flag("--demo-acknowledge", acknowledged,
                       "acknowledge that this is not a validated prediction");

    CommonFlags self_f;
    CLI::App* cmd_self =
        app.add_subcommand("selftest", "run the acceptance-check suite");
    add_common(cmd_self, self_f, /*with_scenario=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_free->parsed()) {
            return run_free_energy(free_f);
        }
        if (cmd_sweep->parsed()) {
            return run_sweep_cmd(sweep_f, force_path);
        }
        if (cmd_extra->parsed()) {
            return run_extra_term(extra_f, n_cap);
        }
        if (cmd_gap->parsed()) {
            return run_plasma_gap(gap_f);
        }
        if (cmd_res->parsed()) {
            return run_resonance(res_f);
        }
        if (cmd_demo->parsed()) {
            return run_nuclear_demo(demo_f, acknowledged);
        }
        if (cmd_self->parsed()) {
            return run_selftest(self_f);
        }
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const NumericsError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
