// dqcsim: command-line entry point.
//
//   dqcsim bands|bath|jsa|svd|dqc [options]
//   dqcsim rerun --manifest path/to/manifest.json [--out dir]

#include "dqcsim_cli/run.hpp"

#include <dqcsim/errors.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using dqcsim::cli::Range;
using dqcsim::cli::RunConfig;

void add_range(CLI::App* app, const std::string& name, Range& r, const std::string& help, bool with_n) {
    auto* opt = app->add_option_function<std::vector<double>>(
        name,
        [&r, with_n](const std::vector<double>& v) {
            r.min = v.at(0);
            r.max = v.at(1);
            if (with_n) {
                if (v.size() != 3) throw CLI::ValidationError("expected min,max,n");
                r.n = static_cast<int>(v[2]);
            }
        },
        help);
    opt->delimiter(',')->expected(with_n ? 3 : 2);
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--aggregate", c.aggregate_path, "aggregate parameter JSON");
    app->add_option("--phonon", c.phonon_path, "phonon parameter JSON");
    app->add_option("--omega-c", c.omega_c_cm1, "cavity frequency (cm^-1)");
    app->add_option("--gc", c.coupling_cm1, "cavity-exciton coupling (cm^-1)");
    app->add_option("--reading", c.reading, "phonon overlap: site_local | common_bath");
    app->add_option("--photon-dipoles", c.photon_dipoles, "photon-sector dipoles: spectator | zero");
    app->add_option("--out", c.output_dir, "output directory (default $DQCSIM_OUTPUT_DIR or ./dqcsim_out)");
    app->add_option("--workers", c.workers, "worker threads for grid evaluation");
    app->add_option("--seed", c.seed, "seed for the demo band widths");
}

void add_source(CLI::App* app, RunConfig& c) {
    app->add_option("--source", c.source, "biphoton | classical");
    app->add_option("--tent", c.t_ent_fs, "entanglement time T2 - T1 (fs)");
    app->add_option("--taup", c.tau_p_fs, "pump width (fs)");
    app->add_option("--pump", c.pump_cm1, "pump frequency (cm^-1)");
    app->add_option("--omega-a1", c.omega_a1, "first pair, photon a center (cm^-1)");
    app->add_option("--omega-b1", c.omega_b1, "first pair, photon b center (cm^-1)");
    app->add_option("--omega-a2", c.omega_a2, "second pair, photon a center (cm^-1)");
    app->add_option("--omega-b2", c.omega_b2, "second pair, photon b center (cm^-1)");
    app->add_option("--taug", c.classical_width_fs, "classical pulse width (fs)");
    app->add_option("--grid", c.grid, "points per axis");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entangled-biphoton double-quantum-coherence spectroscopy of a cavity polariton aggregate"};
    app.require_subcommand(1);
    RunConfig c;
    std::filesystem::path manifest;

    auto* bands = app.add_subcommand("bands", "polariton bands over a cavity-frequency scan");
    add_common(bands, c);
    add_range(bands, "--omega-c-scan", c.omega_c_scan, "cavity scan min,max,n (cm^-1)", true);
    bands->add_flag("--demo-widths", c.demo_widths, "draw illustrative Gaussian widths instead of computed rates");

    auto* bath = app.add_subcommand("bath", "spectral density and bath correlation function");
    add_common(bath, c);
    add_range(bath, "--omega-grid", c.bath_omega, "frequency grid min,max,n (cm^-1)", true);
    add_range(bath, "--time-grid", c.bath_time, "time grid min,max,n (fs)", true);

    auto* jsa = app.add_subcommand("jsa", "joint spectral amplitude grid");
    add_common(jsa, c);
    add_source(jsa, c);
    jsa->add_option("--half-width", c.jsa_half_width_cm1, "grid half width (cm^-1); <= 0 for default");

    auto* svd = app.add_subcommand("svd", "Schmidt spectrum of the joint spectral amplitude");
    add_common(svd, c);
    add_source(svd, c);
    svd->add_option("--half-width", c.jsa_half_width_cm1, "grid half width (cm^-1); <= 0 for default");
    svd->add_option("--n-svd", c.n_svd, "number of singular values kept");

    auto* dqc = app.add_subcommand("dqc", "double-quantum-coherence spectrum");
    add_common(dqc, c);
    add_source(dqc, c);
    dqc->add_option("--panel", c.panel, "a..f or all (six-panel sweep)");
    dqc->add_option("--panel-f-omega-b1", c.panel_f_omega_b1, "panel f photon b center (default pump - 15150)");
    dqc->add_option("--omega1", c.omega1, "fixed Omega_1 (default: dominant one-polariton resonance)");
    add_range(dqc, "--omega2-range", c.omega2, "Omega_2 window min,max (cm^-1)", false);
    add_range(dqc, "--omega3-range", c.omega3, "Omega_3 window min,max (cm^-1)", false);
    dqc->add_option("--threshold", c.threshold, "relative dipole-weight cut in [0, 1]");
    dqc->add_option("--relative-sign", c.relative_sign, "sign of pathway b relative to a");
    dqc->add_flag("--swap-omega3", c.swap_omega3, "debug: exchange the Omega_3 resonances of the two pathways");

    auto* rerun = app.add_subcommand("rerun", "repeat a run from its manifest alone");
    rerun->add_option("--manifest", manifest, "manifest.json of a previous run")->required();
    std::filesystem::path rerun_out;
    rerun->add_option("--out", rerun_out, "output directory");
    std::optional<int> rerun_workers;
    rerun->add_option("--workers", rerun_workers, "override worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rerun->parsed()) {
            c = dqcsim::cli::config_from_manifest(manifest);
            c.output_dir = rerun_out;
            if (rerun_workers) c.workers = *rerun_workers;
        } else {
            c.mode = dqcsim::cli::parse_mode(app.get_subcommands().front()->get_name());
        }
    } catch (const dqcsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    const auto result = dqcsim::cli::run(c);
    (result.exit_code == 0 ? std::cout : std::cerr) << result.message << '\n';
    return result.exit_code;
}
