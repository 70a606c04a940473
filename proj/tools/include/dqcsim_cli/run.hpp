// run.hpp: run configuration and mode dispatch for the dqcsim tool.

#pragma once

#include <dqcsim/aggregate.hpp>
#include <dqcsim/bath.hpp>
#include <dqcsim/polariton.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dqcsim::cli {

enum class Mode { bands, bath, jsa, svd, dqc };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct Range {
    double min = 0.0;
    double max = 0.0;
    int n = 0;
};

struct RunConfig {
    Mode mode = Mode::dqc;

    std::filesystem::path aggregate_path;
    std::filesystem::path phonon_path;
    // Inline parameter sets take precedence over the paths (manifest reruns).
    std::optional<AggregateSpec> aggregate;
    std::optional<SpectralDensity> phonon;

    double omega_c_cm1 = 15400.0;
    double coupling_cm1 = 100.0;
    std::string reading = "site_local";          // or "common_bath"
    std::string photon_dipoles = "spectator";    // or "zero"

    // Source
    std::string source = "biphoton";   // biphoton | classical
    std::string panel;                 // "", "a".."f", "all"
    double t_ent_fs = 10.0;
    double tau_p_fs = 20.0;
    double pump_cm1 = 30550.0;
    double omega_a1 = 15500.0;
    double omega_b1 = 14500.0;
    double omega_a2 = 14750.0;
    double omega_b2 = 15800.0;
    double classical_width_fs = 20.0;
    double panel_f_omega_b1 = NAN;     // NaN: pump - 15150

    // dqc grid
    int grid = 256;
    double omega1 = NAN;               // NaN: dominant resonance
    Range omega2{NAN, NAN, 0};
    Range omega3{NAN, NAN, 0};
    double threshold = 0.0;
    double relative_sign = -1.0;
    bool swap_omega3 = false;
    int workers = 1;

    // bands
    Range omega_c_scan{14800.0, 16000.0, 25};
    bool demo_widths = false;
    std::uint64_t seed = 42;

    // bath
    Range bath_omega{-2000.0, 2000.0, 801};
    Range bath_time{0.0, 500.0, 501};

    // jsa / svd
    double jsa_half_width_cm1 = 0.0;   // <= 0: default window
    int n_svd = 50;

    std::filesystem::path output_dir;
};

struct RunResult {
    int exit_code = 0;
    std::string message;
    std::vector<std::filesystem::path> outputs;
};

// Exit codes: 0 ok, 2 configuration/schema error, 3 numerical failure.
RunResult run(RunConfig config);

// Output directory: explicit path, else $DQCSIM_OUTPUT_DIR, else ./dqcsim_out.
std::filesystem::path resolve_output_dir(const std::filesystem::path& requested);

// Reads a manifest written by run() back into a config with inline
// parameter sets. Throws ConfigError.
RunConfig config_from_manifest(const std::filesystem::path& manifest);

std::string sha256_file(const std::filesystem::path& path);

// "%.17g"
std::string format_number(double v);

extern const char* const kVersion;

}  // namespace dqcsim::cli
