#include "dqcsim_cli/run.hpp"

#include <dqcsim/biphoton.hpp>
#include <dqcsim/errors.hpp>
#include <dqcsim/protocol.hpp>
#include <dqcsim/signal.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#ifndef DQCSIM_DEFAULT_DATA_DIR
#define DQCSIM_DEFAULT_DATA_DIR "data"
#endif

namespace dqcsim::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

const char* const kVersion = "0.3.0";

namespace {

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::string& header) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw ConfigError("cannot write '" + path.string() + "'");
        out_ << header << '\n';
    }
    void row(std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) out_ << ',';
            out_ << format_number(v);
            first = false;
        }
        out_ << '\n';
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
    std::ofstream out_;
};

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

json num(double v) { return std::isnan(v) ? json(nullptr) : json(v); }
double num_or_nan(const json& j) { return j.is_null() ? NAN : j.get<double>(); }

json range_json(const Range& r) { return {{"min", num(r.min)}, {"max", num(r.max)}, {"n", r.n}}; }
Range range_from(const json& j) { return {num_or_nan(j.at("min")), num_or_nan(j.at("max")), j.at("n").get<int>()}; }

json config_json(const RunConfig& c) {
    return {
        {"mode", to_string(c.mode)},
        {"omega_c_cm1", c.omega_c_cm1},
        {"coupling_cm1", c.coupling_cm1},
        {"reading", c.reading},
        {"photon_dipoles", c.photon_dipoles},
        {"source", c.source},
        {"panel", c.panel},
        {"t_ent_fs", c.t_ent_fs},
        {"tau_p_fs", c.tau_p_fs},
        {"pump_cm1", c.pump_cm1},
        {"omega_a1", c.omega_a1},
        {"omega_b1", c.omega_b1},
        {"omega_a2", c.omega_a2},
        {"omega_b2", c.omega_b2},
        {"classical_width_fs", c.classical_width_fs},
        {"panel_f_omega_b1", num(c.panel_f_omega_b1)},
        {"grid", c.grid},
        {"omega1", num(c.omega1)},
        {"omega2", range_json(c.omega2)},
        {"omega3", range_json(c.omega3)},
        {"threshold", c.threshold},
        {"relative_sign", c.relative_sign},
        {"swap_omega3", c.swap_omega3},
        {"workers", c.workers},
        {"omega_c_scan", range_json(c.omega_c_scan)},
        {"demo_widths", c.demo_widths},
        {"seed", c.seed},
        {"bath_omega", range_json(c.bath_omega)},
        {"bath_time", range_json(c.bath_time)},
        {"jsa_half_width_cm1", c.jsa_half_width_cm1},
        {"n_svd", c.n_svd},
    };
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.mode = parse_mode(j.at("mode").get<std::string>());
    c.omega_c_cm1 = j.at("omega_c_cm1").get<double>();
    c.coupling_cm1 = j.at("coupling_cm1").get<double>();
    c.reading = j.at("reading").get<std::string>();
    c.photon_dipoles = j.at("photon_dipoles").get<std::string>();
    c.source = j.at("source").get<std::string>();
    c.panel = j.at("panel").get<std::string>();
    c.t_ent_fs = j.at("t_ent_fs").get<double>();
    c.tau_p_fs = j.at("tau_p_fs").get<double>();
    c.pump_cm1 = j.at("pump_cm1").get<double>();
    c.omega_a1 = j.at("omega_a1").get<double>();
    c.omega_b1 = j.at("omega_b1").get<double>();
    c.omega_a2 = j.at("omega_a2").get<double>();
    c.omega_b2 = j.at("omega_b2").get<double>();
    c.classical_width_fs = j.at("classical_width_fs").get<double>();
    c.panel_f_omega_b1 = num_or_nan(j.at("panel_f_omega_b1"));
    c.grid = j.at("grid").get<int>();
    c.omega1 = num_or_nan(j.at("omega1"));
    c.omega2 = range_from(j.at("omega2"));
    c.omega3 = range_from(j.at("omega3"));
    c.threshold = j.at("threshold").get<double>();
    c.relative_sign = j.at("relative_sign").get<double>();
    c.swap_omega3 = j.at("swap_omega3").get<bool>();
    c.workers = j.at("workers").get<int>();
    c.omega_c_scan = range_from(j.at("omega_c_scan"));
    c.demo_widths = j.at("demo_widths").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.bath_omega = range_from(j.at("bath_omega"));
    c.bath_time = range_from(j.at("bath_time"));
    c.jsa_half_width_cm1 = j.at("jsa_half_width_cm1").get<double>();
    c.n_svd = j.at("n_svd").get<int>();
    return c;
}

fs::path default_data(const char* name) { return fs::path(DQCSIM_DEFAULT_DATA_DIR) / name; }

MatterOptions matter_options(const RunConfig& c) {
    MatterOptions o;
    if (c.reading == "site_local") {
        o.dephasing.reading = CouplingReading::site_local;
    } else if (c.reading == "common_bath") {
        o.dephasing.reading = CouplingReading::common_bath;
    } else {
        throw ConfigError("unknown dephasing reading '" + c.reading + "' (site_local | common_bath)");
    }
    if (c.photon_dipoles == "spectator") {
        o.photon_sector = PhotonSectorDipoles::spectator;
    } else if (c.photon_dipoles == "zero") {
        o.photon_sector = PhotonSectorDipoles::zero;
    } else {
        throw ConfigError("unknown photon dipole mode '" + c.photon_dipoles + "' (spectator | zero)");
    }
    return o;
}

CavitySpec cavity_of(const RunConfig& c) {
    CavitySpec cav;
    cav.omega_c_cm1 = c.omega_c_cm1;
    cav.coupling_cm1 = c.coupling_cm1;
    cav.validate();
    return cav;
}

void check_range(const Range& r, const char* what, int min_n) {
    if (!std::isfinite(r.min) || !std::isfinite(r.max) || r.n < min_n || (r.n > 1 && !(r.max > r.min))) {
        std::ostringstream os;
        os << what << ": need finite min < max and at least " << min_n << " points";
        throw ConfigError(os.str());
    }
}

double range_at(const Range& r, int i) {
    return r.n == 1 ? r.min : r.min + (r.max - r.min) * static_cast<double>(i) / static_cast<double>(r.n - 1);
}

struct ModeOutput {
    std::vector<fs::path> files;
    json derived = json::object();
};

// ---------------------------------------------------------------- bands

ModeOutput run_bands(const RunConfig& c, const fs::path& dir) {
    check_range(c.omega_c_scan, "omega_c scan", 1);
    const MatterOptions opts = matter_options(c);
    const SiteOperatorSet site_ops = build_site_operators(*c.aggregate);
    const ExponentialSumCorrelation corr = ExponentialSumCorrelation::assemble(*c.phonon);

    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> width1(25.0, 10.0);
    std::normal_distribution<double> width2(35.0, 10.0);

    CsvWriter csv(dir / "bands.csv", "omega_c_cm1,manifold,index,energy_cm1,dephasing_width_cm1");
    int clamped = 0;
    for (int s = 0; s < c.omega_c_scan.n; ++s) {
        RunConfig cs = c;
        cs.omega_c_cm1 = range_at(c.omega_c_scan, s);
        const CavitySpec cav = cavity_of(cs);
        const PolaritonEigensystem eig = solve_polaritons(site_ops, cav, opts.jacobi);
        DephasingTable table;
        if (!c.demo_widths) {
            const PolaritonOperators ops = transform_operators(site_ops, eig, opts.photon_sector);
            table = build_dephasing_table(eig, ops, corr, opts.dephasing);
            clamped += table.clamped;
        }
        for (int n = 0; n < 3; ++n) {
            const Eigen::VectorXd& e = eig[n].energies;
            for (Eigen::Index i = 0; i < e.size(); ++i) {
                double w = 0.0;
                if (c.demo_widths) {
                    if (n == 1) w = std::max(0.0, width1(rng));
                    if (n == 2) w = std::max(0.0, width2(rng));
                } else {
                    w = table.rates[static_cast<std::size_t>(n)](i);
                }
                csv.row({cav.omega_c_cm1, static_cast<double>(n), static_cast<double>(i), e(i), w});
            }
        }
    }
    ModeOutput out;
    out.files.push_back(csv.path());
    out.derived["clamped_rates"] = clamped;
    out.derived["widths"] = c.demo_widths ? "demo gaussian (25 +- 10, 35 +- 10), illustrative" : "computed";
    return out;
}

// ---------------------------------------------------------------- bath

ModeOutput run_bath(const RunConfig& c, const fs::path& dir) {
    check_range(c.bath_omega, "bath omega grid", 1);
    check_range(c.bath_time, "bath time grid", 1);
    if (c.bath_time.min < 0.0) throw ConfigError("bath time grid must start at t >= 0");
    const SpectralDensity& sd = *c.phonon;
    const ExponentialSumCorrelation corr = ExponentialSumCorrelation::assemble(sd);

    CsvWriter jw(dir / "bath_spectral_density.csv", "omega_cm1,J_cm1");
    CsvWriter cw(dir / "bath_correlation_freq.csv", "omega_cm1,re_C_cm1,im_C_cm1");
    for (int i = 0; i < c.bath_omega.n; ++i) {
        const double w = range_at(c.bath_omega, i);
        jw.row({w, spectral_density(w, sd)});
        const auto cf = corr.at_frequency(w);
        cw.row({w, cf.real(), cf.imag()});
    }
    CsvWriter tw(dir / "bath_correlation_time.csv", "t_fs,re_C_cm2,im_C_cm2");
    for (int i = 0; i < c.bath_time.n; ++i) {
        const double t = range_at(c.bath_time, i);
        const auto ct = corr.at_time(t);
        tw.row({t, ct.real(), ct.imag()});
    }
    ModeOutput out;
    out.files = {jw.path(), cw.path(), tw.path()};
    out.derived["n_exponential_terms"] = corr.terms().size();
    return out;
}

// ---------------------------------------------------------------- jsa / svd

JointSpectralGrid source_grid(const RunConfig& c, json& derived) {
    if (c.grid < 2) throw ConfigError("grid must have at least 2 points per axis");
    if (c.source == "biphoton") {
        const BiphotonSource src = BiphotonSource::degenerate(c.pump_cm1, c.tau_p_fs, c.t_ent_fs);
        src.validate();
        const double hw = c.jsa_half_width_cm1 > 0.0 ? c.jsa_half_width_cm1 : default_jsa_half_width_cm1(src);
        derived["half_width_cm1"] = hw;
        derived["centers_cm1"] = {src.center_a_cm1, src.center_b_cm1};
        derived["t1_fs"] = src.t1_fs;
        derived["t2_fs"] = src.t2_fs;
        return build_jsa_grid(src, c.grid, hw);
    }
    if (c.source == "classical") {
        const ClassicalPulsePair pulses{c.omega_a1, c.omega_b1, c.classical_width_fs};
        pulses.validate();
        derived["centers_cm1"] = {pulses.center_1_cm1, pulses.center_2_cm1};
        return build_classical_grid(pulses, c.grid, c.jsa_half_width_cm1);
    }
    throw ConfigError("unknown source '" + c.source + "' (biphoton | classical)");
}

ModeOutput run_jsa(const RunConfig& c, const fs::path& dir) {
    ModeOutput out;
    const JointSpectralGrid g = source_grid(c, out.derived);
    CsvWriter csv(dir / "jsa.csv", "omega_a_cm1,omega_b_cm1,re_F,im_F,abs_F");
    for (Eigen::Index i = 0; i < g.axis_a.size(); ++i) {
        for (Eigen::Index j = 0; j < g.axis_b.size(); ++j) {
            const auto v = g.amplitude(i, j);
            csv.row({g.axis_a(i), g.axis_b(j), v.real(), v.imag(), std::abs(v)});
        }
    }
    out.files.push_back(csv.path());
    return out;
}

ModeOutput run_svd(const RunConfig& c, const fs::path& dir) {
    ModeOutput out;
    const JointSpectralGrid g = source_grid(c, out.derived);
    const SchmidtSpectrum s = schmidt_svd(g, c.n_svd);
    CsvWriter csv(dir / "svd.csv", "index,sigma,sigma2");
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
        csv.row({static_cast<double>(k + 1), s.sigma[k], s.sigma[k] * s.sigma[k]});
    }
    out.files.push_back(csv.path());
    json side = {{"participation_K", s.participation}, {"sigma2_over_sigma1", s.ratio_21}, {"n_svd", c.n_svd}};
    write_json(dir / "svd.json", side);
    out.files.push_back(dir / "svd.json");
    out.derived["participation_K"] = s.participation;
    return out;
}

// ---------------------------------------------------------------- dqc

json biphoton_json(const BiphotonSource& s) {
    return {{"pump_cm1", s.pump_cm1},       {"tau_p_fs", s.pump_width_fs}, {"t1_fs", s.t1_fs},
            {"t2_fs", s.t2_fs},             {"t_ent_fs", s.entanglement_time_fs()},
            {"center_a_cm1", s.center_a_cm1}, {"center_b_cm1", s.center_b_cm1}, {"amplitude", s.amplitude}};
}

struct DqcJob {
    std::string tag;
    FieldSource field;
    json meta;
};

std::vector<DqcJob> dqc_jobs(const RunConfig& c) {
    std::vector<DqcJob> jobs;
    if (!c.panel.empty()) {
        if (c.source != "biphoton") throw ConfigError("--panel requires the biphoton source");
        SweepSettings s;
        s.target_cm1 = c.pump_cm1;
        s.pump_width_fs = c.tau_p_fs;
        s.lower_omega_b1 = c.panel_f_omega_b1;
        std::vector<PanelSpec> panels;
        if (c.panel == "all") {
            panels = sweep_panels(s);
        } else if (c.panel.size() == 1 && c.panel[0] >= 'a' && c.panel[0] <= 'f') {
            panels.push_back(sweep_panel(c.panel[0], s));
        } else {
            throw ConfigError("unknown panel '" + c.panel + "' (a..f or all)");
        }
        for (const auto& p : panels) {
            const BiphotonField f = p.field();
            f.excitation.validate();
            f.projection.validate();
            jobs.push_back({std::string("dqc_panel_") + p.id, f,
                            {{"panel", std::string(1, p.id)},
                             {"sector", p.sector},
                             {"t_ent_fs", p.t_ent_fs},
                             {"omega_b1_reading", p.id == 'f' && std::isnan(c.panel_f_omega_b1)
                                                       ? "pump - omega_a1 (completed by energy conservation)"
                                                       : "given"},
                             {"excitation", biphoton_json(f.excitation)},
                             {"projection", biphoton_json(f.projection)}}});
        }
        return jobs;
    }
    if (c.source == "biphoton") {
        BiphotonField f;
        f.excitation = BiphotonSource::with_centers(c.omega_a1, c.omega_b1, c.tau_p_fs, c.t_ent_fs);
        f.excitation.pump_cm1 = c.pump_cm1;
        f.projection = BiphotonSource::with_centers(c.omega_a2, c.omega_b2, c.tau_p_fs, c.t_ent_fs);
        f.projection.pump_cm1 = c.pump_cm1;
        f.excitation.validate();
        f.projection.validate();
        jobs.push_back({"dqc", f,
                        {{"t_ent_fs", c.t_ent_fs},
                         {"excitation", biphoton_json(f.excitation)},
                         {"projection", biphoton_json(f.projection)}}});
    } else if (c.source == "classical") {
        ClassicalField f{{c.omega_a1, c.omega_b1, c.classical_width_fs}, {c.omega_a2, c.omega_b2, c.classical_width_fs}};
        f.excitation.validate();
        jobs.push_back({"dqc", f,
                        {{"classical_width_fs", c.classical_width_fs},
                         {"excitation_centers_cm1", {c.omega_a1, c.omega_b1}},
                         {"projection_centers_cm1", {c.omega_a2, c.omega_b2}}}});
    } else {
        throw ConfigError("unknown source '" + c.source + "' (biphoton | classical)");
    }
    return jobs;
}

ModeOutput run_dqc(const RunConfig& c, const fs::path& dir) {
    if (c.grid < 1) throw ConfigError("grid must have at least one point per axis");
    if (c.workers < 1) throw ConfigError("workers must be >= 1");
    if (!(c.threshold >= 0.0 && c.threshold <= 1.0)) throw ConfigError("threshold must lie in [0, 1]");
    const auto jobs = dqc_jobs(c);

    const MatterModel model = build_matter_model(*c.aggregate, cavity_of(c), *c.phonon, matter_options(c));
    auto terms = enumerate_pathways(model.operators, model.table, c.threshold);
    if (c.swap_omega3) terms = with_swapped_omega3(std::move(terms));

    ProtocolGrid pg;
    pg.n = c.grid;
    pg.omega1 = c.omega1;
    pg.omega2_min = c.omega2.min;
    pg.omega2_max = c.omega2.max;
    pg.omega3_min = c.omega3.min;
    pg.omega3_max = c.omega3.max;
    SignalOptions so;
    so.relative_sign = c.relative_sign;
    so.workers = c.workers;

    ModeOutput out;
    out.derived["n_pathway_terms"] = terms.size();
    out.derived["table_hash"] = model.table.hash();
    out.derived["clamped_rates"] = model.table.clamped;
    for (const auto& job : jobs) {
        const GridSpec spec = resolve_grid(model, terms, job.field, pg);
        const SpectrumGrid g = evaluate_spectrum(terms, job.field, spec, so);

        CsvWriter csv(dir / (job.tag + ".csv"), "omega2_cm1,omega3_cm1,re_S,im_S,abs_S");
        for (Eigen::Index i2 = 0; i2 < g.omega2.size(); ++i2) {
            for (Eigen::Index i3 = 0; i3 < g.omega3.size(); ++i3) {
                const auto v = g.values(i2, i3);
                csv.row({g.omega2(i2), g.omega3(i3), v.real(), v.imag(), std::abs(v)});
            }
        }
        json side = job.meta;
        side["omega1_cm1"] = g.omega1;
        side["omega2_window_cm1"] = {spec.omega2_min, spec.omega2_max};
        side["omega3_window_cm1"] = {spec.omega3_min, spec.omega3_max};
        side["grid"] = {spec.n2, spec.n3};
        side["scale_C_s"] = g.scale;
        side["n_pathway_terms"] = g.n_terms;
        side["relative_sign_b"] = c.relative_sign;
        side["omega3_assignment"] = c.swap_omega3 ? "swapped (debug)" : "a: z_j'0, b: z_kj'";
        side["field_arguments"] = "real parts of the complex resonances";
        side["table_hash"] = model.table.hash();
        write_json(dir / (job.tag + ".json"), side);
        out.files.push_back(csv.path());
        out.files.push_back(dir / (job.tag + ".json"));
        out.derived["panels"][job.tag] = {{"omega1_cm1", g.omega1}, {"scale_C_s", g.scale}};
        if (job.meta.contains("t_ent_fs")) out.derived["panels"][job.tag]["t_ent_fs"] = job.meta["t_ent_fs"];
    }
    return out;
}

void load_inputs(RunConfig& c) {
    if (!c.aggregate) {
        const fs::path p = c.aggregate_path.empty() ? default_data("aggregate_placeholder.json") : c.aggregate_path;
        c.aggregate = load_aggregate_file(p);
        c.aggregate_path = p;
    }
    if (!c.phonon) {
        const fs::path p = c.phonon_path.empty() ? default_data("phonon_placeholder.json") : c.phonon_path;
        c.phonon = load_phonon_file(p);
        c.phonon_path = p;
    }
    c.aggregate->validate();
    c.phonon->validate();
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::bands: return "bands";
        case Mode::bath: return "bath";
        case Mode::jsa: return "jsa";
        case Mode::svd: return "svd";
        case Mode::dqc: return "dqc";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "bands") return Mode::bands;
    if (s == "bath") return Mode::bath;
    if (s == "jsa") return Mode::jsa;
    if (s == "svd") return Mode::svd;
    if (s == "dqc") return Mode::dqc;
    throw ConfigError("unknown mode '" + s + "'");
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

fs::path resolve_output_dir(const fs::path& requested) {
    if (!requested.empty()) return requested;
    if (const char* env = std::getenv("DQCSIM_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    return "dqcsim_out";
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + path.string() + "'");
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

RunConfig config_from_manifest(const fs::path& manifest) {
    std::ifstream in(manifest, std::ios::binary);
    if (!in) throw ConfigError("cannot open manifest '" + manifest.string() + "'");
    json j;
    try {
        j = json::parse(in);
        RunConfig c = config_from_json(j.at("config"));
        c.aggregate = parse_aggregate_json(j.at("aggregate").dump());
        c.phonon = parse_phonon_json(j.at("phonon").dump());
        return c;
    } catch (const json::exception& e) {
        throw ConfigError("manifest '" + manifest.string() + "': " + e.what());
    }
}

RunResult run(RunConfig c) {
    RunResult result;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        load_inputs(c);
        const fs::path dir = resolve_output_dir(c.output_dir);
        fs::create_directories(dir);

        ModeOutput out;
        switch (c.mode) {
            case Mode::bands: out = run_bands(c, dir); break;
            case Mode::bath: out = run_bath(c, dir); break;
            case Mode::jsa: out = run_jsa(c, dir); break;
            case Mode::svd: out = run_svd(c, dir); break;
            case Mode::dqc: out = run_dqc(c, dir); break;
        }

        const std::size_t ns = c.aggregate->n_sites();
        json manifest;
        manifest["tool"] = "dqcsim";
        manifest["version"] = kVersion;
        manifest["mode"] = to_string(c.mode);
        manifest["config"] = config_json(c);
        manifest["inputs"] = {{"aggregate_path", c.aggregate_path.string()}, {"phonon_path", c.phonon_path.string()}};
        manifest["aggregate"] = json::parse(aggregate_to_json(*c.aggregate));
        manifest["phonon"] = json::parse(phonon_to_json(*c.phonon));
        manifest["dimensions"] = {polariton_manifold_dimension(ns, 0), polariton_manifold_dimension(ns, 1),
                                  polariton_manifold_dimension(ns, 2)};
        manifest["conventions"] = {{"bosonic_pair_factor", c.aggregate->bosonic_pair_factor},
                                   {"max_photons", CavitySpec::max_photons},
                                   {"csv_number_format", "%.17g"}};
        manifest["derived"] = out.derived;
        json files = json::array();
        for (const auto& f : out.files) {
            files.push_back({{"file", f.filename().string()}, {"sha256", sha256_file(f)}});
        }
        manifest["outputs"] = files;
        manifest["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_json(dir / "manifest.json", manifest);

        result.outputs = out.files;
        result.outputs.push_back(dir / "manifest.json");
        result.message = "wrote " + std::to_string(out.files.size()) + " file(s) to " + dir.string();
    } catch (const ConfigError& e) {
        result.exit_code = 2;
        result.message = std::string("config error: ") + e.what();
    } catch (const NumericError& e) {
        result.exit_code = 3;
        result.message = std::string("numeric error: ") + e.what();
    } catch (const std::invalid_argument& e) {
        result.exit_code = 2;
        result.message = std::string("config error: ") + e.what();
    } catch (const std::domain_error& e) {
        result.exit_code = 2;
        result.message = std::string("config error: ") + e.what();
    } catch (const fs::filesystem_error& e) {
        result.exit_code = 2;
        result.message = std::string("config error: ") + e.what();
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.message = std::string("internal error: ") + e.what();
    }
    return result;
}

}  // namespace dqcsim::cli
