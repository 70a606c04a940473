#include <doctest.h>

#include <dqcsim_cli/run.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using dqcsim::cli::Mode;
using dqcsim::cli::RunConfig;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("dqcsim_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

struct Process {
    int status = -1;
    std::string output;
};

Process tool(const std::string& args) {
    const std::string cmd = std::string(DQCSIM_TOOL_PATH) + " " + args + " 2>&1";
    Process p;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) p.output += buf;
    const int raw = ::pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

nlohmann::json read_json(const fs::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

RunConfig small_dqc(const fs::path& out) {
    RunConfig c;
    c.mode = Mode::dqc;
    c.panel = "a";
    c.grid = 32;
    c.output_dir = out;
    return c;
}

}  // namespace

TEST_CASE("dqc --panel a writes one grid and records the entanglement time") {
    const auto out = scratch("panel_a");
    const auto p = tool("dqc --panel a --grid 48 --out " + out.string());
    INFO(p.output);
    REQUIRE(p.status == 0);
    CHECK(fs::exists(out / "dqc_panel_a.csv"));
    for (const char* other : {"b", "c", "d", "e", "f"}) CHECK_FALSE(fs::exists(out / ("dqc_panel_" + std::string(other) + ".csv")));
    const auto m = read_json(out / "manifest.json");
    CHECK(m["derived"]["panels"]["dqc_panel_a"]["t_ent_fs"].get<double>() == 60.0);
    CHECK(m["dimensions"] == nlohmann::json::array({1, 15, 120}));
    const auto side = read_json(out / "dqc_panel_a.json");
    CHECK(side["t_ent_fs"].get<double>() == 60.0);

    std::ifstream csv(out / "dqc_panel_a.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "omega2_cm1,omega3_cm1,re_S,im_S,abs_S");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == 48u * 48u);
}

TEST_CASE("invalid phonon file exits 2 naming the mode") {
    const auto dir = scratch("bad_phonon");
    std::ofstream(dir / "phonon.json") << R"({"lambda0": 37, "gamma0": 30, "temperature_K": 300, "n_matsubara": 20,
        "modes": [{"upsilon_cm1": 200, "huang_rhys": 0.01, "gamma_cm1": 30},
                  {"upsilon_cm1": 10, "huang_rhys": 0.01, "gamma_cm1": 30}]})";
    const auto p = tool("bath --phonon " + (dir / "phonon.json").string() + " --out " + (dir / "out").string());
    CHECK(p.status == 2);
    CHECK(p.output.find("modes[1]") != std::string::npos);
}

TEST_CASE("schema and usage errors exit 2") {
    const auto dir = scratch("schema");
    std::ofstream(dir / "agg.json") << R"({"sites": [{"energy_cm1": 15000, "mu10": 1, "kappa": 1, "delta_cm1": 0,
        "class": "A", "colour": "red"}], "hopping": [[0]]})";
    auto p = tool("bands --aggregate " + (dir / "agg.json").string() + " --out " + (dir / "out").string());
    CHECK(p.status == 2);
    CHECK(p.output.find("colour") != std::string::npos);
    p = tool("dqc --panel z --out " + (dir / "out").string());
    CHECK(p.status == 2);
    p = tool("dqc --no-such-flag");
    CHECK(p.status == 2);
    CHECK(tool("--help").status == 0);
}

TEST_CASE("identical runs and manifest reruns reproduce every output") {
    const auto a = scratch("run_a");
    const auto b = scratch("run_b");
    const auto r1 = dqcsim::cli::run(small_dqc(a));
    REQUIRE(r1.exit_code == 0);
    const auto r2 = dqcsim::cli::run(small_dqc(b));
    REQUIRE(r2.exit_code == 0);
    for (const char* f : {"dqc_panel_a.csv", "dqc_panel_a.json"})
        CHECK(dqcsim::cli::sha256_file(a / f) == dqcsim::cli::sha256_file(b / f));

    const auto c = scratch("rerun");
    const auto p = tool("rerun --manifest " + (a / "manifest.json").string() + " --out " + c.string());
    INFO(p.output);
    REQUIRE(p.status == 0);
    const auto ma = read_json(a / "manifest.json");
    const auto mc = read_json(c / "manifest.json");
    CHECK(ma["outputs"] == mc["outputs"]);
    CHECK(ma["config"].dump() != "");

    // a rerun must not depend on the original input files
    auto cfg = dqcsim::cli::config_from_manifest(a / "manifest.json");
    CHECK(cfg.aggregate.has_value());
    CHECK(cfg.phonon.has_value());
    CHECK(cfg.grid == 32);
}

TEST_CASE("worker count does not change the bytes") {
    const auto a = scratch("w1");
    const auto b = scratch("w4");
    auto ca = small_dqc(a);
    ca.workers = 1;
    auto cb = small_dqc(b);
    cb.workers = 4;
    REQUIRE(dqcsim::cli::run(ca).exit_code == 0);
    REQUIRE(dqcsim::cli::run(cb).exit_code == 0);
    CHECK(dqcsim::cli::sha256_file(a / "dqc_panel_a.csv") == dqcsim::cli::sha256_file(b / "dqc_panel_a.csv"));
}

TEST_CASE("other modes") {
    const auto d = scratch("modes");
    RunConfig c;
    c.output_dir = d;

    c.mode = Mode::bands;
    c.omega_c_scan = {15000.0, 15600.0, 3};
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(fs::exists(d / "bands.csv"));
    c.demo_widths = true;
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    const auto h1 = dqcsim::cli::sha256_file(d / "bands.csv");
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(dqcsim::cli::sha256_file(d / "bands.csv") == h1);
    c.seed = 7;
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(dqcsim::cli::sha256_file(d / "bands.csv") != h1);

    c.mode = Mode::bath;
    c.bath_omega = {-500.0, 500.0, 11};
    c.bath_time = {0.0, 100.0, 11};
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(fs::exists(d / "bath_correlation_time.csv"));

    c.mode = Mode::jsa;
    c.grid = 16;
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(fs::exists(d / "jsa.csv"));

    c.mode = Mode::svd;
    c.source = "classical";
    c.grid = 64;
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    const auto s = read_json(d / "svd.json");
    CHECK(s["sigma2_over_sigma1"].get<double>() < 1e-10);

    c.mode = Mode::dqc;
    c.panel.clear();
    c.source = "biphoton";
    c.grid = 8;
    REQUIRE(dqcsim::cli::run(c).exit_code == 0);
    CHECK(fs::exists(d / "dqc.csv"));
}

TEST_CASE("number formatting and output directory") {
    CHECK(dqcsim::cli::format_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(dqcsim::cli::format_number(1.0 / 3.0)) == 1.0 / 3.0);
    ::setenv("DQCSIM_OUTPUT_DIR", "/tmp/dqcsim_env_dir", 1);
    CHECK(dqcsim::cli::resolve_output_dir({}) == fs::path("/tmp/dqcsim_env_dir"));
    CHECK(dqcsim::cli::resolve_output_dir("explicit") == fs::path("explicit"));
    ::unsetenv("DQCSIM_OUTPUT_DIR");
    CHECK(dqcsim::cli::resolve_output_dir({}) == fs::path("dqcsim_out"));
}
