#include "dqcsim/bath.hpp"

#include "json_util.hpp"

namespace dqcsim {

namespace {

using nlohmann::json;

SpectralDensity from_json(const json& root) {
    detail::require_object(root, "phonon");
    detail::reject_unknown_keys(root, "phonon",
                                {"lambda0", "gamma0", "temperature_K", "n_matsubara", "modes", "name", "note"});
    SpectralDensity sd;
    sd.lambda0_cm1 = detail::require_number(root, "phonon", "lambda0");
    sd.gamma0_cm1 = detail::require_number(root, "phonon", "gamma0");
    sd.temperature_K = detail::optional_number(root, "phonon", "temperature_K", 300.0);
    if (const auto it = root.find("n_matsubara"); it != root.end()) {
        if (!it->is_number_integer()) {
            throw ConfigError("phonon.n_matsubara: expected an integer");
        }
        sd.n_matsubara = it->get<int>();
    }
    const auto modes = root.find("modes");
    if (modes == root.end() || !modes->is_array()) {
        throw ConfigError("phonon.modes: expected an array");
    }
    for (std::size_t i = 0; i < modes->size(); ++i) {
        const json& m = (*modes)[i];
        const std::string path = "phonon.modes[" + std::to_string(i) + "]";
        detail::require_object(m, path);
        detail::reject_unknown_keys(m, path, {"upsilon_cm1", "huang_rhys", "lambda_cm1", "gamma_cm1"});
        BrownianMode mode;
        mode.frequency_cm1 = detail::require_number(m, path, "upsilon_cm1");
        mode.damping_cm1 = detail::optional_number(m, path, "gamma_cm1", 30.0);
        const bool has_hr = m.contains("huang_rhys");
        const bool has_lambda = m.contains("lambda_cm1");
        if (has_hr == has_lambda) {
            throw ConfigError(path + ": exactly one of 'huang_rhys' or 'lambda_cm1' is required");
        }
        mode.reorganization_cm1 = has_lambda ? detail::require_number(m, path, "lambda_cm1")
                                             : mode.frequency_cm1 * detail::require_number(m, path, "huang_rhys");
        if (!(mode.frequency_cm1 > 0.5 * mode.damping_cm1)) {
            throw ConfigError(path + ": upsilon_cm1 must exceed gamma_cm1/2 (underdamped mode required)");
        }
        sd.modes.push_back(mode);
    }
    try {
        sd.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("phonon file: ") + e.what());
    }
    return sd;
}

}  // namespace

SpectralDensity parse_phonon_json(std::string_view text) {
    return from_json(detail::parse_json_text(text, "phonon"));
}

SpectralDensity load_phonon_file(const std::filesystem::path& path) {
    return parse_phonon_json(detail::read_text_file(path, "phonon"));
}

std::string phonon_to_json(const SpectralDensity& sd) {
    json root;
    root["lambda0"] = sd.lambda0_cm1;
    root["gamma0"] = sd.gamma0_cm1;
    root["temperature_K"] = sd.temperature_K;
    root["n_matsubara"] = sd.n_matsubara;
    json modes = json::array();
    for (const BrownianMode& m : sd.modes) {
        modes.push_back({{"upsilon_cm1", m.frequency_cm1},
                         {"lambda_cm1", m.reorganization_cm1},
                         {"gamma_cm1", m.damping_cm1}});
    }
    root["modes"] = std::move(modes);
    return root.dump(2);
}

}  // namespace dqcsim
