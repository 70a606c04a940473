// Internal helpers for strict JSON schema checks. Not installed.

#pragma once

#include "dqcsim/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

namespace dqcsim::detail {

inline nlohmann::json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

inline std::string read_text_file(const std::filesystem::path& path, std::string_view what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(std::string(what) + ": cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void require_object(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path + ": expected an object");
    }
}

inline void reject_unknown_keys(const nlohmann::json& j, const std::string& path,
                                std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ConfigError(path + ": unknown key '" + key + "'");
        }
    }
}

inline double require_number(const nlohmann::json& j, const std::string& path,
                              std::string_view key) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) {
        throw ConfigError(path + ": missing required key '" + std::string(key) + "'");
    }
    if (!it->is_number()) {
        throw ConfigError(path + "." + std::string(key) + ": expected a number");
    }
    return it->get<double>();
}

inline double optional_number(const nlohmann::json& j, const std::string& path,
                              std::string_view key, double fallback) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        throw ConfigError(path + "." + std::string(key) + ": expected a number");
    }
    return it->get<double>();
}

}  // namespace dqcsim::detail
