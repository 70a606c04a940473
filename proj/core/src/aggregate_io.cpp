#include "dqcsim/aggregate.hpp"

#include "json_util.hpp"

namespace dqcsim {

namespace {

using nlohmann::json;

AggregateSpec from_json(const json& root) {
    detail::require_object(root, "aggregate");
    detail::reject_unknown_keys(root, "aggregate",
                                {"sites", "hopping", "bosonic_pair_factor", "name", "note"});

    const auto sites_it = root.find("sites");
    if (sites_it == root.end() || !sites_it->is_array() || sites_it->empty()) {
        throw ConfigError("aggregate.sites: expected a non-empty array");
    }

    AggregateSpec spec;
    for (std::size_t i = 0; i < sites_it->size(); ++i) {
        const json& s = (*sites_it)[i];
        const std::string path = "aggregate.sites[" + std::to_string(i) + "]";
        detail::require_object(s, path);
        detail::reject_unknown_keys(s, path, {"energy_cm1", "mu10", "kappa", "delta_cm1", "class"});
        Site site;
        site.energy_cm1 = detail::require_number(s, path, "energy_cm1");
        site.mu10 = detail::require_number(s, path, "mu10");
        site.kappa = detail::require_number(s, path, "kappa");
        site.delta_cm1 = detail::require_number(s, path, "delta_cm1");
        const auto cls = s.find("class");
        if (cls == s.end() || !cls->is_string()) {
            throw ConfigError(path + ".class: expected \"A\" or \"B\"");
        }
        const auto tag = cls->get<std::string>();
        if (tag == "A") {
            site.site_class = SiteClass::A;
        } else if (tag == "B") {
            site.site_class = SiteClass::B;
        } else {
            throw ConfigError(path + ".class: expected \"A\" or \"B\", got \"" + tag + "\"");
        }
        if (!(site.kappa > 0.0)) {
            throw ConfigError(path + ".kappa: must be > 0");
        }
        spec.sites.push_back(site);
    }

    const auto n = static_cast<Eigen::Index>(spec.sites.size());
    const auto hop_it = root.find("hopping");
    if (hop_it == root.end() || !hop_it->is_array() ||
        hop_it->size() != static_cast<std::size_t>(n)) {
        throw ConfigError("aggregate.hopping: expected an array of " + std::to_string(n) + " rows");
    }
    spec.hopping.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const json& row = (*hop_it)[static_cast<std::size_t>(r)];
        const std::string path = "aggregate.hopping[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ConfigError(path + ": expected " + std::to_string(n) + " numbers");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_number()) {
                throw ConfigError(path + "[" + std::to_string(c) + "]: expected a number");
            }
            spec.hopping(r, c) = v.get<double>();
        }
    }

    if (const auto it = root.find("bosonic_pair_factor"); it != root.end()) {
        if (!it->is_boolean()) {
            throw ConfigError("aggregate.bosonic_pair_factor: expected a boolean");
        }
        spec.bosonic_pair_factor = it->get<bool>();
    }
    if (const auto it = root.find("name"); it != root.end() && !it->is_string()) {
        throw ConfigError("aggregate.name: expected a string");
    }
    if (const auto it = root.find("note"); it != root.end() && !it->is_string()) {
        throw ConfigError("aggregate.note: expected a string");
    }

    spec.validate();
    return spec;
}

}  // namespace

AggregateSpec parse_aggregate_json(std::string_view text) {
    return from_json(detail::parse_json_text(text, "aggregate"));
}

AggregateSpec load_aggregate_file(const std::filesystem::path& path) {
    return parse_aggregate_json(detail::read_text_file(path, "aggregate"));
}

std::string aggregate_to_json(const AggregateSpec& spec) {
    json root;
    json sites = json::array();
    for (const Site& s : spec.sites) {
        sites.push_back({{"energy_cm1", s.energy_cm1},
                         {"mu10", s.mu10},
                         {"kappa", s.kappa},
                         {"delta_cm1", s.delta_cm1},
                         {"class", std::string(to_string(s.site_class))}});
    }
    root["sites"] = std::move(sites);
    json hop = json::array();
    for (Eigen::Index r = 0; r < spec.hopping.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < spec.hopping.cols(); ++c) {
            row.push_back(spec.hopping(r, c));
        }
        hop.push_back(std::move(row));
    }
    root["hopping"] = std::move(hop);
    root["bosonic_pair_factor"] = spec.bosonic_pair_factor;
    return root.dump(2);
}

}  // namespace dqcsim
