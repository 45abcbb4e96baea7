#include "omnr/config.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>

namespace omnr {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::string> k_bare_to_suffixed = {
    {"omega_d", "omega_d_THz"}, {"gamma1", "gamma1_GHz"},
    {"gamma2", "gamma2_GHz"},   {"J", "J_GHz"},
    {"g", "g_MHz"},             {"omega_m", "omega_m_GHz"},
    {"gamma_m", "gamma_m_MHz"}, {"delta1", "delta1_GHz"},
    {"delta2", "delta2_GHz"},   {"p_in", "p_in_mW"},
    {"sweep_min", "sweep_min_mW or sweep_min_GHz"},
    {"sweep_max", "sweep_max_mW or sweep_max_GHz"},
};

double number_at(const json& j, const std::string& key) {
    if (!j.at(key).is_number()) {
        throw config_error("config key '" + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

}  // namespace

SystemParams RunConfig::to_params() const {
    SystemParams p;
    p.omega_d = k_two_pi * omega_d_THz * 1e12;
    p.gamma1 = k_two_pi * gamma1_GHz * 1e9;
    p.gamma2 = k_two_pi * gamma2_GHz * 1e9;
    p.eta1 = eta1;
    p.eta2 = eta2;
    p.J = k_two_pi * J_GHz * 1e9;
    p.g = k_two_pi * g_MHz * 1e6;
    p.omega_m = k_two_pi * omega_m_GHz * 1e9;
    p.gamma_m = k_two_pi * gamma_m_MHz * 1e6;
    p.delta1 = k_two_pi * delta1_GHz * 1e9;
    p.delta2 = k_two_pi * delta2_GHz * 1e9;
    p.validate();
    return p;
}

SweepSpec RunConfig::to_sweep_spec() const {
    SweepSpec spec;
    double lo, hi;
    if (sweep_axis == "power") {
        spec.axis = SweepAxis::Power;
        lo = sweep_min_mW * 1e-3;
        hi = sweep_max_mW * 1e-3;
    } else {
        spec.axis = SweepAxis::Detuning;
        lo = k_two_pi * sweep_min_GHz * 1e9;
        hi = k_two_pi * sweep_max_GHz * 1e9;
    }
    if (sweep_points < 2) {
        throw config_error("sweep_points must be at least 2");
    }
    spec.values.reserve(static_cast<std::size_t>(sweep_points));
    if (log_axis) {
        if (!(lo > 0.0 && hi > 0.0)) {
            throw config_error("log_axis requires a positive sweep range");
        }
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int k = 0; k < sweep_points; ++k) {
            spec.values.push_back(
                std::exp(llo + (lhi - llo) * k / (sweep_points - 1)));
        }
    } else {
        for (int k = 0; k < sweep_points; ++k) {
            spec.values.push_back(lo + (hi - lo) * k / (sweep_points - 1));
        }
    }
    spec.p_in = p_in_mW * 1e-3;
    spec.ascending = traversal == "up" || traversal == "both";
    spec.descending = traversal == "down" || traversal == "both";
    return spec;
}

RunConfig parse_config(const std::string& text) {
    json doc;
    if (!text.empty()) {
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw config_error(std::string("config is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw config_error("config must be a JSON object");
        }
    } else {
        doc = json::object();
    }

    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        cfg.explicit_keys.insert(key);
        if (key == "omega_d_THz") cfg.omega_d_THz = number_at(doc, key);
        else if (key == "gamma1_GHz") cfg.gamma1_GHz = number_at(doc, key);
        else if (key == "gamma2_GHz") cfg.gamma2_GHz = number_at(doc, key);
        else if (key == "eta1") cfg.eta1 = number_at(doc, key);
        else if (key == "eta2") cfg.eta2 = number_at(doc, key);
        else if (key == "J_GHz") cfg.J_GHz = number_at(doc, key);
        else if (key == "g_MHz") cfg.g_MHz = number_at(doc, key);
        else if (key == "omega_m_GHz") cfg.omega_m_GHz = number_at(doc, key);
        else if (key == "gamma_m_MHz") cfg.gamma_m_MHz = number_at(doc, key);
        else if (key == "delta1_GHz") cfg.delta1_GHz = number_at(doc, key);
        else if (key == "delta2_GHz") cfg.delta2_GHz = number_at(doc, key);
        else if (key == "p_in_mW") cfg.p_in_mW = number_at(doc, key);
        else if (key == "sweep_axis") cfg.sweep_axis = value.get<std::string>();
        else if (key == "sweep_min_mW") cfg.sweep_min_mW = number_at(doc, key);
        else if (key == "sweep_max_mW") cfg.sweep_max_mW = number_at(doc, key);
        else if (key == "sweep_min_GHz") cfg.sweep_min_GHz = number_at(doc, key);
        else if (key == "sweep_max_GHz") cfg.sweep_max_GHz = number_at(doc, key);
        else if (key == "sweep_points") cfg.sweep_points = value.get<int>();
        else if (key == "log_axis") cfg.log_axis = value.get<bool>();
        else if (key == "traversal") cfg.traversal = value.get<std::string>();
        else if (key == "out") cfg.out = value.get<std::string>();
        else if (key == "format") cfg.format = value.get<std::string>();
        else {
            const auto hint = k_bare_to_suffixed.find(key);
            if (hint != k_bare_to_suffixed.end()) {
                throw config_error("config key '" + key +
                                   "' is missing a unit suffix; use '" +
                                   hint->second + "'");
            }
            throw config_error("unknown config key '" + key + "'");
        }
    }

    if (cfg.sweep_axis != "power" && cfg.sweep_axis != "detuning") {
        throw config_error("sweep_axis must be 'power' or 'detuning'");
    }
    if (cfg.traversal != "up" && cfg.traversal != "down" &&
        cfg.traversal != "both") {
        throw config_error("traversal must be 'up', 'down' or 'both'");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw config_error("format must be 'csv' or 'json'");
    }
    if (cfg.p_in_mW < 0.0) {
        throw config_error("p_in_mW must be nonnegative");
    }
    try {
        cfg.to_params();
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    return cfg;
}

std::string emit_config(const RunConfig& c) {
    json doc;
    doc["omega_d_THz"] = c.omega_d_THz;
    doc["gamma1_GHz"] = c.gamma1_GHz;
    doc["gamma2_GHz"] = c.gamma2_GHz;
    doc["eta1"] = c.eta1;
    doc["eta2"] = c.eta2;
    doc["J_GHz"] = c.J_GHz;
    doc["g_MHz"] = c.g_MHz;
    doc["omega_m_GHz"] = c.omega_m_GHz;
    doc["gamma_m_MHz"] = c.gamma_m_MHz;
    doc["delta1_GHz"] = c.delta1_GHz;
    doc["delta2_GHz"] = c.delta2_GHz;
    doc["p_in_mW"] = c.p_in_mW;
    doc["sweep_axis"] = c.sweep_axis;
    doc["sweep_min_mW"] = c.sweep_min_mW;
    doc["sweep_max_mW"] = c.sweep_max_mW;
    doc["sweep_min_GHz"] = c.sweep_min_GHz;
    doc["sweep_max_GHz"] = c.sweep_max_GHz;
    doc["sweep_points"] = c.sweep_points;
    doc["log_axis"] = c.log_axis;
    doc["traversal"] = c.traversal;
    doc["out"] = c.out;
    doc["format"] = c.format;
    return doc.dump(2) + "\n";
}

void apply_preset(RunConfig& cfg, const std::string& figure_id,
                  std::vector<std::string>* warnings) {
    std::map<std::string, double> overrides;
    std::string axis;
    if (figure_id == "fig2a") {
        overrides = {{"delta1_GHz", 2.0}, {"delta2_GHz", 0.0}, {"J_GHz", 0.5}};
        axis = "power";
    } else if (figure_id == "fig2b") {
        overrides = {{"delta1_GHz", 4.0}, {"delta2_GHz", 4.0}, {"J_GHz", 3.0}};
        axis = "power";
    } else if (figure_id == "fig2c") {
        overrides = {{"delta1_GHz", 4.6}, {"delta2_GHz", 4.6}, {"J_GHz", 3.0}};
        axis = "power";
    } else if (figure_id == "fig3") {
        overrides = {{"J_GHz", 4.0}};
        axis = "detuning";
    } else if (figure_id == "fig4a") {
        overrides = {{"J_GHz", 5.0}, {"p_in_mW", 30.0}};
        axis = "detuning";
    } else if (figure_id == "fig4b") {
        overrides = {{"J_GHz", 6.0}, {"p_in_mW", 30.0}};
        axis = "detuning";
    } else if (figure_id == "fig5a") {
        overrides = {{"g_MHz", 8.0}, {"p_in_mW", 0.3}, {"J_GHz", 4.0}};
        axis = "detuning";
    } else if (figure_id == "fig5b") {
        overrides = {{"omega_m_GHz", 6.0 / 1.1},
                     {"p_in_mW", 30.0 / 1.1},
                     {"J_GHz", 4.0}};
        axis = "detuning";
    } else {
        throw config_error("unknown figure id '" + figure_id + "'");
    }
    overrides["omega_d_THz"] = 200.0;

    auto set = [&](const std::string& key, double value, double& field) {
        if (cfg.explicit_keys.count(key) != 0) {
            if (warnings != nullptr) {
                warnings->push_back("preset " + figure_id + ": keeping explicit " +
                                    key);
            }
            return;
        }
        field = value;
    };
    for (const auto& [key, value] : overrides) {
        if (key == "delta1_GHz") set(key, value, cfg.delta1_GHz);
        else if (key == "delta2_GHz") set(key, value, cfg.delta2_GHz);
        else if (key == "J_GHz") set(key, value, cfg.J_GHz);
        else if (key == "g_MHz") set(key, value, cfg.g_MHz);
        else if (key == "omega_m_GHz") set(key, value, cfg.omega_m_GHz);
        else if (key == "p_in_mW") set(key, value, cfg.p_in_mW);
        else if (key == "omega_d_THz") set(key, value, cfg.omega_d_THz);
    }
    if (cfg.explicit_keys.count("sweep_axis") == 0) {
        cfg.sweep_axis = axis;
    } else if (warnings != nullptr && cfg.sweep_axis != axis) {
        warnings->push_back("preset " + figure_id + ": keeping explicit sweep_axis");
    }
}

std::vector<double> preset_powers_mW(const std::string& figure_id) {
    if (figure_id == "fig3") {
        return {0.1, 20.0, 30.0};
    }
    return {};
}

}  // namespace omnr
