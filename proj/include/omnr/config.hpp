#ifndef OMNR_CONFIG_HPP
#define OMNR_CONFIG_HPP

#include <set>
#include <string>
#include <vector>

#include "omnr/model.hpp"
#include "omnr/transmission.hpp"

namespace omnr {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laboratory-unit view of a run: ordinary frequencies with mandatory unit
// suffixes in the keys, converted to angular SI exactly once (to_params).
struct RunConfig {
    double omega_d_THz = 200.0;
    double gamma1_GHz = 1.0;
    double gamma2_GHz = 1.0;
    double eta1 = 0.7;
    double eta2 = 0.7;
    double J_GHz = 4.0;
    double g_MHz = 0.8;
    double omega_m_GHz = 6.0;
    double gamma_m_MHz = 5.0;
    double delta1_GHz = 4.0;
    double delta2_GHz = 4.0;
    double p_in_mW = 30.0;

    std::string sweep_axis = "power";  // "power" | "detuning"
    double sweep_min_mW = 0.0;
    double sweep_max_mW = 50.0;
    double sweep_min_GHz = -10.0;
    double sweep_max_GHz = 15.0;
    int sweep_points = 201;
    bool log_axis = false;
    std::string traversal = "both";    // "up" | "down" | "both"

    std::string out = "sweep.csv";
    std::string format = "csv";        // "csv" | "json"

    // keys the user set explicitly; presets never override these
    std::set<std::string> explicit_keys;

    SystemParams to_params() const;
    SweepSpec to_sweep_spec() const;
};

// Parses the flat key-value JSON config; an empty document yields the
// baseline. Throws config_error naming the offending key.
RunConfig parse_config(const std::string& text);

// Serializes every key in a fixed order with full precision;
// parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const RunConfig& config);

// Applies a figure preset, skipping explicitly-set keys; skipped keys are
// reported in *warnings. Throws config_error for an unknown id.
// Ids: fig2a fig2b fig2c fig3 fig4a fig4b fig5a fig5b.
void apply_preset(RunConfig& config, const std::string& figure_id,
                  std::vector<std::string>* warnings = nullptr);

// fig3 runs its detuning sweep at several input powers (mW).
std::vector<double> preset_powers_mW(const std::string& figure_id);

}  // namespace omnr

#endif
