#include "omnr/commands.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "omnr/oracle.hpp"

namespace omnr {

namespace {

std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string db4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char* traversal_name(Traversal t) {
    return t == Traversal::Ascending ? "up" : "down";
}

// forward roots placed by ascending index: lower / middle / upper
void root_columns(const std::vector<BranchRecord>& roots, std::string cols[3]) {
    if (roots.size() >= 3) {
        cols[0] = full(roots[0].x);
        cols[1] = full(roots[1].x);
        cols[2] = full(roots[2].x);
    } else if (roots.size() == 2) {
        cols[0] = full(roots[0].x);
        cols[2] = full(roots[1].x);
    } else if (roots.size() == 1) {
        cols[0] = full(roots[0].x);
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw config_error("cannot open output file '" + path + "'");
    }
    f << text;
}

BranchPolicy parse_policy(const std::string& name) {
    if (name == "lowest") return BranchPolicy::LowestStable;
    if (name == "continued") return BranchPolicy::Continued;
    return BranchPolicy::HighestStable;
}

std::string with_suffix(const std::string& path, const std::string& tag) {
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos) {
        return path + tag;
    }
    return path.substr(0, dot) + tag + path.substr(dot);
}

void emit_sweep(const RunConfig& cfg, const SweepResult& result,
                const std::string& path) {
    write_file(path,
               cfg.format == "json" ? sweep_to_json(result) : sweep_to_csv(result));
}

int cmd_solve(const RunConfig& cfg, const CommandOptions& opts,
              std::ostream& out) {
    const SystemParams params = cfg.to_params();
    const double p_in = cfg.p_in_mW * 1e-3;
    const double s_in = drive_amplitude(params.omega_d, p_in);
    const BranchPolicy policy = parse_policy(opts.branch_policy);

    double t[2] = {0.0, 0.0};
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const DriveScenario scenario{dir, p_in};
        if (!drive_hierarchy_satisfied(params, scenario)) {
            out << "# warning: strong-driving hierarchy sqrt(eta*gamma)*s_in >= "
                   "10*gamma not satisfied\n";
        }
        out << (dir == Direction::Forward ? "forward (a1 -> a2)\n"
                                          : "backward (a2 -> a1)\n");
        const auto sols = branches(params, scenario);
        for (const auto& s : sols) {
            out << "  branch=" << branch_name(s.branch)
                << " stability=" << stability_name(s.stability)
                << " x=" << full(s.x)
                << " T=" << full(s_in > 0.0 ? s.x / (s_in * s_in) : 0.0)
                << " alpha1=(" << full(s.alpha1.real()) << ","
                << full(s.alpha1.imag()) << ")"
                << " alpha2=(" << full(s.alpha2.real()) << ","
                << full(s.alpha2.imag()) << ")"
                << " qbar=" << full(s.qbar) << "\n";
        }
        const DirectionalTransmission dt =
            transmission_at(params, scenario, policy);
        t[dir == Direction::Forward ? 0 : 1] = dt.T;
        if (!dt.any_stable) {
            out << "  # no stable branch in this direction\n";
        }
    }
    const IsolationResult iso = isolation(t[0], t[1]);
    out << "T21=" << full(t[0]) << " T12=" << full(t[1])
        << " isolation_dB=" << db4(iso.dB)
        << " (policy=" << opts.branch_policy << ")\n";
    out << "impedance_mismatch=" << full(impedance_mismatch(params)) << "\n";
    return k_exit_ok;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
    const SystemParams params = cfg.to_params();
    const double p_in = cfg.p_in_mW * 1e-3;
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
        out << (dir == Direction::Forward ? "forward\n" : "backward\n");
        auto sols = solve_steady_states(params, {dir, p_in});
        const auto reports = annotate_stability(params, sols);
        for (std::size_t k = 0; k < sols.size(); ++k) {
            out << "  branch=" << branch_name(sols[k].branch)
                << " stability=" << stability_name(sols[k].stability)
                << " max_re=" << full(reports[k].max_real_part) << "\n";
            for (const auto& ev : reports[k].eigenvalues) {
                out << "    eigenvalue " << full(ev.real()) << " "
                    << full(ev.imag()) << "\n";
            }
        }
    }
    return k_exit_ok;
}

int cmd_oracle(const RunConfig& cfg, const CommandOptions& opts,
               std::ostream& out) {
    const SystemParams params = cfg.to_params();
    const Direction dir =
        opts.direction == "backward" ? Direction::Backward : Direction::Forward;
    const DriveScenario scenario{dir, cfg.p_in_mW * 1e-3};

    std::ostringstream csv;
    csv << "t,re_alpha1,im_alpha1,re_alpha2,im_alpha2,q,p\n";
    const auto observer = [&](const MeanFieldState& s) {
        csv << full(s.t) << "," << full(s.alpha1.real()) << ","
            << full(s.alpha1.imag()) << "," << full(s.alpha2.real()) << ","
            << full(s.alpha2.imag()) << "," << full(s.q) << "," << full(s.p)
            << "\n";
    };
    const SettleResult r = settle(params, scenario, MeanFieldState{},
                                  default_horizon(params), observer);
    write_file(cfg.out, csv.str());
    out << "converged=" << (r.converged ? "true" : "false")
        << " diverged=" << (r.diverged ? "true" : "false")
        << " t=" << full(r.state.t)
        << " alpha1=(" << full(r.state.alpha1.real()) << ","
        << full(r.state.alpha1.imag()) << ")"
        << " alpha2=(" << full(r.state.alpha2.real()) << ","
        << full(r.state.alpha2.imag()) << ")"
        << " q=" << full(r.state.q) << " p=" << full(r.state.p) << "\n";
    return k_exit_ok;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const SystemParams params = cfg.to_params();
    const SweepSpec spec = cfg.to_sweep_spec();
    const SweepResult result = sweep(params, spec);
    emit_sweep(cfg, result, cfg.out);
    out << "wrote " << cfg.out << " (" << result.points.size() << " points)\n";
    return k_exit_ok;
}

int cmd_figure(RunConfig cfg, const std::string& figure_id, std::ostream& out,
               std::ostream& err) {
    std::vector<std::string> warnings;
    apply_preset(cfg, figure_id, &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << w << "\n";
    }
    const std::vector<double> powers = preset_powers_mW(figure_id);
    if (powers.empty()) {
        return cmd_sweep(cfg, out);
    }
    for (double p_mW : powers) {
        RunConfig run = cfg;
        run.p_in_mW = p_mW;
        run.out = with_suffix(cfg.out, "_p" + db4(p_mW) + "mW");
        const int rc = cmd_sweep(run, out);
        if (rc != k_exit_ok) {
            return rc;
        }
    }
    return k_exit_ok;
}

}  // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Lower: return "lower";
        case Branch::Middle: return "middle";
        case Branch::Upper: return "upper";
        default: return "unique";
    }
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        default: return "unchecked";
    }
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "axis_value,direction,T21,T12,isolation_dB,branch21,branch12,"
          "stable21,stable12,n_roots_fwd,n_roots_bwd,x_lower,x_middle,x_upper\n";
    for (const auto& p : result.points) {
        if (!p.error.empty()) {
            os << full(p.axis_value) << "," << traversal_name(p.traversal)
               << ",,,,,,,,0,0,,,\n";
            continue;
        }
        std::string cols[3];
        root_columns(p.roots_fwd, cols);
        os << full(p.axis_value) << "," << traversal_name(p.traversal) << ","
           << full(p.tp.T21) << "," << full(p.tp.T12) << ","
           << full(p.tp.isolation_dB) << "," << branch_name(p.tp.branch21) << ","
           << branch_name(p.tp.branch12) << "," << stability_name(p.tp.stable21)
           << "," << stability_name(p.tp.stable12) << "," << p.roots_fwd.size()
           << "," << p.roots_bwd.size() << "," << cols[0] << "," << cols[1]
           << "," << cols[2] << "\n";
    }
    return os.str();
}

std::string sweep_to_json(const SweepResult& result) {
    nlohmann::ordered_json doc;
    doc["axis"] = result.axis_name;
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& p : result.points) {
        nlohmann::ordered_json jp;
        jp["axis_value"] = p.axis_value;
        jp["direction"] = traversal_name(p.traversal);
        if (!p.error.empty()) {
            jp["error"] = p.error;
            doc["points"].push_back(jp);
            continue;
        }
        jp["T21"] = p.tp.T21;
        jp["T12"] = p.tp.T12;
        jp["isolation_dB"] = p.tp.isolation_dB;
        jp["branch21"] = branch_name(p.tp.branch21);
        jp["branch12"] = branch_name(p.tp.branch12);
        jp["stable21"] = stability_name(p.tp.stable21);
        jp["stable12"] = stability_name(p.tp.stable12);
        auto dump_roots = [](const std::vector<BranchRecord>& roots) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : roots) {
                arr.push_back({{"x", r.x},
                               {"T", r.T},
                               {"branch", branch_name(r.branch)},
                               {"stability", stability_name(r.stability)}});
            }
            return arr;
        };
        jp["roots_fwd"] = dump_roots(p.roots_fwd);
        jp["roots_bwd"] = dump_roots(p.roots_bwd);
        doc["points"].push_back(jp);
    }
    return doc.dump(2) + "\n";
}

int run_command(const std::string& command, const std::string& figure_id,
                RunConfig config, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
    try {
        if (command == "solve") {
            return cmd_solve(config, options, out);
        }
        if (command == "sweep-power") {
            config.sweep_axis = "power";
            return cmd_sweep(config, out);
        }
        if (command == "sweep-detuning") {
            config.sweep_axis = "detuning";
            return cmd_sweep(config, out);
        }
        if (command == "stability") {
            return cmd_stability(config, out);
        }
        if (command == "oracle") {
            return cmd_oracle(config, options, out);
        }
        if (command == "figure") {
            return cmd_figure(std::move(config), figure_id, out, err);
        }
        err << "error: unknown command '" << command << "'\n";
        return k_exit_usage;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return k_exit_usage;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << "\n";
        return k_exit_numerical;
    }
}

}  // namespace omnr
