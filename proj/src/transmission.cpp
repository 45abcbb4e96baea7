#include "omnr/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omnr {

namespace {

double continuation_distance(double x, double prev_x) {
    return std::abs(x - prev_x) / (prev_x + 1.0);
}

std::size_t nearest_index(const std::vector<SteadyStateSolution>& sols,
                          double prev_x) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < sols.size(); ++k) {
        const double d = continuation_distance(sols[k].x, prev_x);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

DirectionalTransmission select(const std::vector<SteadyStateSolution>& sols,
                               double s_in, BranchPolicy policy,
                               const double* prev_x) {
    std::vector<std::size_t> stable;
    for (std::size_t k = 0; k < sols.size(); ++k) {
        if (sols[k].stability == Stability::Stable) {
            stable.push_back(k);
        }
    }

    std::size_t pick = 0;
    if (policy == BranchPolicy::Continued && prev_x != nullptr) {
        pick = nearest_index(sols, *prev_x);
    } else if (!stable.empty()) {
        pick = (policy == BranchPolicy::LowestStable) ? stable.front()
                                                      : stable.back();
    } else {
        pick = (policy == BranchPolicy::LowestStable) ? 0 : sols.size() - 1;
    }

    DirectionalTransmission out;
    out.x = sols[pick].x;
    out.T = s_in > 0.0 ? sols[pick].x / (s_in * s_in) : 0.0;
    out.branch = sols[pick].branch;
    out.stability = sols[pick].stability;
    out.any_stable = !stable.empty();
    return out;
}

}  // namespace

IsolationResult isolation(double t21, double t12) {
    IsolationResult r;
    if (t12 == 0.0) {
        r.ratio = std::numeric_limits<double>::infinity();
        r.dB = std::numeric_limits<double>::infinity();
        return r;
    }
    r.ratio = t21 / t12;
    r.dB = 10.0 * std::log10(r.ratio);
    return r;
}

std::vector<SteadyStateSolution> branches(const SystemParams& params,
                                          const DriveScenario& scenario) {
    std::vector<SteadyStateSolution> sols = solve_steady_states(params, scenario);
    annotate_stability(params, sols);
    return sols;
}

double linear_transmission(const EffectiveModel& eff) {
    const double lorentz = eff.gamma_eff * eff.gamma_eff / 4.0 +
                           eff.delta_bar * eff.delta_bar;
    return std::norm(eff.eps_per_sin) / lorentz;
}

DirectionalTransmission transmission_at(const SystemParams& params,
                                        const DriveScenario& scenario,
                                        BranchPolicy policy,
                                        const double* prev_x) {
    if (scenario.p_in == 0.0) {
        // zero input: T is the linear limit, the state is the vacuum
        const EffectiveModel eff = effective_model(params, scenario.direction);
        DirectionalTransmission out;
        out.T = linear_transmission(eff);
        out.x = 0.0;
        out.branch = Branch::Unique;
        const StabilityReport report = assess(build_matrix(params, 0.0, 0.0));
        out.stability = report.is_stable ? Stability::Stable : Stability::Unstable;
        out.any_stable = report.is_stable;
        return out;
    }
    const std::vector<SteadyStateSolution> sols = branches(params, scenario);
    const double s_in = drive_amplitude(params.omega_d, scenario.p_in);
    return select(sols, s_in, policy, prev_x);
}

SystemParams params_at(const SystemParams& base, const SweepSpec& spec,
                       double axis_value) {
    SystemParams p = base;
    if (spec.axis == SweepAxis::Detuning) {
        p.delta1 = axis_value;
        p.delta2 = axis_value;
    }
    return p;
}

SweepResult sweep(const SystemParams& base, const SweepSpec& spec) {
    SweepResult result;
    result.axis = spec.axis;
    result.axis_name = spec.axis == SweepAxis::Power ? "p_in_W" : "delta_rad_s";

    const std::size_t n = spec.values.size();

    // per-point branch sets, both drive directions; traversals reuse them
    struct PointData {
        std::vector<SteadyStateSolution> fwd, bwd;
        double s_in = 0.0;
        double lin_t21 = 0.0, lin_t12 = 0.0;  // zero-power definition of T
        std::string error;
    };
    std::vector<PointData> data(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double v = spec.values[k];
        const SystemParams p = params_at(base, spec, v);
        const double p_in = spec.axis == SweepAxis::Power ? v : spec.p_in;
        try {
            data[k].s_in = drive_amplitude(p.omega_d, p_in);
            data[k].fwd = branches(p, {Direction::Forward, p_in});
            data[k].bwd = branches(p, {Direction::Backward, p_in});
            if (data[k].s_in == 0.0) {
                data[k].lin_t21 =
                    linear_transmission(effective_model(p, Direction::Forward));
                data[k].lin_t12 =
                    linear_transmission(effective_model(p, Direction::Backward));
            }
        } catch (const std::exception& e) {
            data[k].error = e.what();
        }
    }

    auto record = [](const PointData& pd, const std::vector<SteadyStateSolution>& sols,
                     double lin_t) {
        std::vector<BranchRecord> out;
        out.reserve(sols.size());
        for (const auto& s : sols) {
            out.push_back({s.x,
                           pd.s_in > 0.0 ? s.x / (pd.s_in * pd.s_in) : lin_t,
                           s.branch, s.stability});
        }
        return out;
    };

    auto run_traversal = [&](Traversal traversal) {
        double prev_fwd = 0.0;
        double prev_bwd = 0.0;
        bool have_prev = false;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t k =
                traversal == Traversal::Ascending ? step : n - 1 - step;
            const PointData& pd = data[k];

            SweepPoint point;
            point.axis_value = spec.values[k];
            point.traversal = traversal;
            point.error = pd.error;
            if (pd.error.empty()) {
                point.roots_fwd = record(pd, pd.fwd, pd.lin_t21);
                point.roots_bwd = record(pd, pd.bwd, pd.lin_t12);

                auto track = [&](const std::vector<SteadyStateSolution>& sols,
                                 double& prev) {
                    std::size_t pick;
                    if (!have_prev) {
                        pick = traversal == Traversal::Ascending ? 0
                                                                 : sols.size() - 1;
                    } else {
                        pick = nearest_index(sols, prev);
                    }
                    prev = sols[pick].x;
                    return pick;
                };
                const std::size_t kf = track(pd.fwd, prev_fwd);
                const std::size_t kb = track(pd.bwd, prev_bwd);
                have_prev = true;

                const double s2 = pd.s_in * pd.s_in;
                point.tp.T21 = s2 > 0.0 ? pd.fwd[kf].x / s2 : pd.lin_t21;
                point.tp.T12 = s2 > 0.0 ? pd.bwd[kb].x / s2 : pd.lin_t12;
                const IsolationResult iso = isolation(point.tp.T21, point.tp.T12);
                point.tp.isolation_ratio = iso.ratio;
                point.tp.isolation_dB = iso.dB;
                point.tp.branch21 = pd.fwd[kf].branch;
                point.tp.branch12 = pd.bwd[kb].branch;
                point.tp.stable21 = pd.fwd[kf].stability;
                point.tp.stable12 = pd.bwd[kb].stability;
            }
            result.points.push_back(std::move(point));
        }
    };

    if (spec.ascending) {
        run_traversal(Traversal::Ascending);
    }
    if (spec.descending) {
        run_traversal(Traversal::Descending);
    }
    return result;
}

}  // namespace omnr
