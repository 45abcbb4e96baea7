#ifndef OMNR_ORACLE_HPP
#define OMNR_ORACLE_HPP

#include <complex>
#include <functional>

#include "omnr/model.hpp"

namespace omnr {

// Classical mean-field state of the three-mode system.
struct MeanFieldState {
    std::complex<double> alpha1{0.0};
    std::complex<double> alpha2{0.0};
    double q = 0.0;
    double p = 0.0;
    double t = 0.0;  // elapsed time, seconds
};

struct SettleResult {
    MeanFieldState state;
    bool converged = false;
    bool diverged = false;
};

// Right-hand side of the mean-field equations of motion (noise dropped).
// The returned struct holds d/dt of each component; t is unused.
MeanFieldState derivative(const MeanFieldState& state, const SystemParams& params,
                          const DriveScenario& scenario);

// Fixed step resolving the fastest scale: (1/40) * 2pi / max(omega_m,
// |delta1|, |delta2|, J, gamma1, gamma2).
double time_step(const SystemParams& params);

// 200 mechanical periods or 50 mechanical damping times, whichever is longer.
double default_horizon(const SystemParams& params);

// Integrates with classical fixed-step RK4 until the state is unchanged to
// relative 1e-10 over one mechanical period (stroboscopic comparison), the
// horizon elapses, or the trajectory diverges. A divergence verdict is itself
// stability evidence and is reported, not thrown.
// The optional observer sees the state once per mechanical period.
SettleResult settle(const SystemParams& params, const DriveScenario& scenario,
                    MeanFieldState initial, double horizon,
                    const std::function<void(const MeanFieldState&)>& observer = {});

// Same as settle with an explicit step size (step-halving checks).
SettleResult settle_with_step(
    const SystemParams& params, const DriveScenario& scenario,
    MeanFieldState initial, double horizon, double dt,
    const std::function<void(const MeanFieldState&)>& observer = {});

}  // namespace omnr

#endif
