#include "omnr/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace omnr {

namespace {

MeanFieldState axpy(const MeanFieldState& s, double h, const MeanFieldState& d) {
    MeanFieldState out;
    out.alpha1 = s.alpha1 + h * d.alpha1;
    out.alpha2 = s.alpha2 + h * d.alpha2;
    out.q = s.q + h * d.q;
    out.p = s.p + h * d.p;
    out.t = s.t;
    return out;
}

// Characteristic amplitude for the divergence guard: intracavity amplitude
// of a resonantly driven single mode, plus one photon of floor.
double amplitude_scale(const SystemParams& p, double s_in) {
    const double drive = std::sqrt(std::max(p.eta1 * p.gamma1, p.eta2 * p.gamma2));
    return 2.0 * drive * s_in / std::min(p.gamma1, p.gamma2) + 1.0;
}

bool exceeds(const MeanFieldState& s, double alpha_cap, double mech_cap) {
    return !(std::abs(s.alpha1) <= alpha_cap && std::abs(s.alpha2) <= alpha_cap &&
             std::abs(s.q) <= mech_cap && std::abs(s.p) <= mech_cap);
}

}  // namespace

MeanFieldState derivative(const MeanFieldState& s, const SystemParams& p,
                          const DriveScenario& scenario) {
    const double s_in = drive_amplitude(p.omega_d, scenario.p_in);
    const std::complex<double> a1_in =
        scenario.direction == Direction::Forward ? s_in : 0.0;
    const std::complex<double> a2_in =
        scenario.direction == Direction::Forward ? 0.0 : s_in;
    const std::complex<double> i(0.0, 1.0);

    MeanFieldState d;
    d.alpha1 = -(p.gamma1 / 2.0 + i * p.delta1) * s.alpha1 -
               i * p.g * s.q * s.alpha1 - i * p.J * s.alpha2 +
               std::sqrt(p.eta1 * p.gamma1) * a1_in;
    d.alpha2 = -(p.gamma2 / 2.0 + i * p.delta2) * s.alpha2 -
               i * p.J * s.alpha1 + std::sqrt(p.eta2 * p.gamma2) * a2_in;
    d.q = p.omega_m * s.p;
    d.p = -p.omega_m * s.q - p.g * std::norm(s.alpha1) - p.gamma_m * s.p;
    d.t = 1.0;
    return d;
}

double time_step(const SystemParams& p) {
    const double omega_fast = std::max(
        {p.omega_m, std::abs(p.delta1), std::abs(p.delta2), p.J, p.gamma1, p.gamma2});
    return k_two_pi / (40.0 * omega_fast);
}

double default_horizon(const SystemParams& p) {
    return std::max(200.0 * k_two_pi / p.omega_m, 50.0 / p.gamma_m);
}

SettleResult settle(const SystemParams& params, const DriveScenario& scenario,
                    MeanFieldState initial, double horizon,
                    const std::function<void(const MeanFieldState&)>& observer) {
    return settle_with_step(params, scenario, initial, horizon,
                            time_step(params), observer);
}

SettleResult settle_with_step(
    const SystemParams& params, const DriveScenario& scenario,
    MeanFieldState initial, double horizon, double dt,
    const std::function<void(const MeanFieldState&)>& observer) {
    params.validate();
    if (!(horizon > 0.0) || !(dt > 0.0)) {
        throw std::invalid_argument("settle: horizon and dt must be positive");
    }

    const double s_in = drive_amplitude(params.omega_d, scenario.p_in);
    const double alpha_cap = 1e6 * amplitude_scale(params, s_in);
    const double mech_scale =
        params.g * amplitude_scale(params, s_in) * amplitude_scale(params, s_in) /
            params.omega_m + 1.0;
    const double mech_cap = 1e6 * mech_scale;

    const long steps_per_period = std::max<long>(
        1, std::lround(k_two_pi / params.omega_m / dt));
    const long total_steps = static_cast<long>(std::ceil(horizon / dt));

    SettleResult result;
    MeanFieldState state = initial;
    MeanFieldState snapshot = state;
    if (observer) {
        observer(state);
    }

    for (long step = 0; step < total_steps; ++step) {
        const MeanFieldState k1 = derivative(state, params, scenario);
        const MeanFieldState k2 =
            derivative(axpy(state, dt / 2.0, k1), params, scenario);
        const MeanFieldState k3 =
            derivative(axpy(state, dt / 2.0, k2), params, scenario);
        const MeanFieldState k4 = derivative(axpy(state, dt, k3), params, scenario);

        state.alpha1 += dt / 6.0 * (k1.alpha1 + 2.0 * k2.alpha1 + 2.0 * k3.alpha1 + k4.alpha1);
        state.alpha2 += dt / 6.0 * (k1.alpha2 + 2.0 * k2.alpha2 + 2.0 * k3.alpha2 + k4.alpha2);
        state.q += dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
        state.p += dt / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        state.t += dt;

        if (exceeds(state, alpha_cap, mech_cap)) {
            result.state = state;
            result.diverged = true;
            return result;
        }

        if ((step + 1) % steps_per_period == 0) {
            if (observer) {
                observer(state);
            }
            // stroboscopic convergence check one mechanical period apart;
            // ignores residual fast oscillation within the period. Thresholds
            // use per-block scales so components that settle near zero (p in
            // particular) are judged against the block magnitude, not their
            // own value, which would sit below roundoff noise.
            const double a_scale = std::max(
                {std::abs(state.alpha1), std::abs(state.alpha2),
                 1e-9 * amplitude_scale(params, s_in)});
            const double m_scale = std::max(
                {std::abs(state.q), std::abs(state.p), 1e-9 * mech_scale});
            const bool settled =
                std::abs(state.alpha1 - snapshot.alpha1) <= 1e-10 * a_scale &&
                std::abs(state.alpha2 - snapshot.alpha2) <= 1e-10 * a_scale &&
                std::abs(state.q - snapshot.q) <= 1e-10 * m_scale &&
                std::abs(state.p - snapshot.p) <= 1e-10 * m_scale;
            snapshot = state;
            if (settled) {
                result.state = state;
                result.converged = true;
                return result;
            }
        }
    }

    result.state = state;
    return result;
}

}  // namespace omnr
