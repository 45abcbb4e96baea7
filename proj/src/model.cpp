#include "omnr/model.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace omnr {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument("SystemParams: " + what);
    }
}

}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(omega_d) && omega_d > 0.0, "omega_d must be positive");
    require(std::isfinite(gamma1) && gamma1 > 0.0, "gamma1 must be positive");
    require(std::isfinite(gamma2) && gamma2 > 0.0, "gamma2 must be positive");
    require(std::isfinite(gamma_m) && gamma_m > 0.0, "gamma_m must be positive");
    require(std::isfinite(omega_m) && omega_m > 0.0, "omega_m must be positive");
    require(eta1 > 0.0 && eta1 <= 1.0, "eta1 must be in (0, 1]");
    require(eta2 > 0.0 && eta2 <= 1.0, "eta2 must be in (0, 1]");
    require(std::isfinite(J) && J >= 0.0, "J must be nonnegative");
    require(std::isfinite(g) && g >= 0.0, "g must be nonnegative");
    require(std::isfinite(delta1), "delta1 must be finite");
    require(std::isfinite(delta2), "delta2 must be finite");
}

SystemParams SystemParams::baseline() {
    SystemParams p;
    p.omega_d = k_two_pi * 200e12;
    p.gamma1 = k_two_pi * 1e9;
    p.gamma2 = k_two_pi * 1e9;
    p.eta1 = 0.7;
    p.eta2 = 0.7;
    p.J = k_two_pi * 4e9;
    p.g = k_two_pi * 0.8e6;
    p.omega_m = k_two_pi * 6e9;
    p.gamma_m = k_two_pi * 5e6;
    p.delta1 = k_two_pi * 4e9;
    p.delta2 = k_two_pi * 4e9;
    return p;
}

double drive_amplitude(double omega_d, double p_in) {
    if (!(omega_d > 0.0)) {
        throw std::invalid_argument("drive_amplitude: omega_d must be positive");
    }
    if (p_in < 0.0) {
        throw std::invalid_argument("drive_amplitude: p_in must be nonnegative");
    }
    return std::sqrt(p_in / (k_hbar * omega_d));
}

EffectiveModel effective_model(const SystemParams& p, Direction direction) {
    p.validate();
    if (direction == Direction::Forward && p.J == 0.0) {
        throw uncoupled_forward_error(
            "effective_model: uncoupled forward path (J = 0)");
    }

    const double denom = p.gamma2 * p.gamma2 + 4.0 * p.delta2 * p.delta2;

    EffectiveModel m;
    m.direction = direction;
    m.gamma_eff = p.gamma1 + 4.0 * p.gamma2 * p.J * p.J / denom;
    m.delta_bar = p.delta1 - 4.0 * p.J * p.J * p.delta2 / denom;
    m.u = -p.g * p.g / p.omega_m;
    if (direction == Direction::Forward) {
        m.u_eff = m.u * denom / (4.0 * p.eta2 * p.gamma2 * p.J * p.J);
    } else {
        m.u_eff = m.u / (p.eta1 * p.gamma1);
    }
    m.eps_per_sin = std::complex<double>(0.0, -2.0 * p.J) *
                    std::sqrt(p.eta1 * p.gamma1 * p.eta2 * p.gamma2) /
                    std::complex<double>(p.gamma2, 2.0 * p.delta2);
    return m;
}

double impedance_mismatch(const SystemParams& p) {
    p.validate();
    if (p.J == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double through =
        2.0 * p.J /
        std::hypot(p.gamma2, 2.0 * p.delta2) *
        std::sqrt(p.eta2 * p.gamma2);
    return std::sqrt(p.eta1 * p.gamma1) / through;
}

bool drive_hierarchy_satisfied(const SystemParams& p,
                               const DriveScenario& scenario) {
    const double s_in = drive_amplitude(p.omega_d, scenario.p_in);
    const double eta =
        scenario.direction == Direction::Forward ? p.eta1 : p.eta2;
    const double gamma =
        scenario.direction == Direction::Forward ? p.gamma1 : p.gamma2;
    return std::sqrt(eta * gamma) * s_in >= 10.0 * gamma;
}

}  // namespace omnr
