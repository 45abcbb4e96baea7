#include "omnr/steadystate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace omnr {

namespace {

struct MonicCubic {
    // y^3 + b y^2 + a y + c
    double b, a, c;
    double eval(double y) const { return ((y + b) * y + a) * y + c; }
    double deriv(double y) const { return (3.0 * y + 2.0 * b) * y + a; }
};

MonicCubic dimensionless_cubic(const EffectiveModel& eff, double s_in) {
    const double d = eff.delta_bar / eff.gamma_eff;
    const double e_abs = std::abs(eff.eps_per_sin) * s_in;
    const double rhs = eff.u_eff * e_abs * e_abs /
                       (eff.gamma_eff * eff.gamma_eff * eff.gamma_eff);
    return MonicCubic{2.0 * d, 0.25 + d * d, -rhs};
}

}  // namespace

double scaled_residual(const EffectiveModel& eff, double s_in, double x) {
    const MonicCubic cubic = dimensionless_cubic(eff, s_in);
    const double y = eff.u_eff * x / eff.gamma_eff;
    return std::abs(cubic.eval(y)) / (1.0 + std::abs(cubic.c));
}

std::vector<double> solve_cubic(const EffectiveModel& eff, double s_in) {
    const double e_abs = std::abs(eff.eps_per_sin) * s_in;
    if (e_abs == 0.0) {
        return {0.0};
    }
    const double lorentz = eff.gamma_eff * eff.gamma_eff / 4.0 +
                           eff.delta_bar * eff.delta_bar;
    if (eff.u_eff == 0.0) {
        return {e_abs * e_abs / lorentz};
    }

    const MonicCubic cubic = dimensionless_cubic(eff, s_in);

    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    companion(0, 2) = -cubic.c;
    companion(1, 2) = -cubic.a;
    companion(2, 2) = -cubic.b;
    const Eigen::Vector3cd eig = companion.eigenvalues();

    std::vector<double> ys;
    for (int i = 0; i < 3; ++i) {
        const std::complex<double> y = eig(i);
        if (std::abs(y.imag()) >= 1e-9 * (1.0 + std::abs(y.real()))) {
            continue;
        }
        double yr = y.real();
        for (int step = 0; step < 2; ++step) {
            const double fp = cubic.deriv(yr);
            if (fp != 0.0) {
                yr -= cubic.eval(yr) / fp;
            }
        }
        ys.push_back(yr);
    }

    std::vector<double> xs;
    xs.reserve(ys.size());
    for (double y : ys) {
        xs.push_back(eff.gamma_eff * y / eff.u_eff);
    }
    std::sort(xs.begin(), xs.end());

    double scale = 1.0;
    for (double x : xs) {
        scale = std::max(scale, std::abs(x));
    }

    std::vector<double> roots;
    for (double x : xs) {
        if (x < -1e-12 * scale) {
            continue;
        }
        const double clamped = std::max(x, 0.0);
        // merge near-identical roots (fold double root)
        if (!roots.empty() &&
            clamped - roots.back() <= 1e-9 * (clamped + roots.back())) {
            continue;
        }
        roots.push_back(clamped);
    }
    if (roots.empty()) {
        roots.push_back(0.0);
    }
    return roots;
}

std::optional<std::pair<double, double>> turning_points(const EffectiveModel& eff) {
    if (eff.u_eff == 0.0) {
        return std::nullopt;
    }
    const double four_d2 = 4.0 * eff.delta_bar * eff.delta_bar;
    double disc = four_d2 - 3.0 * eff.gamma_eff * eff.gamma_eff;
    if (disc < 0.0) {
        // treat a rounding-level negative discriminant as the degenerate fold
        if (disc >= -1e-12 * four_d2) {
            disc = 0.0;
        } else {
            return std::nullopt;
        }
    }
    const double s = std::sqrt(disc);
    const double x_minus = (-4.0 * eff.delta_bar + s) / (6.0 * eff.u_eff);
    const double x_plus = (-4.0 * eff.delta_bar - s) / (6.0 * eff.u_eff);
    const double lo = std::min(x_minus, x_plus);
    const double hi = std::max(x_minus, x_plus);
    if (lo <= 0.0) {
        return std::nullopt;
    }
    return std::make_pair(lo, hi);
}

bool is_bistable_capable(const EffectiveModel& eff) {
    return eff.u_eff != 0.0 &&
           eff.delta_bar > 0.5 * std::sqrt(3.0) * eff.gamma_eff;
}

SteadyStateSolution recover_fields(double x, const EffectiveModel& eff,
                                   const SystemParams& params,
                                   const DriveScenario& scenario) {
    if (scenario.direction == Direction::Forward && params.J == 0.0) {
        throw uncoupled_forward_error(
            "recover_fields: uncoupled forward path (J = 0)");
    }
    const double s_in = drive_amplitude(params.omega_d, scenario.p_in);
    const std::complex<double> i(0.0, 1.0);

    SteadyStateSolution sol;
    sol.x = x;
    const std::complex<double> denom =
        eff.gamma_eff / 2.0 + i * (eff.delta_bar + eff.u_eff * x);
    sol.alpha_out = eff.eps_per_sin * s_in / denom;

    const std::complex<double> cavity2(params.gamma2, 2.0 * params.delta2);
    if (scenario.direction == Direction::Forward) {
        sol.alpha2 = sol.alpha_out / std::sqrt(params.eta2 * params.gamma2);
        sol.alpha1 = sol.alpha2 * cavity2 / (-2.0 * i * params.J);
    } else {
        sol.alpha1 = sol.alpha_out / std::sqrt(params.eta1 * params.gamma1);
        sol.alpha2 = (-2.0 * i * params.J * sol.alpha1 +
                      2.0 * std::sqrt(params.eta2 * params.gamma2) * s_in) /
                     cavity2;
    }
    sol.qbar = -params.g * std::norm(sol.alpha1) / params.omega_m;
    return sol;
}

std::vector<SteadyStateSolution> solve_steady_states(const SystemParams& params,
                                                     const DriveScenario& scenario) {
    const EffectiveModel eff = effective_model(params, scenario.direction);
    const double s_in = drive_amplitude(params.omega_d, scenario.p_in);
    const std::vector<double> roots = solve_cubic(eff, s_in);

    std::vector<SteadyStateSolution> out;
    out.reserve(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        SteadyStateSolution sol = recover_fields(roots[k], eff, params, scenario);
        if (roots.size() == 1) {
            sol.branch = Branch::Unique;
        } else if (roots.size() == 2) {
            // fold: label the merged pair by the surviving outer branch
            sol.branch = (k == 0) ? Branch::Lower : Branch::Upper;
        } else {
            sol.branch = (k == 0) ? Branch::Lower
                                  : (k == 1 ? Branch::Middle : Branch::Upper);
        }
        out.push_back(sol);
    }
    return out;
}

}  // namespace omnr
