#include "omnr/stability.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace omnr {

FluctuationMatrix build_matrix(const SystemParams& p,
                               std::complex<double> alpha1, double qbar) {
    p.validate();
    const std::complex<double> i(0.0, 1.0);
    const double d1p = p.delta1 + p.g * qbar;

    FluctuationMatrix m;
    m.delta1_prime = d1p;
    m.zero_threshold = 1e-9 * std::max({p.gamma1, p.gamma2, p.omega_m});
    auto& a = m.entries;
    a.setZero();

    a(0, 0) = -(p.gamma1 / 2.0 + i * d1p);
    a(0, 2) = -i * p.J;
    a(0, 4) = -i * p.g * alpha1;

    a(1, 1) = -(p.gamma1 / 2.0 - i * d1p);
    a(1, 3) = i * p.J;
    a(1, 4) = i * p.g * std::conj(alpha1);

    a(2, 0) = -i * p.J;
    a(2, 2) = -(p.gamma2 / 2.0 + i * p.delta2);

    a(3, 1) = i * p.J;
    a(3, 3) = -(p.gamma2 / 2.0 - i * p.delta2);

    a(4, 5) = p.omega_m;

    a(5, 0) = -p.g * std::conj(alpha1);
    a(5, 1) = -p.g * alpha1;
    a(5, 4) = -p.omega_m;
    a(5, 5) = -p.gamma_m;

    return m;
}

StabilityReport assess(const FluctuationMatrix& matrix) {
    Eigen::ComplexEigenSolver<Eigen::Matrix<std::complex<double>, 6, 6>> solver;
    solver.compute(matrix.entries, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw eigensolver_error("assess: eigensolver failed to converge");
    }

    StabilityReport report;
    report.max_real_part = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 6; ++k) {
        report.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
        report.max_real_part =
            std::max(report.max_real_part, solver.eigenvalues()(k).real());
    }
    report.is_stable = report.max_real_part < matrix.zero_threshold;
    return report;
}

std::vector<StabilityReport> annotate_stability(
    const SystemParams& params, std::vector<SteadyStateSolution>& solutions) {
    std::vector<StabilityReport> reports;
    reports.reserve(solutions.size());
    for (auto& sol : solutions) {
        const StabilityReport report =
            assess(build_matrix(params, sol.alpha1, sol.qbar));
        sol.stability = report.is_stable ? Stability::Stable : Stability::Unstable;
        reports.push_back(report);
    }
    return reports;
}

}  // namespace omnr
