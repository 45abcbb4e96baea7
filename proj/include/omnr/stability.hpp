#ifndef OMNR_STABILITY_HPP
#define OMNR_STABILITY_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "omnr/model.hpp"
#include "omnr/steadystate.hpp"

namespace omnr {

struct eigensolver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linearization of the mean-field dynamics about a steady state, over the
// fluctuation basis (da1, da1+, da2, da2+, dq, dp).
struct FluctuationMatrix {
    Eigen::Matrix<std::complex<double>, 6, 6> entries;
    double delta1_prime = 0.0;   // Delta_1 + g qbar
    double zero_threshold = 0.0; // 1e-9 * max(gamma1, gamma2, omega_m)
};

struct StabilityReport {
    std::array<std::complex<double>, 6> eigenvalues{};
    double max_real_part = 0.0;
    bool is_stable = false;
};

FluctuationMatrix build_matrix(const SystemParams& params,
                               std::complex<double> alpha1, double qbar);

// Stable iff every eigenvalue real part is below the relative zero
// threshold. Throws eigensolver_error on non-convergence.
StabilityReport assess(const FluctuationMatrix& matrix);

// Fills the stability verdict of each solution in place and returns the
// per-solution reports in the same order.
std::vector<StabilityReport> annotate_stability(
    const SystemParams& params, std::vector<SteadyStateSolution>& solutions);

}  // namespace omnr

#endif
