#ifndef OMNR_STEADYSTATE_HPP
#define OMNR_STEADYSTATE_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "omnr/model.hpp"

namespace omnr {

enum class Branch { Lower, Middle, Upper, Unique };
enum class Stability { Stable, Unstable, Unchecked };

struct SteadyStateSolution {
    double x = 0.0;                      // output photon flux |alpha_out|^2
    std::complex<double> alpha_out{0.0};
    std::complex<double> alpha1{0.0};    // intracavity amplitudes
    std::complex<double> alpha2{0.0};
    double qbar = 0.0;                   // mean mechanical displacement
    Branch branch = Branch::Unique;
    Stability stability = Stability::Unchecked;
};

// All real nonnegative roots x of
//   (Gamma^2/4 + DeltaBar^2) x + 2 DeltaBar U_eff x^2 + U_eff^2 x^3 = |eps s_in|^2,
// sorted ascending. Count is 1, 2 (fold) or 3. Solved in the dimensionless
// variable y = U_eff x / Gamma via companion-matrix eigenvalues, then
// Newton-polished so the scaled residual stays below 1e-10.
std::vector<double> solve_cubic(const EffectiveModel& eff, double s_in);

// Dimensionless residual |y^3 + 2 d y^2 + (1/4 + d^2) y - rhs| / (1 + |rhs|)
// of a root candidate x; exposed for verification.
double scaled_residual(const EffectiveModel& eff, double s_in, double x);

// Fold intensities x_-, x_+ (ascending) where branches merge; empty when the
// discriminant 4 DeltaBar^2 - 3 Gamma^2 is nonpositive or a value is not
// positive. Requires u_eff != 0.
std::optional<std::pair<double, double>> turning_points(const EffectiveModel& eff);

// True iff u_eff != 0 and DeltaBar > (sqrt(3)/2) Gamma.
bool is_bistable_capable(const EffectiveModel& eff);

// Recovers output amplitude, intracavity fields and mechanical displacement
// for a cubic root x. Throws uncoupled_forward_error for Forward with J = 0.
SteadyStateSolution recover_fields(double x, const EffectiveModel& eff,
                                   const SystemParams& params,
                                   const DriveScenario& scenario);

// Convenience: roots -> recovered fields with branch labels, ascending in x.
// Stability verdicts stay Unchecked; see the stability module.
std::vector<SteadyStateSolution> solve_steady_states(const SystemParams& params,
                                                     const DriveScenario& scenario);

}  // namespace omnr

#endif
