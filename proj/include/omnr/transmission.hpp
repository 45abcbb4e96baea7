#ifndef OMNR_TRANSMISSION_HPP
#define OMNR_TRANSMISSION_HPP

#include <string>
#include <vector>

#include "omnr/model.hpp"
#include "omnr/stability.hpp"
#include "omnr/steadystate.hpp"

namespace omnr {

enum class BranchPolicy { LowestStable, HighestStable, Continued };

struct IsolationResult {
    double ratio = 1.0;
    double dB = 0.0;
};

// I = T21/T12; T12 = 0 gives the +infinity sentinel.
IsolationResult isolation(double t21, double t12);

// All steady-state branches for one drive direction, ascending in x, with
// stability verdicts filled in.
std::vector<SteadyStateSolution> branches(const SystemParams& params,
                                          const DriveScenario& scenario);

// T in the U_eff -> 0 limit; also the p_in -> 0 definition of T.
double linear_transmission(const EffectiveModel& eff);

struct DirectionalTransmission {
    double T = 0.0;
    double x = 0.0;
    Branch branch = Branch::Unique;
    Stability stability = Stability::Unchecked;
    bool any_stable = false;  // false when every branch is unstable
};

// Transmission for one direction under a branch policy. With Continued,
// prev_x selects the root nearest |x - prev_x| / (prev_x + 1). When no
// branch is stable the policy falls back to all branches and any_stable
// reports the condition.
DirectionalTransmission transmission_at(const SystemParams& params,
                                        const DriveScenario& scenario,
                                        BranchPolicy policy,
                                        const double* prev_x = nullptr);

enum class SweepAxis { Power, Detuning };
enum class Traversal { Ascending, Descending };

struct SweepSpec {
    SweepAxis axis = SweepAxis::Power;
    std::vector<double> values;  // watts, or detuning rad/s (delta1 = delta2)
    double p_in = 0.0;           // fixed power for detuning sweeps
    bool ascending = true;
    bool descending = true;
};

struct BranchRecord {
    double x = 0.0;
    double T = 0.0;
    Branch branch = Branch::Unique;
    Stability stability = Stability::Unchecked;
};

struct TransmissionPoint {
    double T21 = 0.0;
    double T12 = 0.0;
    double isolation_ratio = 1.0;
    double isolation_dB = 0.0;
    Branch branch21 = Branch::Unique;
    Branch branch12 = Branch::Unique;
    Stability stable21 = Stability::Unchecked;
    Stability stable12 = Stability::Unchecked;
};

struct SweepPoint {
    double axis_value = 0.0;
    Traversal traversal = Traversal::Ascending;
    TransmissionPoint tp;
    std::vector<BranchRecord> roots_fwd;
    std::vector<BranchRecord> roots_bwd;
    std::string error;  // per-point failure, recorded without aborting
};

struct SweepResult {
    SweepAxis axis = SweepAxis::Power;
    std::string axis_name;
    std::vector<SweepPoint> points;  // grouped by traversal, in traversal order
};

// Hysteresis-aware sweep: both directions are solved at every axis value,
// then each requested traversal tracks the root nearest the previous
// selection (ascending starts on the lowest root, descending on the
// highest). At a fold the tracking jumps to the nearest surviving root.
SweepResult sweep(const SystemParams& base, const SweepSpec& spec);

// base with the sweep axis value applied (p_in or delta1 = delta2).
SystemParams params_at(const SystemParams& base, const SweepSpec& spec,
                       double axis_value);

}  // namespace omnr

#endif
