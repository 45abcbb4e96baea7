#ifndef OMNR_MODEL_HPP
#define OMNR_MODEL_HPP

#include <complex>
#include <stdexcept>

namespace omnr {

// Reduced Planck constant (CODATA), J*s. Used only by drive_amplitude.
inline constexpr double k_hbar = 1.054571817e-34;
inline constexpr double k_two_pi = 6.283185307179586476925286766559;

// Thrown when a forward-direction reduction is requested with J = 0:
// there is no path from cavity 1 to cavity 2.
struct uncoupled_forward_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Direction { Forward, Backward };

// All rates and frequencies are angular (rad/s). Configuration files hold
// ordinary frequencies; conversion happens once at ingestion.
struct SystemParams {
    double omega_d = 0.0;   // drive frequency
    double gamma1 = 0.0;    // total decay rate of cavity 1
    double gamma2 = 0.0;    // total decay rate of cavity 2
    double eta1 = 0.0;      // coupling parameter gamma_{1,e}/gamma_1
    double eta2 = 0.0;
    double J = 0.0;         // inter-cavity coupling
    double g = 0.0;         // single-photon optomechanical coupling
    double omega_m = 0.0;   // mechanical frequency
    double gamma_m = 0.0;   // mechanical damping
    double delta1 = 0.0;    // cavity detunings omega_j - omega_d (sign free)
    double delta2 = 0.0;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    // Experimentally motivated baseline: omega_d/2pi = 200 THz,
    // gamma/2pi = 1 GHz, eta = 0.7, omega_m/2pi = 6 GHz, gamma_m/2pi = 5 MHz,
    // g/2pi = 0.8 MHz, J/2pi = 4 GHz, delta/2pi = 4 GHz.
    static SystemParams baseline();
};

struct DriveScenario {
    Direction direction = Direction::Forward;
    double p_in = 0.0;      // pump power, watts
};

// Direction-dependent single-mode reduction of the three-mode system.
// eps_per_sin is the effective drive per unit s_in; the cubic solver
// multiplies by s_in so power sweeps do not rebuild the model.
struct EffectiveModel {
    double gamma_eff = 0.0;                  // effective damping rate
    double delta_bar = 0.0;                  // effective detuning
    double u = 0.0;                          // bare nonlinearity -g^2/omega_m
    double u_eff = 0.0;                      // U21 (forward) or U12 (backward)
    std::complex<double> eps_per_sin{0.0};   // effective drive / s_in
    Direction direction = Direction::Forward;
};

// s_in = sqrt(p_in / (hbar * omega_d)), units sqrt(photons/s).
double drive_amplitude(double omega_d, double p_in);

// Builds the effective single-mode model for the given injection direction.
// Throws uncoupled_forward_error for Forward with J = 0.
EffectiveModel effective_model(const SystemParams& params, Direction direction);

// Ratio of the input coupling rate to the effective through-coupling rate.
// 1 means matched (reciprocal response even with nonlinearity); J = 0 gives
// +infinity as the mismatch sentinel.
double impedance_mismatch(const SystemParams& params);

// Strong-driving validity heuristic: sqrt(eta*gamma)*s_in >= 10*gamma at the
// driven port. Advisory only; callers warn but still compute.
bool drive_hierarchy_satisfied(const SystemParams& params,
                               const DriveScenario& scenario);

}  // namespace omnr

#endif
