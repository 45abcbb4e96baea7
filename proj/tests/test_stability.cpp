#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "omnr/stability.hpp"
#include "test_support.hpp"

using namespace omnr;

TEST_SUITE("stability") {

TEST_CASE("matrix structure") {
    std::mt19937 rng(11);
    const SystemParams p = test::random_params(rng);
    const std::complex<double> alpha1(3e3, -1e3);
    const double qbar = -0.4;
    const FluctuationMatrix m = build_matrix(p, alpha1, qbar);

    CHECK(m.delta1_prime == doctest::Approx(p.delta1 + p.g * qbar));

    // trace is the total dissipation
    std::complex<double> tr = 0.0;
    for (int k = 0; k < 6; ++k) {
        tr += m.entries(k, k);
    }
    CHECK(tr.real() == doctest::Approx(-(p.gamma1 + p.gamma2 + p.gamma_m))
                           .epsilon(1e-14));
    CHECK(tr.imag() == doctest::Approx(0.0));
}

TEST_CASE("decoupled spectrum at zero field") {
    SystemParams p = SystemParams::baseline();
    const StabilityReport r = assess(build_matrix(p, 0.0, 0.0));
    CHECK(r.is_stable);

    // mechanical pair -gamma_m/2 +- i sqrt(omega_m^2 - gamma_m^2/4)
    const double im = std::sqrt(p.omega_m * p.omega_m -
                                p.gamma_m * p.gamma_m / 4.0);
    bool found_plus = false, found_minus = false;
    for (const auto& ev : r.eigenvalues) {
        if (std::abs(ev.real() + p.gamma_m / 2.0) < 1e-6 * p.gamma_m &&
            std::abs(std::abs(ev.imag()) - im) < 1e-9 * im) {
            (ev.imag() > 0 ? found_plus : found_minus) = true;
        }
    }
    CHECK(found_plus);
    CHECK(found_minus);
}

TEST_CASE("spectrum invariants on random matrices") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> amp(0.0, 1e4);
    std::uniform_real_distribution<double> phase(0.0, k_two_pi);
    for (int trial = 0; trial < 300; ++trial) {
        const SystemParams p = test::random_params(rng);
        const std::complex<double> alpha1 =
            std::polar(amp(rng), phase(rng));
        const double qbar = -p.g * std::norm(alpha1) / p.omega_m;
        const FluctuationMatrix m = build_matrix(p, alpha1, qbar);
        const StabilityReport r = assess(m);

        // eigenvalue sum equals the trace
        std::complex<double> sum = 0.0;
        for (const auto& ev : r.eigenvalues) {
            sum += ev;
        }
        const double tr = -(p.gamma1 + p.gamma2 + p.gamma_m);
        CHECK(std::abs(sum - tr) < 1e-10 * std::abs(tr) +
                                       1e-10 * p.omega_m);

        // spectrum closed under conjugation
        for (const auto& ev : r.eigenvalues) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& other : r.eigenvalues) {
                best = std::min(best, std::abs(other - std::conj(ev)));
            }
            CHECK(best < 1e-8 * (std::abs(ev) + p.omega_m));
        }
    }
}

TEST_CASE("middle branch of a bistable triple is unstable") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = test::random_bistable_case(rng);
        auto sols = solve_steady_states(c.params, c.scenario);
        REQUIRE(sols.size() == 3);
        annotate_stability(c.params, sols);
        CHECK(sols[1].stability == Stability::Unstable);
    }
}

TEST_CASE("working upper branch of the mismatched point is stable") {
    SystemParams p = SystemParams::baseline();
    p.J = k_two_pi * 3e9;
    p.delta1 = k_two_pi * 4e9;
    p.delta2 = k_two_pi * 4e9;
    auto sols = solve_steady_states(p, {Direction::Forward, 15e-3});
    REQUIRE(sols.size() == 1);
    annotate_stability(p, sols);
    CHECK(sols[0].stability == Stability::Stable);
}

}  // TEST_SUITE
