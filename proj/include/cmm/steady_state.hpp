#pragma once

#include <complex>

#include "cmm/units.hpp"

namespace cmm {

using Complex = std::complex<double>;

/// Classical mean-field amplitudes of cavity, magnon and phonon modes.
struct SteadyState {
    Complex a_s{};
    Complex m_s{};
    Complex b_s{};
    /// Bare magnon detuning, delta_m_eff - g (b_s + b_s^*).
    double delta_m_bare = 0.0;
};

/// Closed-form steady state for the effective detuning params.delta_m_eff.
/// The drive amplitude is taken real and positive.
SteadyState solve_steady(const PhysicalParams& params);

struct BareDetuningSolution {
    SteadyState steady;
    double delta_m_eff = 0.0;
    int iterations = 0;
};

/// Self-consistent steady state for a given bare magnon detuning.
///
/// Runs a damped fixed-point iteration (damping 0.5) on the effective
/// detuning. Converges when successive iterates differ by less than
/// 1e-12 omega_b; throws ConvergenceError with the iterate history after
/// 1000 iterations. params.delta_m_eff is ignored.
BareDetuningSolution solve_steady_bare(const PhysicalParams& params, double delta_m_bare);

/// Far-detuned approximation i eps Delta_a / (J^2 - Delta_a (Delta_m_eff + Delta_B)),
/// valid when both detunings dwarf kappa_a and kappa_m. Throws SingularityError
/// at the pole.
Complex simplified_ms(const PhysicalParams& params);

}  // namespace cmm
