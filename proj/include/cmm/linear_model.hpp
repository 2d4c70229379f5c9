#pragma once

#include <array>
#include <string_view>

#include <Eigen/Dense>

#include "cmm/steady_state.hpp"
#include "cmm/units.hpp"

namespace cmm {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Fluctuation vector layout shared by drift, diffusion and covariance.
struct QuadratureOrdering {
    static constexpr std::array<std::string_view, 6> labels{"X_a", "Y_a", "X_m", "Y_m", "X_b", "Y_b"};
    static constexpr int Xa = 0, Ya = 1, Xm = 2, Ym = 3, Xb = 4, Yb = 5;
};

/// Linearized magnomechanical couplings enhanced by the magnon amplitude.
struct EffectiveCouplings {
    double g1 = 0.0;  // -g (m_s + m_s^*)
    double g2 = 0.0;  // i g (m_s - m_s^*)
};

struct StabilityVerdict {
    bool stable = false;
    double spectral_abscissa = 0.0;
};

struct LinearizedModel {
    Matrix6 drift;
    Matrix6 diffusion;
    QuadratureOrdering ordering;
    EffectiveCouplings couplings;
    bool stable = false;
    double spectral_abscissa = 0.0;
};

EffectiveCouplings effective_couplings(double g, Complex m_s);

/// Drift matrix of the quadrature fluctuations, ordered (X_a, Y_a, X_m, Y_m, X_b, Y_b).
Matrix6 build_drift(const PhysicalParams& params, const SteadyState& steady);

/// diag(kappa_a(2N_a+1), kappa_a(2N_a+1), kappa_m(2N_m+1), ..., kappa_b(2N_b+1)).
Matrix6 build_diffusion(const PhysicalParams& params, const BathOccupations& occupations);

/// Eigenvalue-based stability test. Stable iff the largest real part is
/// strictly negative; no margin is applied.
StabilityVerdict stability(const Matrix6& drift);

LinearizedModel linearize(const PhysicalParams& params, const SteadyState& steady);

}  // namespace cmm
