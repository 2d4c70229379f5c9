#pragma once

#include <array>

#include <Eigen/Dense>

#include "cmm/covariance.hpp"

namespace cmm {

enum class Mode { a = 0, m = 1, b = 2 };

/// Block-diagonal symplectic form with 2x2 blocks ((0, 1), (-1, 0)).
struct SymplecticForm {
    static Matrix6 omega();
};

struct ModeBlock {
    Eigen::Matrix2d V;
    Eigen::Vector2d d;
};

struct SingleModeCoherence {
    double coherence = 0.0;  // bits
    double nu = 1.0;         // sqrt(det V_o)
    double nbar = 0.0;       // effective occupation
};

struct TotalCoherence {
    double coherence = 0.0;
    std::array<double, 3> nu{};    // ascending
    std::array<double, 3> nbar{};  // per mode a, m, b
};

struct CoherenceReport {
    double C_a = 0.0;
    double C_m = 0.0;
    double C_b = 0.0;
    double C_tot = 0.0;
    std::array<double, 3> nu{};
    std::array<double, 3> nbar{};
};

/// V' = 2V, d' = sqrt(2) d. Throws DomainError unless the input is 'half'.
CovarianceState to_unit_convention(const CovarianceState& state);

/// F(X) = ((X+1)/2) log2((X+1)/2) - ((X-1)/2) log2((X-1)/2), in bits.
/// Inputs in [1 - 1e-9, 1] are clamped to 1; smaller ones throw DomainError.
double entropy_F(double x);

ModeBlock mode_block(const Matrix6& V, const Vector6& d, Mode mode);

/// Relative entropy of coherence of a single-mode Gaussian state given in
/// the unit convention.
SingleModeCoherence single_mode_coherence(const Eigen::Matrix2d& V, const Eigen::Vector2d& d);

/// Symplectic eigenvalues of a 6x6 covariance (unit convention), ascending.
std::array<double, 3> symplectic_spectrum(const Matrix6& V);

/// Three-mode coherence: sum over i of F(2 n_i + 1) - F(nu_i), with n_i the
/// per-mode occupation and nu_i the full symplectic spectrum.
TotalCoherence total_coherence(const Matrix6& V, const Vector6& d);

/// Single-mode and total coherences of a unit-convention state.
CoherenceReport coherence_report(const CovarianceState& unit_state);

}  // namespace cmm
