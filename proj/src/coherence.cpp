#include "cmm/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

constexpr double kPhysicalSlack = 1e-9;
constexpr double kClampWindow = 1e-12;
constexpr double kPairingTolerance = 1e-9;

double clamp_coherence(double c)
{
    if (c >= 0.0) return c;
    if (c >= -kClampWindow) return 0.0;
    throw NumericalError("coherence: negative value beyond round-off", c);
}

}  // namespace

Matrix6 SymplecticForm::omega()
{
    Matrix6 w = Matrix6::Zero();
    for (int k = 0; k < 3; ++k) {
        w(2 * k, 2 * k + 1) = 1.0;
        w(2 * k + 1, 2 * k) = -1.0;
    }
    return w;
}

CovarianceState to_unit_convention(const CovarianceState& state)
{
    if (state.convention != Convention::half) {
        throw DomainError("to_unit_convention: state is not in the half convention");
    }
    CovarianceState out;
    out.V = 2.0 * state.V;
    out.d = std::numbers::sqrt2 * state.d;
    out.convention = Convention::unit;
    return out;
}

double entropy_F(double x)
{
    if (std::isnan(x) || x < 1.0 - kPhysicalSlack) throw DomainError("entropy_F: argument below 1");
    if (x <= 1.0) return 0.0;
    // p log p - q log q with p = q + 1, rearranged to avoid cancellation at large x.
    const double q = 0.5 * (x - 1.0);
    return std::log2(q + 1.0) + q * std::log1p(1.0 / q) / std::numbers::ln2;
}

ModeBlock mode_block(const Matrix6& V, const Vector6& d, Mode mode)
{
    const int k = 2 * static_cast<int>(mode);
    return {V.block<2, 2>(k, k), d.segment<2>(k)};
}

SingleModeCoherence single_mode_coherence(const Eigen::Matrix2d& V, const Eigen::Vector2d& d)
{
    const double det = V.determinant();
    const double nu = std::sqrt(std::max(det, 0.0));
    if (!(nu >= 1.0 - kPhysicalSlack)) throw DomainError("single_mode_coherence: unphysical covariance block");
    SingleModeCoherence out;
    out.nu = nu;
    out.nbar = (V.trace() + d.squaredNorm() - 2.0) / 4.0;
    out.coherence = clamp_coherence(entropy_F(2.0 * out.nbar + 1.0) - entropy_F(nu));
    return out;
}

std::array<double, 3> symplectic_spectrum(const Matrix6& V)
{
    // i Omega V is similar to the Hermitian S (i Omega) S with S = V^{1/2}.
    const Eigen::SelfAdjointEigenSolver<Matrix6> root(V);
    if (root.info() != Eigen::Success) throw NumericalError("symplectic_spectrum: eigensolver failed");
    if (root.eigenvalues().minCoeff() <= 0.0) {
        throw DomainError("symplectic_spectrum: covariance is not positive definite");
    }
    const Matrix6 S = root.operatorSqrt();
    using Matrix6c = Eigen::Matrix<std::complex<double>, 6, 6>;
    const Matrix6c H = std::complex<double>(0.0, 1.0) * (S * SymplecticForm::omega() * S).cast<std::complex<double>>();
    const Eigen::SelfAdjointEigenSolver<Matrix6c> herm(H, Eigen::EigenvaluesOnly);
    if (herm.info() != Eigen::Success) throw NumericalError("symplectic_spectrum: eigensolver failed");

    // Ascending real eigenvalues come as (-nu3, -nu2, -nu1, nu1, nu2, nu3).
    const auto& ev = herm.eigenvalues();
    std::array<double, 3> nu{};
    for (int k = 0; k < 3; ++k) {
        const double neg = -ev(2 - k);
        const double pos = ev(3 + k);
        if (std::abs(pos - neg) > kPairingTolerance * std::max(std::abs(pos), std::abs(neg))) {
            throw NumericalError("symplectic_spectrum: eigenvalues do not pair", std::abs(pos - neg));
        }
        nu[k] = 0.5 * (pos + neg);
    }
    return nu;
}

TotalCoherence total_coherence(const Matrix6& V, const Vector6& d)
{
    TotalCoherence out;
    out.nu = symplectic_spectrum(V);
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
        const auto block = mode_block(V, d, static_cast<Mode>(k));
        out.nbar[k] = (block.V.trace() + block.d.squaredNorm() - 2.0) / 4.0;
        total += entropy_F(2.0 * out.nbar[k] + 1.0) - entropy_F(out.nu[k]);
    }
    out.coherence = clamp_coherence(total);
    return out;
}

CoherenceReport coherence_report(const CovarianceState& state)
{
    if (state.convention != Convention::unit) {
        throw DomainError("coherence_report: state is not in the unit convention");
    }
    CoherenceReport report;
    double* single[3] = {&report.C_a, &report.C_m, &report.C_b};
    for (int k = 0; k < 3; ++k) {
        const auto block = mode_block(state.V, state.d, static_cast<Mode>(k));
        *single[k] = single_mode_coherence(block.V, block.d).coherence;
    }
    const auto total = total_coherence(state.V, state.d);
    report.C_tot = total.coherence;
    report.nu = total.nu;
    report.nbar = total.nbar;
    return report;
}

}  // namespace cmm
