#include "cmm/linear_model.hpp"

#include <algorithm>
#include <limits>

#include "cmm/errors.hpp"

namespace cmm {

EffectiveCouplings effective_couplings(double g, Complex m_s)
{
    return {-2.0 * g * m_s.real(), -2.0 * g * m_s.imag()};
}

Matrix6 build_drift(const PhysicalParams& p, const SteadyState& steady)
{
    using Q = QuadratureOrdering;
    const auto [g1, g2] = effective_couplings(p.g, steady.m_s);
    const double shifted = p.delta_m_eff + p.delta_B;

    Matrix6 A = Matrix6::Zero();
    A(Q::Xa, Q::Xa) = -p.kappa_a;
    A(Q::Xa, Q::Ya) = p.delta_a;
    A(Q::Xa, Q::Ym) = p.J;
    A(Q::Ya, Q::Xa) = -p.delta_a;
    A(Q::Ya, Q::Ya) = -p.kappa_a;
    A(Q::Ya, Q::Xm) = -p.J;

    A(Q::Xm, Q::Ya) = p.J;
    A(Q::Xm, Q::Xm) = -p.kappa_m;
    A(Q::Xm, Q::Ym) = shifted;
    A(Q::Xm, Q::Xb) = -g2;
    A(Q::Ym, Q::Xa) = -p.J;
    A(Q::Ym, Q::Xm) = -shifted;
    A(Q::Ym, Q::Ym) = -p.kappa_m;
    A(Q::Ym, Q::Xb) = g1;

    A(Q::Xb, Q::Xb) = -p.kappa_b;
    A(Q::Xb, Q::Yb) = p.omega_b;
    A(Q::Yb, Q::Xm) = g1;
    A(Q::Yb, Q::Ym) = g2;
    A(Q::Yb, Q::Xb) = -p.omega_b;
    A(Q::Yb, Q::Yb) = -p.kappa_b;
    return A;
}

Matrix6 build_diffusion(const PhysicalParams& p, const BathOccupations& n)
{
    Vector6 diag;
    diag << p.kappa_a * (2.0 * n.N_a + 1.0), p.kappa_a * (2.0 * n.N_a + 1.0),
            p.kappa_m * (2.0 * n.N_m + 1.0), p.kappa_m * (2.0 * n.N_m + 1.0),
            p.kappa_b * (2.0 * n.N_b + 1.0), p.kappa_b * (2.0 * n.N_b + 1.0);
    return diag.asDiagonal();
}

StabilityVerdict stability(const Matrix6& drift)
{
    if (!drift.allFinite()) throw NumericalError("stability: drift matrix has non-finite entries");
    Eigen::EigenSolver<Matrix6> solver(drift, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericalError("stability: eigenvalue computation failed");
    double abscissa = -std::numeric_limits<double>::infinity();
    for (const auto& lambda : solver.eigenvalues()) abscissa = std::max(abscissa, lambda.real());
    return {abscissa < 0.0, abscissa};
}

LinearizedModel linearize(const PhysicalParams& params, const SteadyState& steady)
{
    LinearizedModel model;
    model.drift = build_drift(params, steady);
    model.diffusion = build_diffusion(params, bath_occupations(params));
    model.couplings = effective_couplings(params.g, steady.m_s);
    const auto verdict = stability(model.drift);
    model.stable = verdict.stable;
    model.spectral_abscissa = verdict.spectral_abscissa;
    return model;
}

}  // namespace cmm
