#include "cmm/covariance.hpp"

#include <cmath>
#include <numbers>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

using Matrix36 = Eigen::Matrix<double, 36, 36>;
using Vector36 = Eigen::Matrix<double, 36, 1>;

// Column-major vec: vec(A V + V A^T) = (I (x) A + A (x) I) vec(V).
Matrix36 kronecker_sum(const Matrix6& A)
{
    Matrix36 M = Matrix36::Zero();
    for (int j = 0; j < 6; ++j) {
        M.block<6, 6>(6 * j, 6 * j) += A;
        for (int i = 0; i < 6; ++i) M.block<6, 6>(6 * i, 6 * j).diagonal().array() += A(i, j);
    }
    return M;
}

}  // namespace

double lyapunov_residual(const Matrix6& A, const Matrix6& V, const Matrix6& D)
{
    const Matrix6 AV = A * V;
    return (AV + V * A.transpose() + D).norm();
}

Matrix6 solve_lyapunov(const Matrix6& A, const Matrix6& D)
{
    const auto verdict = stability(A);
    if (!verdict.stable) {
        throw UnstableError("solve_lyapunov: drift matrix is not Hurwitz", verdict.spectral_abscissa);
    }

    // A V + V A^T = -D is invariant under A, D -> A/s, D/s.
    const double scale = A.cwiseAbs().maxCoeff();
    const Matrix6 As = A / scale;
    const Matrix6 Ds = D / scale;

    const Matrix36 M = kronecker_sum(As);
    const Vector36 rhs = -Eigen::Map<const Vector36>(Ds.data());
    const Eigen::FullPivLU<Matrix36> lu(M);
    Vector36 x = lu.solve(rhs);
    x += lu.solve(rhs - M * x);  // one step of iterative refinement

    Matrix6 V = Eigen::Map<const Matrix6>(x.data());
    V = 0.5 * (V + V.transpose()).eval();

    const double residual = lyapunov_residual(A, V, D);
    const double bound = 1e-10 * D.norm();
    if (!V.allFinite() || !(residual <= bound)) {
        throw NumericalError("solve_lyapunov: residual check failed", residual);
    }
    return V;
}

Matrix6 integrate_lyapunov_ode(const Matrix6& A, const Matrix6& D, double t_end, double dt)
{
    if (t_end < 0.0) throw DomainError("integrate_lyapunov_ode: t_end must be non-negative");
    if (!(dt > 0.0)) throw DomainError("integrate_lyapunov_ode: dt must be positive");

    Matrix6 V = 0.5 * Matrix6::Identity();
    if (t_end == 0.0) return V;

    const auto rhs = [&](const Matrix6& X) -> Matrix6 {
        const Matrix6 AX = A * X;
        return AX + AX.transpose() + D;
    };

    const double steps_real = std::ceil(t_end / dt);
    const auto steps = static_cast<long long>(steps_real);
    const double h = t_end / steps_real;
    const double blow_up = 1e8 * (1.0 + D.cwiseAbs().maxCoeff() * t_end);

    for (long long n = 0; n < steps; ++n) {
        const Matrix6 k1 = rhs(V);
        const Matrix6 k2 = rhs(V + 0.5 * h * k1);
        const Matrix6 k3 = rhs(V + 0.5 * h * k2);
        const Matrix6 k4 = rhs(V + h * k3);
        V += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((n & 0x3ff) == 0 || n + 1 == steps) {
            const double size = V.cwiseAbs().maxCoeff();
            if (!std::isfinite(size) || size > blow_up) {
                throw NumericalError("integrate_lyapunov_ode: step-size instability", size);
            }
        }
    }
    return V;
}

Vector6 displacement(const SteadyState& s)
{
    constexpr double r2 = std::numbers::sqrt2;
    Vector6 d;
    d << r2 * s.a_s.real(), r2 * s.a_s.imag(), r2 * s.m_s.real(), r2 * s.m_s.imag(), r2 * s.b_s.real(),
        r2 * s.b_s.imag();
    return d;
}

}  // namespace cmm
