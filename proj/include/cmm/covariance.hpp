#pragma once

#include "cmm/linear_model.hpp"

namespace cmm {

/// Normalization of quadrature second moments.
///  - half: X = (o + o^dag)/sqrt(2), vacuum variance 1/2 (output of the Lyapunov solve)
///  - unit: vacuum variance 1 (input convention of the coherence formulas)
enum class Convention { half, unit };

struct CovarianceState {
    Matrix6 V = Matrix6::Zero();
    Vector6 d = Vector6::Zero();
    Convention convention = Convention::half;
};

/// Unique symmetric solution of A V + V A^T = -D.
///
/// Vectorizes to a 36x36 Kronecker-sum system, solves it densely, symmetrizes
/// and verifies ||A V + V A^T + D||_F <= 1e-10 ||D||_F. Throws UnstableError
/// when A is not Hurwitz and NumericalError (with the residual) when the
/// residual check fails.
Matrix6 solve_lyapunov(const Matrix6& A, const Matrix6& D);

/// Frobenius norm of A V + V A^T + D.
double lyapunov_residual(const Matrix6& A, const Matrix6& V, const Matrix6& D);

/// Classical RK4 integration of dV/dt = A V + V A^T + D from the vacuum
/// V(0) = I/2 up to t_end, using ceil(t_end/dt) equal steps so the last one
/// lands exactly on t_end.
/// Throws NumericalError when the iterate blows up.
Matrix6 integrate_lyapunov_ode(const Matrix6& A, const Matrix6& D, double t_end, double dt);

/// Quadrature means sqrt(2) (Re o_s, Im o_s) per mode, half convention.
Vector6 displacement(const SteadyState& steady);

}  // namespace cmm
