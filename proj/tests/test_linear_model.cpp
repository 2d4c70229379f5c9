#include <random>

#include <doctest.h>

#include "cmm/errors.hpp"
#include "cmm/linear_model.hpp"
#include "oracles.hpp"

using namespace cmm;
using Q = QuadratureOrdering;

namespace {

PhysicalParams fig3_point()
{
    PhysicalParams p = PhysicalParams::baseline();
    p.P = 6e-7;
    p.delta_m_eff = 0.3 * p.omega_b;
    p.delta_B = 0.2 * p.omega_b;
    return p;
}

double max_abs(const Matrix6& M) { return M.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("effective couplings")
{
    const double g = 3.0;
    CHECK(effective_couplings(g, {2.5, 0.0}).g2 == 0.0);
    CHECK(effective_couplings(g, {2.5, 0.0}).g1 == -15.0);
    const auto imaginary = effective_couplings(g, {0.0, 1.0});
    CHECK(imaginary.g1 == 0.0);
    CHECK(imaginary.g2 == -2.0 * g);

    // Fig. 5 setting: |(g1, g2)| = 2 g |m_s|.
    PhysicalParams p = fig3_point();
    p.P = 7e-7;
    p.J = 0.26 * p.omega_b;
    p.delta_B = -0.24 * p.omega_b;
    p.g = kTwoPi * 8.0;
    const auto s = solve_steady(p);
    const auto c = effective_couplings(p.g, s.m_s);
    CHECK(std::hypot(c.g1, c.g2) == doctest::Approx(2.0 * p.g * std::abs(s.m_s)).epsilon(1e-14));
}

TEST_CASE("drift matrix structure")
{
    SUBCASE("decoupled modes are damped rotations")
    {
        PhysicalParams p = fig3_point();
        p.J = 0.0;
        p.g = 0.0;
        const Matrix6 A = build_drift(p, solve_steady(p));
        const double kappa[3] = {p.kappa_a, p.kappa_m, p.kappa_b};
        const double delta[3] = {p.delta_a, p.delta_m_eff + p.delta_B, p.omega_b};
        for (int k = 0; k < 3; ++k) {
            Eigen::Matrix2d expected;
            expected << -kappa[k], delta[k], -delta[k], -kappa[k];
            CHECK(A.block<2, 2>(2 * k, 2 * k) == expected);
        }
        Matrix6 off = A;
        for (int k = 0; k < 3; ++k) off.block<2, 2>(2 * k, 2 * k).setZero();
        CHECK(off.isZero(0.0));
    }
    SUBCASE("printed first-row entries")
    {
        const auto p = fig3_point();
        const Matrix6 A = build_drift(p, solve_steady(p));
        CHECK(A(Q::Xa, Q::Ya) == p.delta_a);
        CHECK(A(Q::Xa, Q::Ym) == p.J);
    }
    SUBCASE("printed matrix under its (a, b, m) column convention")
    {
        // The printed rows follow (a, m, b) while its columns follow (a, b, m); g2 there
        // lacks the factor g and the (Y_b, X_b) entry carries the wrong sign.
        PhysicalParams p = fig3_point();
        p.g = kTwoPi * 3.0;
        const auto s = solve_steady(p);
        const double g1 = -p.g * 2.0 * s.m_s.real();
        const double g2 = -p.g * 2.0 * s.m_s.imag();  // with the factor g restored
        const double d = p.delta_m_eff + p.delta_B;
        Matrix6 printed;
        printed << -p.kappa_a, p.delta_a, 0, 0, 0, p.J,
                   -p.delta_a, -p.kappa_a, 0, 0, -p.J, 0,
                   0, p.J, -g2, 0, -p.kappa_m, d,
                   -p.J, 0, g1, 0, -d, -p.kappa_m,
                   0, 0, -p.kappa_b, p.omega_b, 0, 0,
                   0, 0, p.omega_b, -p.kappa_b, g1, g2;
        // Column permutation (X_a, Y_a, X_b, Y_b, X_m, Y_m) -> (X_a, Y_a, X_m, Y_m, X_b, Y_b).
        Matrix6 reordered;
        const int from[6] = {0, 1, 4, 5, 2, 3};
        for (int c = 0; c < 6; ++c) reordered.col(c) = printed.col(from[c]);
        reordered(Q::Yb, Q::Xb) = -reordered(Q::Yb, Q::Xb);
        CHECK((reordered - build_drift(p, s)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("drift matrix equals the finite-difference Jacobian of the mean-field flow")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<PhysicalParams> cases{fig3_point()};
    for (int k = 0; k < 40; ++k) {
        PhysicalParams p = PhysicalParams::baseline();
        p.P = std::pow(10.0, -8.0 + 3.0 * (u(rng) + 1.0));
        p.J = p.omega_b * 0.4 * (1.0 + u(rng));
        p.g = kTwoPi * std::pow(10.0, 1.5 * u(rng));
        p.delta_m_eff = p.omega_b * u(rng);
        p.delta_B = 0.5 * p.omega_b * u(rng);
        cases.push_back(p);
    }
    for (const auto& p : cases) {
        const auto s = solve_steady(p);
        // The closed form is a fixed point of the flow.
        const Vector6 residual = oracle::mean_field_flow(p, s.delta_m_bare, oracle::steady_quadratures(s));
        CHECK(residual.cwiseAbs().maxCoeff() <= 1e-9 * drive_amplitude(p.P, p.kappa_m, p.omega_l) + 1e-6);

        const Matrix6 A = build_drift(p, s);
        const Matrix6 J = oracle::finite_difference_jacobian(p, s);
        CHECK(max_abs(A - J) <= 1e-6 * max_abs(A));
    }
}

TEST_CASE("drift matrix invariants")
{
    PhysicalParams p = fig3_point();
    p.P = 0.0;
    const Matrix6 A0 = build_drift(p, solve_steady(p));
    const auto c = effective_couplings(p.g, solve_steady(p).m_s);
    CHECK(c.g1 == 0.0);
    CHECK(c.g2 == 0.0);
    p.g *= 1e3;
    CHECK(build_drift(p, solve_steady(p)) == A0);

    // Only the sum delta_m_eff + delta_B enters.
    PhysicalParams q = fig3_point();
    const Matrix6 A = build_drift(q, solve_steady(q));
    q.delta_m_eff += 0.125 * q.omega_b;
    q.delta_B -= 0.125 * q.omega_b;
    CHECK(max_abs(build_drift(q, solve_steady(q)) - A) <= 1e-12 * max_abs(A));
}

TEST_CASE("diffusion matrix")
{
    PhysicalParams p = PhysicalParams::baseline();
    p.T = 0.0;
    const Matrix6 D0 = build_diffusion(p, bath_occupations(p));
    Vector6 expected;
    expected << p.kappa_a, p.kappa_a, p.kappa_m, p.kappa_m, p.kappa_b, p.kappa_b;
    CHECK(D0 == Matrix6(expected.asDiagonal()));

    p.T = 10.0;
    const auto n = bath_occupations(p);
    const Matrix6 D = build_diffusion(p, n);
    CHECK(D(Q::Xb, Q::Xb) == doctest::Approx(p.kappa_b * (2.0 * 10417.809576046023 + 1.0)).epsilon(1e-12));
    CHECK(D.diagonal().minCoeff() > 0.0);
    CHECK((D - Matrix6(D.diagonal().asDiagonal())).isZero(0.0));

    BathOccupations doubled = n;
    doubled.N_b = n.N_b + 0.5 * (2.0 * n.N_b + 1.0);  // 2N'+1 = 2(2N+1)
    const Matrix6 D2 = build_diffusion(p, doubled);
    CHECK(D2(Q::Yb, Q::Yb) == doctest::Approx(2.0 * D(Q::Yb, Q::Yb)).epsilon(1e-14));
    CHECK(D2(Q::Xa, Q::Xa) == D(Q::Xa, Q::Xa));
}

TEST_CASE("stability verdict")
{
    const auto minus_identity = stability(-Matrix6::Identity());
    CHECK(minus_identity.stable);
    CHECK(minus_identity.spectral_abscissa == doctest::Approx(-1.0));

    const auto p = fig3_point();
    Matrix6 A = build_drift(p, solve_steady(p));
    CHECK(stability(A).stable);
    A(Q::Xa, Q::Xa) = p.kappa_a;
    A(Q::Ya, Q::Ya) = p.kappa_a;
    CHECK_FALSE(stability(A).stable);

    Matrix6 nan = Matrix6::Zero();
    nan(0, 0) = NAN;
    CHECK_THROWS_AS(stability(nan), NumericalError);

    // No margin: a zero eigenvalue is unstable.
    Matrix6 marginal = -Matrix6::Identity();
    marginal(5, 5) = 0.0;
    CHECK_FALSE(stability(marginal).stable);
}

TEST_CASE("stability matches the Routh-Hurwitz oracle on random matrices")
{
    std::mt19937_64 rng(17);
    std::normal_distribution<double> normal;
    int stable = 0, unstable = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Matrix6 A;
        for (int k = 0; k < 36; ++k) A.data()[k] = normal(rng);
        A.diagonal().array() -= 3.0 + normal(rng);
        const auto verdict = stability(A);
        if (std::abs(verdict.spectral_abscissa) < 1e-6) continue;
        CHECK(verdict.stable == oracle::hurwitz_stable(A));
        (verdict.stable ? stable : unstable)++;

        // Time-unit rescaling leaves the verdict unchanged.
        CHECK(stability(7.5e7 * A).stable == verdict.stable);
        CHECK(stability(1e-3 * A).stable == verdict.stable);
    }
    CHECK(stable > 100);
    CHECK(unstable > 100);
}

TEST_CASE("linearize bundles the pieces")
{
    const auto p = fig3_point();
    const auto s = solve_steady(p);
    const auto model = linearize(p, s);
    CHECK(model.drift == build_drift(p, s));
    CHECK(model.diffusion == build_diffusion(p, bath_occupations(p)));
    CHECK(model.stable == (model.spectral_abscissa < 0.0));
    CHECK(model.ordering.labels[Q::Ym] == "Y_m");
}
