#include "cmm/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

constexpr Complex kI{0.0, 1.0};

SteadyState closed_form(const PhysicalParams& p, double delta_m_eff)
{
    const double eps = drive_amplitude(p.P, p.kappa_m, p.omega_l);
    const Complex cavity = kI * p.delta_a + p.kappa_a;
    const Complex magnon = kI * (delta_m_eff + p.delta_B) + p.kappa_m;
    const Complex denom = p.J * p.J + cavity * magnon;
    if (std::abs(denom) == 0.0) throw SingularityError("solve_steady: degenerate magnon denominator");

    SteadyState s;
    s.m_s = eps * cavity / denom;
    s.a_s = -kI * p.J * s.m_s / cavity;
    s.b_s = -kI * p.g * std::norm(s.m_s) / (kI * p.omega_b + p.kappa_b);
    s.delta_m_bare = delta_m_eff - 2.0 * p.g * s.b_s.real();
    return s;
}

}  // namespace

SteadyState solve_steady(const PhysicalParams& params)
{
    params.validate();
    return closed_form(params, params.delta_m_eff);
}

BareDetuningSolution solve_steady_bare(const PhysicalParams& params, double delta_m_bare)
{
    params.validate();
    constexpr int kMaxIterations = 1000;
    constexpr double kDamping = 0.5;
    const double tolerance = 1e-12 * params.omega_b;

    std::vector<double> history;
    double current = delta_m_bare;
    history.push_back(current);
    for (int it = 1; it <= kMaxIterations; ++it) {
        const SteadyState s = closed_form(params, current);
        const double target = delta_m_bare + 2.0 * params.g * s.b_s.real();
        const double next = (1.0 - kDamping) * current + kDamping * target;
        history.push_back(next);
        if (std::abs(next - current) < tolerance) {
            BareDetuningSolution out;
            out.steady = closed_form(params, next);
            out.delta_m_eff = next;
            out.iterations = it;
            return out;
        }
        current = next;
    }
    throw ConvergenceError("solve_steady_bare: no convergence after " + std::to_string(kMaxIterations) +
                               " iterations (possible multistability)",
                           std::move(history));
}

Complex simplified_ms(const PhysicalParams& params)
{
    params.validate();
    const double eps = drive_amplitude(params.P, params.kappa_m, params.omega_l);
    const double pull = params.delta_a * (params.delta_m_eff + params.delta_B);
    const double denom = params.J * params.J - pull;
    const double scale = std::max(params.J * params.J, std::abs(pull));
    if (denom == 0.0 || std::abs(denom) <= 1e-12 * scale) {
        throw SingularityError("simplified_ms: J^2 = delta_a (delta_m_eff + delta_B)");
    }
    return kI * eps * params.delta_a / denom;
}

}  // namespace cmm
