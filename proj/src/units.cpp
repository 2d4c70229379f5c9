#include "cmm/units.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cmm/errors.hpp"

namespace cmm {

PhysicalParams PhysicalParams::baseline()
{
    PhysicalParams p;
    p.omega_b = kTwoPi * 20e6;
    p.omega_a = kTwoPi * 10e9;
    p.omega_l = kTwoPi * 10e9;
    p.delta_a = p.omega_b;
    p.delta_m_eff = 0.9 * p.omega_b;
    p.delta_B = 0.0;
    p.kappa_a = kTwoPi * 1e6;
    p.kappa_m = kTwoPi * 1e6;
    p.kappa_b = kTwoPi * 100.0;
    p.J = kTwoPi * 1e6;
    p.g = kTwoPi * 0.1;
    p.P = 0.0;
    p.T = 10.0;
    return p;
}

void PhysicalParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw DomainError(what);
    };
    require(kappa_a > 0.0, "kappa_a must be positive");
    require(kappa_m > 0.0, "kappa_m must be positive");
    require(kappa_b > 0.0, "kappa_b must be positive");
    require(omega_b > 0.0, "omega_b must be positive");
    require(P >= 0.0, "drive power must be non-negative");
    require(T >= 0.0, "temperature must be non-negative");
    for (const auto& f : param_fields()) {
        if (!std::isfinite(this->*f.member)) throw DomainError(std::string(f.name) + " is not finite");
    }
}

double thermal_occupation(double omega, double T)
{
    if (!(omega > 0.0)) throw DomainError("thermal_occupation: omega must be positive");
    if (T < 0.0) throw DomainError("thermal_occupation: temperature must be non-negative");
    if (T == 0.0) return 0.0;
    const double x = PhysicalConstants::hbar * omega / (PhysicalConstants::k_B * T);
    return 1.0 / std::expm1(x);
}

double drive_amplitude(double P, double kappa_m, double omega_l)
{
    if (P < 0.0) throw DomainError("drive_amplitude: power must be non-negative");
    if (!(kappa_m > 0.0)) throw DomainError("drive_amplitude: kappa_m must be positive");
    if (!(omega_l > 0.0)) throw DomainError("drive_amplitude: omega_l must be positive");
    return std::sqrt(2.0 * kappa_m * P / (PhysicalConstants::hbar * omega_l));
}

BathOccupations bath_occupations(const PhysicalParams& params)
{
    return {thermal_occupation(params.omega_a, params.T),
            thermal_occupation(params.magnon_frequency(), params.T),
            thermal_occupation(params.omega_b, params.T)};
}

namespace {

constexpr std::array<ParamField, 13> kFields{{
    {"omega_b", &PhysicalParams::omega_b, Quantity::angular_frequency},
    {"omega_a", &PhysicalParams::omega_a, Quantity::angular_frequency},
    {"omega_l", &PhysicalParams::omega_l, Quantity::angular_frequency},
    {"delta_a", &PhysicalParams::delta_a, Quantity::angular_frequency},
    {"delta_m_eff", &PhysicalParams::delta_m_eff, Quantity::angular_frequency},
    {"delta_B", &PhysicalParams::delta_B, Quantity::angular_frequency},
    {"kappa_a", &PhysicalParams::kappa_a, Quantity::angular_frequency},
    {"kappa_m", &PhysicalParams::kappa_m, Quantity::angular_frequency},
    {"kappa_b", &PhysicalParams::kappa_b, Quantity::angular_frequency},
    {"J", &PhysicalParams::J, Quantity::angular_frequency},
    {"g", &PhysicalParams::g, Quantity::angular_frequency},
    {"P", &PhysicalParams::P, Quantity::power},
    {"T", &PhysicalParams::T, Quantity::temperature},
}};

}  // namespace

std::span<const ParamField> param_fields() { return kFields; }

const ParamField* find_param_field(std::string_view name)
{
    auto it = std::find_if(kFields.begin(), kFields.end(), [&](const ParamField& f) { return f.name == name; });
    return it == kFields.end() ? nullptr : &*it;
}

}  // namespace cmm
