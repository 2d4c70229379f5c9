#pragma once

#include <numbers>

namespace cmm {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// CODATA / SI-2019 values.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;  // J s
    static constexpr double k_B = 1.380649e-23;      // J / K
};

/// Full experiment configuration. Every frequency-like field is an angular
/// frequency in rad/s; P is in W and T in K.
///
/// delta_m_eff is the effective magnon detuning, i.e. it already includes the
/// static magnetostrictive frequency pull. delta_a is an independent input;
/// omega_a and omega_l only enter the thermal occupation and drive amplitude.
struct PhysicalParams {
    double omega_b = 0.0;
    double omega_a = 0.0;
    double omega_l = 0.0;
    double delta_a = 0.0;
    double delta_m_eff = 0.0;
    double delta_B = 0.0;
    double kappa_a = 0.0;
    double kappa_m = 0.0;
    double kappa_b = 0.0;
    double J = 0.0;
    double g = 0.0;
    double P = 0.0;
    double T = 0.0;

    /// Experimental baseline: omega_b/2pi = 20 MHz, omega_a/2pi = omega_l/2pi = 10 GHz,
    /// kappa_a/2pi = kappa_m/2pi = 1 MHz, kappa_b/2pi = 100 Hz, J/2pi = 1 MHz,
    /// g/2pi = 0.1 Hz, T = 10 K, delta_m_eff = 0.9 omega_b, delta_a = omega_b,
    /// delta_B = 0, P = 0.
    static PhysicalParams baseline();

    /// Throws DomainError when a rate, omega_b, P or T is out of range.
    void validate() const;

    /// Lab-frame magnon frequency omega_l + delta_m_eff + delta_B.
    double magnon_frequency() const { return omega_l + delta_m_eff + delta_B; }

    bool operator==(const PhysicalParams&) const = default;
};

struct BathOccupations {
    double N_a = 0.0;
    double N_m = 0.0;
    double N_b = 0.0;
};

/// Bose-Einstein occupation 1/(exp(hbar omega / k_B T) - 1); zero at T = 0.
double thermal_occupation(double omega, double T);

/// Drive amplitude sqrt(2 kappa_m P / (hbar omega_l)) in 1/s.
double drive_amplitude(double P, double kappa_m, double omega_l);

/// Bath occupations of the three modes. The magnon bath is evaluated at the
/// Barnett-shifted lab-frame frequency.
BathOccupations bath_occupations(const PhysicalParams& params);

}  // namespace cmm

#include <span>
#include <string_view>

namespace cmm {

enum class Quantity { angular_frequency, power, temperature };

/// Named field of PhysicalParams. The registry order is the canonical
/// column order used by config files and datasets.
struct ParamField {
    std::string_view name;
    double PhysicalParams::*member;
    Quantity quantity;
};

std::span<const ParamField> param_fields();

/// Registry lookup by name; nullptr when unknown.
const ParamField* find_param_field(std::string_view name);

}  // namespace cmm
