#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmm/sweep.hpp"
#include "cmm/units.hpp"

namespace cmm {

/// Result of parsing a flat `key = value` configuration document.
struct ParsedConfig {
    PhysicalParams params;
    /// Present when the document set a bare `delta_m` instead of delta_m_eff.
    std::optional<double> delta_m_bare;
    std::optional<SweepSpec> sweep;
    /// Parameter keys filled from the baseline, in registry order.
    std::vector<std::string> defaulted;
};

/// Parses a configuration document.
///
/// Plain numbers on frequency keys are in Hz (converted with 2 pi);
/// "<x> wb" means x omega_b; powers are in W unless suffixed "mW";
/// temperature in K. Unknown keys, duplicates, malformed values and
/// omega_b given in wb raise ConfigError with line and key.
ParsedConfig parse_config(std::string_view text);

/// Parses a single value for the named quantity, resolving "wb" against omega_b.
double parse_quantity(std::string_view text, Quantity quantity, double omega_b);

/// Renders params as a config document that parse_config reads back.
std::string format_config(const PhysicalParams& params);

}  // namespace cmm
