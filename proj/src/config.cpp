#include "cmm/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cmm/dataset.hpp"
#include "cmm/errors.hpp"

namespace cmm {

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text)
{
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

const std::set<std::string, std::less<>> kSweepKeys{
    "axis1", "axis1_min", "axis1_max", "axis1_points", "axis1_scale",
    "axis2", "axis2_min", "axis2_max", "axis2_points", "axis2_scale",
    "pair_barnett", "format"};

constexpr std::string_view kBareDetuningKey = "delta_m";

Quantity quantity_of(std::string_view parameter)
{
    if (parameter == kDeltaBMagnitude) return Quantity::angular_frequency;
    const ParamField* field = find_param_field(parameter);
    if (field == nullptr) throw ConfigError("unknown sweep parameter '" + std::string(parameter) + "'", std::string(parameter));
    return field->quantity;
}

}  // namespace

double parse_quantity(std::string_view text, Quantity quantity, double omega_b)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = trim(text.substr(1, text.size() - 2));

    std::string_view number = text;
    std::string_view unit;
    if (const auto space = text.find_first_of(" \t"); space != std::string_view::npos) {
        number = text.substr(0, space);
        unit = trim(text.substr(space));
    }
    const double value = parse_double(number);

    switch (quantity) {
    case Quantity::angular_frequency:
        if (unit.empty() || unit == "Hz") return kTwoPi * value;
        if (unit == "wb") {
            if (!(omega_b > 0.0)) throw ConfigError("'wb' used before omega_b is known");
            return value * omega_b;
        }
        if (unit == "rad/s") return value;
        break;
    case Quantity::power:
        if (unit.empty() || unit == "W") return value;
        if (unit == "mW") return 1e-3 * value;
        break;
    case Quantity::temperature:
        if (unit.empty() || unit == "K") return value;
        break;
    }
    throw ConfigError("unit '" + std::string(unit) + "' is not valid here");
}

ParsedConfig parse_config(std::string_view text)
{
    std::map<std::string, RawEntry, std::less<>> entries;
    std::istringstream stream{std::string(text)};
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        std::string_view line = raw_line;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {}, line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value", key, line_no);
        }
        if (find_param_field(key) == nullptr && !kSweepKeys.contains(key) && key != kBareDetuningKey) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", key, line_no);
        }
        if (!entries.emplace(key, RawEntry{value, line_no}).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
        }
    }

    auto resolve = [&](const std::string& key, Quantity quantity, double omega_b) {
        const RawEntry& entry = entries.at(key);
        try {
            return parse_quantity(entry.value, quantity, omega_b);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(entry.line) + ", key '" + key + "': " + e.what(), key,
                              entry.line);
        }
    };

    ParsedConfig out;
    const PhysicalParams defaults = PhysicalParams::baseline();
    double omega_b = defaults.omega_b;
    if (auto it = entries.find("omega_b"); it != entries.end()) {
        if (it->second.value.find("wb") != std::string::npos) {
            throw ConfigError("line " + std::to_string(it->second.line) +
                                  ": omega_b cannot be given relative to itself",
                              "omega_b", it->second.line);
        }
        omega_b = resolve("omega_b", Quantity::angular_frequency, 0.0);
    }

    if (entries.contains("delta_m_eff") && entries.contains(std::string(kBareDetuningKey))) {
        const int line = entries.at(std::string(kBareDetuningKey)).line;
        throw ConfigError("line " + std::to_string(line) + ": delta_m and delta_m_eff are mutually exclusive",
                          std::string(kBareDetuningKey), line);
    }

    for (const auto& field : param_fields()) {
        const std::string key(field.name);
        if (key == "omega_b") {
            out.params.omega_b = omega_b;
            if (!entries.contains(key)) out.defaulted.push_back(key);
            continue;
        }
        if (entries.contains(key)) {
            out.params.*field.member = resolve(key, field.quantity, omega_b);
            continue;
        }
        // Detunings default relative to the resolved omega_b.
        double value = defaults.*field.member;
        if (key == "delta_a") value = omega_b;
        if (key == "delta_m_eff") value = 0.9 * omega_b;
        out.params.*field.member = value;
        if (!(key == "delta_m_eff" && entries.contains(std::string(kBareDetuningKey)))) out.defaulted.push_back(key);
    }
    if (entries.contains(std::string(kBareDetuningKey))) {
        out.delta_m_bare = resolve(std::string(kBareDetuningKey), Quantity::angular_frequency, omega_b);
    }

    const bool has_sweep_keys = std::any_of(kSweepKeys.begin(), kSweepKeys.end(),
                                            [&](const std::string& k) { return entries.contains(k); });
    if (has_sweep_keys) {
        if (!entries.contains("axis1")) throw ConfigError("sweep keys given without axis1", "axis1");

        auto read_axis = [&](const std::string& prefix) {
            SweepAxis axis;
            axis.parameter = entries.at(prefix).value;
            const Quantity q = quantity_of(axis.parameter);
            for (const char* suffix : {"_min", "_max", "_points"}) {
                if (!entries.contains(prefix + suffix)) {
                    throw ConfigError("missing key '" + prefix + suffix + "'", prefix + suffix);
                }
            }
            axis.min = resolve(prefix + "_min", q, omega_b);
            axis.max = resolve(prefix + "_max", q, omega_b);
            const double points = parse_double(entries.at(prefix + "_points").value);
            if (points < 2 || points != std::floor(points)) {
                throw ConfigError("'" + prefix + "_points' must be an integer >= 2", prefix + "_points");
            }
            axis.points = static_cast<std::size_t>(points);
            if (auto it = entries.find(prefix + "_scale"); it != entries.end()) {
                if (it->second.value == "linear") axis.scale = AxisScale::linear;
                else if (it->second.value == "log") axis.scale = AxisScale::log;
                else throw ConfigError("scale must be 'linear' or 'log'", prefix + "_scale", it->second.line);
            }
            return axis;
        };

        SweepSpec spec;
        spec.name = "sweep";
        spec.base = out.params;
        spec.axis1 = read_axis("axis1");
        if (entries.contains("axis2")) spec.axis2 = read_axis("axis2");
        if (auto it = entries.find("pair_barnett"); it != entries.end()) {
            if (it->second.value == "true") spec.pair_barnett = true;
            else if (it->second.value == "false") spec.pair_barnett = false;
            else throw ConfigError("pair_barnett must be 'true' or 'false'", "pair_barnett", it->second.line);
        }
        if (auto it = entries.find("format"); it != entries.end()) {
            if (it->second.value == "csv") spec.format = OutputFormat::csv;
            else if (it->second.value == "jsonl") spec.format = OutputFormat::jsonl;
            else throw ConfigError("format must be 'csv' or 'jsonl'", "format", it->second.line);
        }
        spec.validate();
        out.sweep = std::move(spec);
    }

    try {
        out.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid parameters: ") + e.what());
    }
    return out;
}

std::string format_config(const PhysicalParams& params)
{
    std::string text = "# frequencies in Hz (angular value / 2 pi), P in W, T in K\n";
    for (const auto& field : param_fields()) {
        double value = params.*field.member;
        if (field.quantity == Quantity::angular_frequency) value /= kTwoPi;
        text += std::string(field.name) + " = " + format_number(value) + "\n";
    }
    return text;
}

}  // namespace cmm
