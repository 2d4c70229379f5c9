#include "cmm/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string_view>
#include <variant>

#include "cmm/errors.hpp"

namespace cmm {

std::string format_number(double value)
{
    if (value == 0.0) return "0";
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw Error("format_number: conversion failed");
    return std::string(buf.data(), ptr);
}

namespace {

// One cell: absent, boolean, integer index or real number.
using Cell = std::variant<std::monostate, bool, std::size_t, double>;

struct Row {
    std::vector<std::string> names;
    std::vector<Cell> cells;

    void add(std::string name, Cell cell)
    {
        names.push_back(std::move(name));
        cells.push_back(cell);
    }
};

std::string render(const Cell& cell, bool json)
{
    if (std::holds_alternative<std::monostate>(cell)) return json ? "null" : "";
    if (const bool* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    if (const std::size_t* n = std::get_if<std::size_t>(&cell)) return std::to_string(*n);
    const double v = std::get<double>(cell);
    if (!std::isfinite(v)) return json ? "null" : "";
    return format_number(v);
}

Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

void add_params(Row& row, const PhysicalParams& params)
{
    for (const auto& field : param_fields()) row.add(std::string(field.name), params.*field.member);
}

void add_point_body(Row& row, const PointRecord& rec, const std::string& suffix)
{
    row.add("stable" + suffix, rec.stable);
    const std::pair<const char*, Complex> amps[] = {
        {"a_s", rec.steady.a_s}, {"m_s", rec.steady.m_s}, {"b_s", rec.steady.b_s}};
    const bool solved = rec.status == "ok" || rec.status == "unstable";
    for (const auto& [name, z] : amps) {
        row.add(std::string("re_") + name + suffix, solved ? Cell{z.real()} : Cell{});
        row.add(std::string("im_") + name + suffix, solved ? Cell{z.imag()} : Cell{});
    }
    const auto& c = rec.coherence;
    row.add("C_a" + suffix, c ? Cell{c->C_a} : Cell{});
    row.add("C_m" + suffix, c ? Cell{c->C_m} : Cell{});
    row.add("C_b" + suffix, c ? Cell{c->C_b} : Cell{});
    row.add("C_tot" + suffix, c ? Cell{c->C_tot} : Cell{});
    row.add("abscissa" + suffix, solved ? Cell{rec.spectral_abscissa} : Cell{});
}

Row point_row(const PointRecord& rec)
{
    Row row;
    row.add("schema_version", std::size_t{kSchemaVersion});
    row.add("grid_i", rec.grid_i);
    row.add("grid_j", rec.grid_j);
    add_params(row, rec.params);
    add_point_body(row, rec, "");
    return row;
}

Row pair_row(const PairRecord& rec)
{
    Row row;
    row.add("schema_version", std::size_t{kSchemaVersion});
    row.add("grid_i", rec.grid_i);
    row.add("grid_j", rec.grid_j);
    add_params(row, rec.plus.params);
    add_point_body(row, rec.plus, "_plus");
    add_point_body(row, rec.minus, "_minus");
    row.add("I_a", optional_cell(rec.I_a));
    row.add("I_m", optional_cell(rec.I_m));
    row.add("I_b", optional_cell(rec.I_b));
    row.add("I_tot", optional_cell(rec.I_tot));
    return row;
}

Row stability_row(const StabilityRecord& rec)
{
    Row row;
    row.add("schema_version", std::size_t{kSchemaVersion});
    row.add("grid_i", rec.grid_i);
    row.add("grid_j", rec.grid_j);
    add_params(row, rec.params);
    const std::string suffix = rec.minus ? "_plus" : "";
    row.add("stable" + suffix, rec.plus.stable);
    row.add("abscissa" + suffix, rec.plus.spectral_abscissa);
    if (rec.minus) {
        row.add("stable_minus", rec.minus->stable);
        row.add("abscissa_minus", rec.minus->spectral_abscissa);
    }
    return row;
}

void write_header(std::ostream& out, const std::vector<std::string>& names)
{
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? "," : "") << names[k];
    out << '\n';
}

void write_row(std::ostream& out, const Row& row, OutputFormat format)
{
    const bool json = format == OutputFormat::jsonl;
    if (json) out << '{';
    for (std::size_t k = 0; k < row.cells.size(); ++k) {
        if (k) out << ',';
        if (json) out << '"' << row.names[k] << "\":";
        out << render(row.cells[k], json);
    }
    out << (json ? "}\n" : "\n");
}

template <class Record, class MakeRow>
void write_records(std::ostream& out, std::span<const Record> records, OutputFormat format,
                   const std::vector<std::string>& header, MakeRow make_row)
{
    if (format == OutputFormat::csv) write_header(out, header);
    for (const auto& rec : records) write_row(out, make_row(rec), format);
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer writer)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open for writing", path.string());
    writer(file);
    file.flush();
    if (!file) throw IoError("write failed", path.string());
}

}  // namespace

std::vector<std::string> point_columns() { return point_row(PointRecord{}).names; }

std::vector<std::string> pair_columns() { return pair_row(PairRecord{}).names; }

void write_points(std::ostream& out, std::span<const PointRecord> records, OutputFormat format)
{
    write_records(out, records, format, point_columns(), point_row);
}

void write_pairs(std::ostream& out, std::span<const PairRecord> records, OutputFormat format)
{
    write_records(out, records, format, pair_columns(), pair_row);
}

void emit_dataset(const std::filesystem::path& path, std::span<const PointRecord> records, OutputFormat format)
{
    write_file(path, [&](std::ostream& out) { write_points(out, records, format); });
}

void emit_dataset(const std::filesystem::path& path, std::span<const PairRecord> records, OutputFormat format)
{
    write_file(path, [&](std::ostream& out) { write_pairs(out, records, format); });
}

std::vector<StabilityRecord> stability_map(const SweepSpec& spec)
{
    spec.validate();
    const auto v1 = spec.axis1.values();
    const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};
    std::vector<StabilityRecord> out;
    out.reserve(v1.size() * v2.size());
    auto verdict = [](const PhysicalParams& p) { return stability(build_drift(p, solve_steady(p))); };
    for (std::size_t i = 0; i < v1.size(); ++i) {
        for (std::size_t j = 0; j < v2.size(); ++j) {
            PhysicalParams p = with_parameter(spec.base, spec.axis1.parameter, v1[i]);
            if (spec.axis2) p = with_parameter(p, spec.axis2->parameter, v2[j]);
            StabilityRecord rec;
            rec.grid_i = i;
            rec.grid_j = j;
            if (spec.pair_barnett) {
                p.delta_B = std::abs(p.delta_B);
                PhysicalParams mirrored = p;
                mirrored.delta_B = -p.delta_B;
                rec.minus = verdict(mirrored);
            }
            rec.params = p;
            rec.plus = verdict(p);
            out.push_back(rec);
        }
    }
    return out;
}

void emit_stability_map(const std::filesystem::path& path, std::span<const StabilityRecord> records)
{
    write_file(path, [&](std::ostream& out) {
        StabilityRecord probe;
        if (!records.empty()) probe.minus = records.front().minus;
        write_header(out, stability_row(probe).names);
        for (const auto& rec : records) write_row(out, stability_row(rec), OutputFormat::csv);
    });
}

nlohmann::ordered_json dataset_metadata(const PhysicalParams& params, const std::vector<std::string>& defaulted,
                                        const std::vector<std::string>& notes)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["units"] = "angular frequencies in rad/s, P in W, T in K";
    nlohmann::ordered_json resolved;
    for (const auto& field : param_fields()) resolved[std::string(field.name)] = params.*field.member;
    doc["parameters"] = resolved;
    doc["delta_a_choice"] = {
        {"value", params.delta_a},
        {"in_units_of_omega_b", params.delta_a / params.omega_b},
        {"note", "delta_a is an explicit input; default delta_a = omega_b is an assumption"}};
    doc["defaulted"] = defaulted;
    doc["conventions"] = {
        {"quadrature_order", {"X_a", "Y_a", "X_m", "Y_m", "X_b", "Y_b"}},
        {"covariance", "Lyapunov solved with vacuum variance 1/2, rescaled to vacuum variance 1 for coherence"},
        {"coherence_units", "bits"},
        {"drive_phase", "epsilon_l real and positive"},
        {"magnon_bath_frequency", "omega_l + delta_m_eff + delta_B"}};
    doc["notes"] = notes;
    return doc;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc)
{
    write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

}  // namespace cmm
