#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmm/sweep.hpp"

namespace cmm {

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

std::vector<std::string> point_columns();
std::vector<std::string> pair_columns();

/// Writes records as CSV (header always present) or JSON lines.
void write_points(std::ostream& out, std::span<const PointRecord> records, OutputFormat format);
void write_pairs(std::ostream& out, std::span<const PairRecord> records, OutputFormat format);

/// File variants; throw IoError carrying the path.
void emit_dataset(const std::filesystem::path& path, std::span<const PointRecord> records, OutputFormat format);
void emit_dataset(const std::filesystem::path& path, std::span<const PairRecord> records, OutputFormat format);

/// Stability-only grid: abscissa and verdict per point, mirrored for pairs.
struct StabilityRecord {
    PhysicalParams params;
    std::size_t grid_i = 0;
    std::size_t grid_j = 0;
    StabilityVerdict plus;
    std::optional<StabilityVerdict> minus;
};

std::vector<StabilityRecord> stability_map(const SweepSpec& spec);
void emit_stability_map(const std::filesystem::path& path, std::span<const StabilityRecord> records);

/// Provenance document for a dataset: resolved parameters, the delta_a
/// choice and the list of defaulted keys.
nlohmann::ordered_json dataset_metadata(const PhysicalParams& params,
                                        const std::vector<std::string>& defaulted,
                                        const std::vector<std::string>& notes = {});

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

}  // namespace cmm
