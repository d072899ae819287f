#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "minbasis/minimality.hpp"
#include "minbasis/partition.hpp"
#include "minbasis/radix.hpp"
#include "minbasis/search.hpp"

namespace minbasis {

inline constexpr const char* kReportSchema = "minbasis/1";

// Partition spec file format: {"h": .., "prefix": [..], "period": .., "pattern": [..]}.
nlohmann::json spec_to_json(const PartitionSpec& spec);
PartitionSpec spec_from_json(const nlohmann::json& j);
void write_spec_file(const std::filesystem::path& path, const PartitionSpec& spec);
PartitionSpec read_spec_file(const std::filesystem::path& path);

nlohmann::json condition_to_json(const ConditionReport& report);
nlohmann::json thmB_to_json(const ThmBReport& report);
nlohmann::json witness_to_json(const WitnessRecord& record);
nlohmann::json minimality_to_json(const MinimalityReport& report);
nlohmann::json decomposition_to_json(const Decomposition& d, bool verified);
nlohmann::json row_to_json(const ClassificationRow& row);

// Stable serialization: sorted keys, fixed two-space indent, one trailing
// newline. Byte-identical for equal inputs.
std::string dump_report(const nlohmann::json& j);

// Human-readable rendering of common report payloads.
std::string render_gaps_text(const std::vector<std::uint64_t>& gap_values, std::uint64_t lo,
                             std::uint64_t hi);
std::string render_minimality_text(const MinimalityReport& report);
std::string render_condition_text(const ConditionReport& report);

}  // namespace minbasis
