#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "trapdirac/scenario.hpp"

namespace trapdirac {

// "pt,<label>" then one row per sample, both columns with 17 significant digits.
std::string csv_text(const TimeSeries& series);

// Filesystem-safe state tag: basis(a) -> basis_a.
std::string state_tag(std::string_view state);

// <prefix>_<state>_<label>_m<m_over_p>.csv (no leading prefix when empty).
std::string series_filename(std::string_view prefix, const ScenarioConfig& cfg, std::string_view label);

// <prefix>_<state>_m<m_over_p>.meta
std::string metadata_filename(std::string_view prefix, const ScenarioConfig& cfg);

// The config as key = value lines followed by '#'-commented run facts
// (version, lambda_{n,s}, c1, c2, cusps). Feeding it to parse_config gives the
// config back. Wall time is left out so reruns are byte-identical.
std::string metadata_text(const RunResult& result);

// Writes every series and the metadata sidecar into `dir` (created if
// missing). Returns the paths written. Throws IoError naming the path.
std::vector<std::filesystem::path> emit_csv(const RunResult& result, const std::filesystem::path& dir,
                                            std::string_view prefix = {});

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace trapdirac
