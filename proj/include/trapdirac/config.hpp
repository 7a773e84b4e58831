#pragma once

// Flat key=value scenario files. '#' starts a comment; blank lines are
// ignored. Reals are written in shortest round-trip form, so a written config
// parses back to the identical ScenarioConfig.
//
//   state = cat
//   m_over_p = 20
//   observables = discord,discord_derivative

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trapdirac/scenario.hpp"

namespace trapdirac {

// Applies one key/value pair to `cfg`. Throws InputError for an unknown key or
// a malformed value.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// Parses text on top of `base`.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});

// Throws IoError when the file cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base = {});

std::string to_text(const ScenarioConfig& cfg);

// Shortest text that reads back as the same double.
std::string format_real(double v);

// Strict parse of a whole string; InputError otherwise.
double parse_real(std::string_view text, std::string_view what);
long parse_integer(std::string_view text, std::string_view what);

// Splits on commas, trimming blanks; empty items are an InputError.
std::vector<std::string> split_list(std::string_view text);

// "key = value" lines of a flat file as (key, value) pairs.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text);

}  // namespace trapdirac
