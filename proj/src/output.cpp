#include "trapdirac/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "trapdirac/config.hpp"

namespace trapdirac {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_text(const TimeSeries& series) {
  series.validate();
  std::string out = "pt," + series.label + "\n";
  out.reserve(out.size() + series.size() * 48);
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += g17(series.times[i]);
    out += ',';
    out += g17(series.values[i]);
    out += '\n';
  }
  return out;
}

std::string state_tag(std::string_view state) {
  std::string out;
  for (char c : state) {
    if (c == '(') out += '_';
    else if (c != ')') out += c;
  }
  return out;
}

namespace {

std::string stem(std::string_view prefix, const ScenarioConfig& cfg) {
  std::string s = prefix.empty() ? std::string() : std::string(prefix) + "_";
  return s + state_tag(cfg.state);
}

}  // namespace

std::string series_filename(std::string_view prefix, const ScenarioConfig& cfg, std::string_view label) {
  return stem(prefix, cfg) + "_" + std::string(label) + "_m" + format_real(cfg.m_over_p) + ".csv";
}

std::string metadata_filename(std::string_view prefix, const ScenarioConfig& cfg) {
  return stem(prefix, cfg) + "_m" + format_real(cfg.m_over_p) + ".meta";
}

std::string metadata_text(const RunResult& result) {
  std::ostringstream os;
  os << to_text(result.config);
  os << "# version = " << result.metadata.version << "\n";
  for (int n = 0; n < 2; ++n)
    for (int s = 0; s < 2; ++s)
      os << "# lambda_" << n << s << " = " << g17(result.metadata.lambdas[spectral_index(n, s)]) << "\n";
  os << "# c1 = " << g17(result.metadata.c1) << "\n";
  os << "# c2 = " << g17(result.metadata.c2) << "\n";
  if (result.metadata.discord_side_asymmetry)
    os << "# discord_side_asymmetry = " << g17(*result.metadata.discord_side_asymmetry) << "\n";
  if (result.cusps) {
    os << "# cusp_times =";
    for (double t : result.cusps->times) os << " " << g17(t);
    os << "\n# cusp_jumps =";
    for (double j : result.cusps->jump_sizes) os << " " << g17(j);
    os << "\n";
  }
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> emit_csv(const RunResult& result, const std::filesystem::path& dir,
                                            std::string_view prefix) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& s : result.series) {
    auto path = dir / series_filename(prefix, result.config, s.label);
    write_text_file(path, csv_text(s));
    written.push_back(std::move(path));
  }
  auto meta = dir / metadata_filename(prefix, result.config);
  write_text_file(meta, metadata_text(result));
  written.push_back(std::move(meta));
  return written;
}

}  // namespace trapdirac
