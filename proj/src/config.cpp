#include "trapdirac/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace trapdirac {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InputError("invalid number '" + std::string(text) + "' for " + std::string(what));
  return v;
}

long parse_integer(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InputError("invalid integer '" + std::string(text) + "' for " + std::string(what));
  return v;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw InputError("empty item in list '" + std::string(text) + "'");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InputError("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw InputError("line " + std::to_string(lineno) + ": missing key");
    out.emplace_back(std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "state") {
    cfg.state = std::string(trim(value));
  } else if (key == "psi") {
    const auto parts = split_list(value);
    if (parts.size() != 8) throw InputError("psi needs 8 reals (re,im for a, b, c, d)");
    for (std::size_t k = 0; k < 4; ++k)
      cfg.psi[k] = {parse_real(parts[2 * k], "psi"), parse_real(parts[2 * k + 1], "psi")};
  } else if (key == "m_over_p") {
    cfg.m_over_p = parse_real(value, key);
  } else if (key == "e_over_p") {
    cfg.e_over_p = parse_real(value, key);
  } else if (key == "gamma_over_p") {
    cfg.gamma_over_p = parse_real(value, key);
  } else if (key == "kappa") {
    cfg.kappa = parse_real(value, key);
  } else if (key == "mu") {
    cfg.mu = parse_real(value, key);
  } else if (key == "theta") {
    cfg.theta = parse_real(value, key);
  } else if (key == "t_max") {
    cfg.t_max = parse_real(value, key);
  } else if (key == "steps") {
    const long n = parse_integer(value, key);
    if (n < 2) throw InputError("steps must be >= 2");
    cfg.steps = static_cast<std::size_t>(n);
  } else if (key == "observables") {
    cfg.observables.clear();
    for (const auto& item : split_list(value)) cfg.observables.push_back(parse_observable(item));
  } else if (key == "discord_side") {
    const long side = parse_integer(value, key);
    if (side != 1 && side != 2) throw InputError("discord_side must be 1 or 2");
    cfg.discord_side = static_cast<int>(side);
  } else if (key == "picture_sign") {
    cfg.picture_sign = parse_picture_sign(trim(value));
  } else if (key == "precision") {
    cfg.precision = parse_precision(trim(value));
  } else {
    throw InputError("unknown config key '" + std::string(key) + "'");
  }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  for (const auto& [key, value] : parse_key_values(text)) apply_setting(base, key, value);
  return base;
}

ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string to_text(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "state = " << cfg.state << "\n";
  if (cfg.state == "custom") {
    os << "psi = ";
    for (std::size_t k = 0; k < 4; ++k)
      os << (k ? "," : "") << format_real(cfg.psi[k].real()) << "," << format_real(cfg.psi[k].imag());
    os << "\n";
  }
  os << "m_over_p = " << format_real(cfg.m_over_p) << "\n";
  os << "e_over_p = " << format_real(cfg.e_over_p) << "\n";
  os << "gamma_over_p = " << format_real(cfg.gamma_over_p) << "\n";
  os << "kappa = " << format_real(cfg.kappa) << "\n";
  os << "mu = " << format_real(cfg.mu) << "\n";
  os << "theta = " << format_real(cfg.theta) << "\n";
  os << "t_max = " << format_real(cfg.t_max) << "\n";
  os << "steps = " << cfg.steps << "\n";
  os << "observables = ";
  for (std::size_t i = 0; i < cfg.observables.size(); ++i) os << (i ? "," : "") << to_string(cfg.observables[i]);
  os << "\n";
  os << "discord_side = " << cfg.discord_side << "\n";
  os << "picture_sign = " << to_string(cfg.picture_sign) << "\n";
  os << "precision = " << to_string(cfg.precision) << "\n";
  return os.str();
}

}  // namespace trapdirac
