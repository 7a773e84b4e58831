#include <algorithm>
#include <cmath>

#include "trapdirac/correlations.hpp"
#include "trapdirac/error.hpp"

namespace trapdirac {

namespace {

double grid_spacing(const TimeSeries& s) {
  const double h = (s.times.back() - s.times.front()) / static_cast<double>(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::abs((s.times[i] - s.times[i - 1]) - h) > 1e-6 * h)
      throw InputError("cusp detection needs a uniform time grid");
  return h;
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

CuspReport detect_cusps(const TimeSeries& series, const CuspOptions& opts) {
  series.validate();
  const std::size_t n = series.size();
  if (n < 16) throw InputError("cusp detection needs at least 16 points");
  if (opts.window == 0) throw InputError("cusp window must be positive");
  const double h = grid_spacing(series);
  const auto& t = series.times;
  const auto& y = series.values;

  double ymax = 0;
  for (double v : y) ymax = std::max(ymax, std::abs(v));

  std::vector<double> d2(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) d2[i] = std::abs(y[i + 1] - 2 * y[i] + y[i - 1]);

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = opts.window + 1; i + 1 < n; ++i) {
    const double med = median(std::vector<double>(d2.begin() + static_cast<std::ptrdiff_t>(i - opts.window),
                                                   d2.begin() + static_cast<std::ptrdiff_t>(i)));
    if (!(d2[i] > opts.rel_threshold * med && d2[i] > opts.noise_floor * ymax)) continue;
    if (!clusters.empty() && i - clusters.back().back() <= 2)
      clusters.back().push_back(i);
    else
      clusters.push_back({i});
  }

  CuspReport report;
  for (const auto& cluster : clusters) {
    const std::size_t a = cluster.front();
    const std::size_t b = cluster.back();
    if (a < 3 || b + 3 >= n) continue;
    const std::size_t peak = *std::max_element(cluster.begin(), cluster.end(),
                                               [&](std::size_t i, std::size_t j) { return d2[i] < d2[j]; });
    const double ts = t[peak];
    const double left = y[a - 2] + (y[a - 2] - y[a - 3]) * (ts - t[a - 2]) / h;
    const double right = y[b + 2] + (y[b + 3] - y[b + 2]) * (ts - t[b + 2]) / h;
    const double jump = std::abs(right - left);
    if (!(jump > opts.min_jump * ymax)) continue;
    report.times.push_back(ts);
    report.jump_sizes.push_back(jump);
    report.second_differences.push_back(d2[peak]);
  }
  return report;
}

CuspReport detect_cusps(const TimeSeries& series, double rel_threshold) {
  CuspOptions opts;
  opts.rel_threshold = rel_threshold;
  return detect_cusps(series, opts);
}

CuspReport confirm_cusps(const CuspReport& coarse, const CuspReport& fine, double coarse_spacing) {
  CuspReport out;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    bool persists = false;
    for (std::size_t j = 0; j < fine.size() && !persists; ++j)
      persists = std::abs(fine.times[j] - coarse.times[i]) <= 2 * coarse_spacing &&
                 fine.jump_sizes[j] >= 0.5 * coarse.jump_sizes[i];
    if (!persists) continue;
    out.times.push_back(coarse.times[i]);
    out.jump_sizes.push_back(coarse.jump_sizes[i]);
    out.second_differences.push_back(coarse.second_differences[i]);
  }
  return out;
}

CuspReport detect_stable_cusps(const TimeSeries& coarse, const TimeSeries& fine, const CuspOptions& opts) {
  const auto c = detect_cusps(coarse, opts);
  const auto f = detect_cusps(fine, opts);
  return confirm_cusps(c, f, grid_spacing(coarse));
}

}  // namespace trapdirac
