#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trapdirac {

// One observable sampled on a time grid (times in units of 1/p).
struct TimeSeries {
  std::string label;
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const { return times.size(); }
  // Throws InputError unless lengths agree and times strictly increase.
  void validate() const;
};

// `steps` points from 0 to t_max inclusive. Throws InputError for steps < 2
// or t_max <= 0.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

}  // namespace trapdirac
