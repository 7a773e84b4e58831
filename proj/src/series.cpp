#include "trapdirac/series.hpp"

#include "trapdirac/error.hpp"

namespace trapdirac {

void TimeSeries::validate() const {
  if (times.size() != values.size())
    throw InputError("series '" + label + "': times and values differ in length");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InputError("series '" + label + "': times must strictly increase");
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  if (steps < 2) throw InputError("a time grid needs at least 2 points");
  if (!(t_max > 0)) throw InputError("t_max must be > 0");
  std::vector<double> out(steps);
  const double n = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) out[i] = t_max * static_cast<double>(i) / n;
  return out;
}

}  // namespace trapdirac
