#pragma once

#include <array>
#include <vector>

#include "trapdirac/qmat.hpp"
#include "trapdirac/series.hpp"

namespace trapdirac {

// rho = 1/4 [I + a1.s(x)I + I(x)a2.s + sum t_ij s_i(x)s_j].
template <class Real>
struct BasicFano {
  std::array<Real, 3> a1{};
  std::array<Real, 3> a2{};
  std::array<std::array<Real, 3>, 3> T{};
};

using FanoComponents = BasicFano<double>;

template <class Real>
BasicFano<Real> fano(const BasicDensityMatrix<Real>& rho);

// The 4x4 matrix described by a set of Fano components.
template <class Real>
BasicMatrix4<Real> reconstruct(const BasicFano<Real>& f);

// ||rho^{T_q}||_1 - 1, clamped at zero.
template <class Real>
Real negativity(const BasicDensityMatrix<Real>& rho, Qubit subsystem = Qubit::first);

// 1/4 (|a_side|^2 + |T|^2 - k_max), k_max the largest eigenvalue of
// a a^T + T T^T (T^T T when side is 2).
template <class Real>
Real geometric_discord(const BasicDensityMatrix<Real>& rho, Qubit side = Qubit::first);

template <class Real>
Real purity(const BasicDensityMatrix<Real>& rho);

// Central differences inside, second-order one-sided differences at both
// ends. Throws InputError for fewer than 3 points or a non-uniform grid.
TimeSeries discord_derivative(const TimeSeries& series);

struct CuspOptions {
  // A point is a candidate when its |second difference| exceeds this multiple
  // of the median over the trailing window.
  double rel_threshold = 5.0;
  std::size_t window = 16;
  // Second differences below noise_floor * max|y| are never flagged.
  double noise_floor = 1e-12;
  // Jumps below min_jump * max|y| are discarded.
  double min_jump = 1e-3;
};

struct CuspReport {
  std::vector<double> times;
  std::vector<double> jump_sizes;
  // |second difference| at each reported point.
  std::vector<double> second_differences;

  bool empty() const { return times.empty(); }
  std::size_t size() const { return times.size(); }
};

// Candidate steps in a uniformly sampled series. Each cluster of flagged
// points yields one location (the largest second difference) and a jump
// estimated from linear extrapolations of the samples on either side.
// Throws InputError below 16 points or on a non-uniform grid.
CuspReport detect_cusps(const TimeSeries& series, const CuspOptions& opts);
CuspReport detect_cusps(const TimeSeries& series, double rel_threshold = 5.0);

// Keeps the coarse-grid cusps that reappear on the refined grid within two
// coarse spacings with at least half the jump. A smooth but sharp feature
// shrinks under refinement and is dropped; a genuine step does not.
CuspReport confirm_cusps(const CuspReport& coarse, const CuspReport& fine, double coarse_spacing);

CuspReport detect_stable_cusps(const TimeSeries& coarse, const TimeSeries& fine, const CuspOptions& opts = {});

}  // namespace trapdirac
