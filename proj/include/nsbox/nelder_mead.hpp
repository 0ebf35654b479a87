#pragma once

// Minimal Nelder-Mead simplex minimizer for the handful of low-dimensional
// smooth problems in this project (dimension <= 11). Deterministic given the
// starting point; no randomness inside.

#include <functional>
#include <span>
#include <vector>

namespace nsbox {

struct NelderMeadOptions {
  int max_iterations = 4000;
  double initial_step = 0.25;
  double f_tolerance = 1e-13;   // stop when spread of simplex values is below
  double x_tolerance = 1e-11;   // ... and simplex diameter is below
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start,
                             const NelderMeadOptions& options = {});

}  // namespace nsbox
