#pragma once

// Derivative-free minimizers for the small oracle problems.

#include <functional>
#include <vector>

namespace slocc {

struct LineMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi].
LineMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, int iterations = 60);

struct NelderMeadOptions {
  double initial_step = 0.1;
  double tolerance = 1e-12;
  int max_evaluations = 20000;
  int restarts = 2;
};

struct Minimum {
  std::vector<double> x;
  double value = 0.0;
};

Minimum nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                    const NelderMeadOptions& options = {});

}  // namespace slocc
