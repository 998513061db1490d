#include "slocc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slocc {

LineMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, int iterations) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? LineMinimum{c, fc} : LineMinimum{d, fd};
}

namespace {

Minimum nelder_mead_once(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& start, const NelderMeadOptions& opt, int& evals) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opt.initial_step;
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);
  evals += static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  while (evals < opt.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (std::abs(values[worst] - values[best]) <= opt.tolerance * (1.0 + std::abs(values[best]))) {
      double size = 0.0;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(simplex[i][k] - simplex[best][k]));
      if (size < 1e-10) break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return p;
    };

    const std::vector<double> reflected = along(-1.0);
    const double fr = f(reflected);
    ++evals;
    if (fr < values[best]) {
      const std::vector<double> expanded = along(-2.0);
      const double fe = f(expanded);
      ++evals;
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const std::vector<double> contracted = along(outside ? -0.5 : 0.5);
      const double fc = f(contracted);
      ++evals;
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          values[i] = f(simplex[i]);
          ++evals;
        }
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return {simplex[static_cast<std::size_t>(it - values.begin())], *it};
}

}  // namespace

Minimum nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                    const NelderMeadOptions& options) {
  int evals = 0;
  Minimum best = nelder_mead_once(f, start, options, evals);
  NelderMeadOptions opt = options;
  for (int r = 0; r < options.restarts && evals < options.max_evaluations; ++r) {
    opt.initial_step *= 0.5;
    Minimum next = nelder_mead_once(f, best.x, opt, evals);
    if (next.value < best.value) best = next;
  }
  return best;
}

}  // namespace slocc
