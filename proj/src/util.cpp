#include "tvclust/util.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tvclust {

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
  if (grid.size() != values.size()) {
    throw std::invalid_argument("trapezoid: grid/value size mismatch");
  }
  if (grid.size() < 2) {
    throw std::invalid_argument("trapezoid: need at least two points");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    acc += 0.5 * (values[i] + values[i + 1]) * (grid[i + 1] - grid[i]);
  }
  return acc;
}

double interp_linear(const std::vector<double>& grid, const std::vector<double>& values,
                     double x) {
  if (grid.empty()) return 0.0;
  if (x < grid.front() || x > grid.back()) return 0.0;
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  if (hi == 0) return values.front();
  std::size_t lo = hi - 1;
  const double w = (x - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

std::vector<double> floor_relative(std::vector<double> values, double rel_floor) {
  const double vmax = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  if (vmax <= 0.0) return values;
  const double floor = rel_floor * vmax;
  for (double& v : values) v = std::max(v, floor);
  return values;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tvclust
