#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tvclust {

inline constexpr double kPi = 3.14159265358979323846;

// Trapezoidal quadrature of (grid, values); grid must be strictly increasing.
double trapezoid(const std::vector<double>& grid, const std::vector<double>& values);

// Linear interpolation of (grid, values) at x.  Returns 0 outside [grid.front(),
// grid.back()]; callers that must not extrapolate check the range themselves.
double interp_linear(const std::vector<double>& grid, const std::vector<double>& values,
                     double x);

// Replaces entries below rel_floor * max(values) by that floor, so that
// logarithms of near-zero ordinates stay finite.  No-op when max <= 0.
std::vector<double> floor_relative(std::vector<double> values, double rel_floor = 1e-12);

// Runs fn(i) for i in [0, n).  Iterations must be independent; each writes only
// its own output slot, so the result is identical to the sequential loop
// regardless of the number of worker threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tvclust
