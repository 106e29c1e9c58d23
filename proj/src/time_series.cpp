#include "tvclust/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tvclust {

TimeSeries::TimeSeries(std::vector<double> samples, double dt)
    : x_(std::move(samples)), dt_(dt) {
  if (x_.size() < 2) {
    throw std::invalid_argument("TimeSeries: need at least two samples");
  }
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
    throw std::invalid_argument("TimeSeries: dt must be positive and finite");
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i])) {
      throw std::invalid_argument("TimeSeries: non-finite sample at index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace tvclust
