#pragma once

#include <cstddef>
#include <vector>

namespace tvclust {

// A uniformly sampled real-valued series.  dt is the sampling interval in
// seconds (1.0 for unit-rate "statistical" series).  Validated at
// construction: at least two samples, dt > 0, all samples finite.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::vector<double> samples, double dt);

  const std::vector<double>& x() const { return x_; }
  double dt() const { return dt_; }
  std::size_t size() const { return x_.size(); }
  double duration() const { return dt_ * static_cast<double>(x_.size()); }

 private:
  std::vector<double> x_;
  double dt_ = 1.0;
};

}  // namespace tvclust
