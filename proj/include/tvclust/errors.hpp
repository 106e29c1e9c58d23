#pragma once

#include <stdexcept>
#include <string>

namespace tvclust {

// Structurally malformed input: unparseable CSV/JSON, missing columns,
// non-uniform sampling, NaN samples.  Maps to CLI exit code 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that is numerically unusable: constant series, spectra
// with zero mass, records too short to window.  Maps to CLI exit code 3.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tvclust
