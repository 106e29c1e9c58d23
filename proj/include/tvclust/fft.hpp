#pragma once

#include <complex>
#include <vector>

namespace tvclust::detail {

// In-place complex DFT of arbitrary length (FFTW backend, FFTW_ESTIMATE plans
// cached per size).  sign = -1 gives the forward transform sum x_t e^{-i2pikt/N},
// sign = +1 the unnormalized inverse.  Thread-safe.
void dft(std::vector<std::complex<double>>& data, int sign);

}  // namespace tvclust::detail
