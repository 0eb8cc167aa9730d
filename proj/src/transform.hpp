#pragma once

#include <complex>

#include "geoflow/grid.hpp"

namespace geoflow::detail {

// In-place complex FFT over a buffer in FFT index order (2-D row-major,
// axis 0 slowest).  sign = -1 is the forward transform and includes the 1/N
// normalization, so forward of real samples yields coefficients with c(0) =
// mean; sign = +1 is the unscaled inverse.  Safe to call concurrently.
void fft(const GridSpec& spec, std::complex<double>* data, int sign);

}  // namespace geoflow::detail
