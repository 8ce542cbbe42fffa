#pragma once

#include <complex>
#include <cstddef>

namespace dgbo::detail {

// Unnormalized real transforms backed by FFTW. Plans are cached per length and
// executed through the new-array interface, so calls are thread-safe.
// r2c: in[n] -> out[n/2+1], sign -1.  c2r: in[n/2+1] -> out[n], sign +1; in is not modified.
void r2c(std::size_t n, const double* in, std::complex<double>* out);
void c2r(std::size_t n, const std::complex<double>* in, double* out);

} // namespace dgbo::detail
