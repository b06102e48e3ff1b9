#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace haptex {

using cvec = std::vector<std::complex<double>>;

// Thin FFTW wrapper. Plans are cached per (size, direction) behind a mutex;
// execution itself is lock-free, so these calls are safe from any thread.
// Transforms are unnormalized: ifft(fft(x)) == n * x.
cvec fft(const cvec& in);
cvec ifft(const cvec& in);

cvec fft_real(const std::vector<double>& in);

// Real part of the inverse transform, divided by n (i.e. the actual inverse
// for Hermitian-symmetric input).
std::vector<double> ifft_real(const cvec& spectrum);

// Enforces spectrum[n-k] = conj(spectrum[k]) in place; bins 0 and n/2 are
// forced real. Call before ifft_real when the upper half was never filled.
void hermitian_complete(cvec& spectrum);

}  // namespace haptex
