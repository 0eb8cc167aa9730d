#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "geoflow/grid.hpp"

namespace geoflow {

// Real scalar field on T^1 or T^2 represented by its full complex Fourier
// coefficient array:
//
//   f(x) = sum_k c(k) exp(i k.x),   c(-k) = conj(c(k)),
//
// so c(0) is the mean of f.  Coefficients are stored in FFT index order (2-D:
// row-major, axis 0 slowest) for all integer wavevectors with |k_i| <= M/2.
// Every constructor enforces Hermitian symmetry exactly (paired entries are
// bitwise conjugate, self-paired entries have zero imaginary part) and every
// operation preserves it, so to_grid() may discard imaginary parts safely.
//
// Products are evaluated pointwise on the grid and then truncated to the 2/3
// band |k_i| <= floor(M/3).  Because M is a power of two the aliased images of
// a product of two dealiased fields land strictly outside that band, making
// the truncation an exact spectral projection of the true product.
class FourierScalar {
 public:
  // The zero field.
  explicit FourierScalar(const GridSpec& spec);

  // Takes ownership of a raw coefficient array (FFT index order) and
  // symmetrizes it: c(k) <- (c(k) + conj(c(-k)))/2.
  FourierScalar(const GridSpec& spec, std::vector<std::complex<double>> coef);

  static FourierScalar zero(const GridSpec& spec) { return FourierScalar(spec); }

  // Forward transform of real samples (FFT index order), scaled by 1/N and
  // symmetrized.
  static FourierScalar from_grid(const GridSpec& spec, const std::vector<double>& values);

  const GridSpec& spec() const noexcept { return spec_; }

  // Coefficient for a wavevector with |k_i| <= M/2; negative indices wrap.
  std::complex<double> coef(int k) const;
  std::complex<double> coef(int k1, int k2) const;

  // Sets c(k) and c(-k) = conj(value); self-paired wavevectors (0 and the
  // Nyquist column M/2 = -M/2) drop the imaginary part.
  void set_mode(int k, std::complex<double> value);
  void set_mode(int k1, int k2, std::complex<double> value);

  // Inverse transform; real samples in FFT index order.
  std::vector<double> to_grid() const;

  const std::vector<std::complex<double>>& raw() const noexcept { return coef_; }

  FourierScalar& operator+=(const FourierScalar& rhs);
  FourierScalar& operator-=(const FourierScalar& rhs);
  FourierScalar& operator*=(double s);

 private:
  void symmetrize();

  GridSpec spec_;
  std::vector<std::complex<double>> coef_;
};

FourierScalar operator+(FourierScalar lhs, const FourierScalar& rhs);
FourierScalar operator-(FourierScalar lhs, const FourierScalar& rhs);
FourierScalar operator*(double s, FourierScalar f);
FourierScalar operator-(FourierScalar f);

// to_grid followed by from_grid.  Identity up to roundoff on any field.
FourierScalar transform_roundtrip(const FourierScalar& f);

// Exact spectral derivative along axis (0 or 1): c(k) -> i k_axis c(k).  The
// unpaired Nyquist plane k_axis = M/2 is zeroed; dealiased fields never
// populate it.
FourierScalar partial_derivative(const FourierScalar& f, int axis);

// Dealiased pointwise product (see class comment).
FourierScalar product(const FourierScalar& f, const FourierScalar& g);

// c(0).  Its imaginary part is identically zero.
double mean(const FourierScalar& f);

// mu(M) * mean(f).
double integral(const FourierScalar& f);

// Subtracts the mean by zeroing c(0).
FourierScalar remove_mean(const FourierScalar& f);

// L^2 inner product by Parseval: mu(M) * sum_k Re[c_f(k) conj(c_g(k))].
// Evaluated directly on coefficients, never by grid quadrature.
double l2_inner(const FourierScalar& f, const FourierScalar& g);

double l2_norm_sq(const FourierScalar& f);

// max_j |f(x_j)| over the collocation grid.
double sup_norm(const FourierScalar& f);

// max_k |c(k)|.
double max_abs_coef(const FourierScalar& f);

// The unique zero-mean g with Lap g = f - mean(f):  c_g(k) = -c_f(k)/|k|^2 for
// k != 0 and c_g(0) = 0.
FourierScalar invert_laplacian(const FourierScalar& f);

// Deterministic band-limited Gaussian field.  The draw procedure is part of
// the contract (tests re-derive it independently):
//
//   rng  = std::mt19937_64(seed)
//   u1   = ((rng() >> 11) + 1) * 2^-53          in (0,1]
//   u2   = (rng() >> 11) * 2^-53                in [0,1)
//   normal() = sqrt(-2 ln u1) * cos(2 pi u2)    (one normal per pair of draws)
//
//   if include_constant: c(0) = normal()
//   for each wavevector k in the canonical half-lattice, in order
//     1-D: k = 1, 2, ..., A
//     2-D: k1 = 0..A and k2 = -A..A, row-major, keeping k1 > 0 or
//          (k1 == 0 and k2 > 0)
//   draw re = normal(), im = normal() and set
//     c(k)  = (re + i im) / sqrt(2) * |k|^-decay     (|k| Euclidean)
//     c(-k) = conj(c(k)).
//
// Every mode then has expected squared modulus |k|^-2 decay regardless of the
// traversal.  Requires 1 <= active_modes <= dealias cutoff.
FourierScalar random_band_limited(const GridSpec& spec, std::uint64_t seed, int active_modes,
                                  double decay, bool include_constant);

// SplitMix64 stream derivation: per-sample seeds for surveys and multi-field
// initial data are mix_seed(base, index), independent of thread schedule.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

// Builders for simple analytic fields.
FourierScalar constant_field(const GridSpec& spec, double value);
// amplitude * cos(k.x) and amplitude * sin(k.x); k has one entry per axis.
FourierScalar cosine_mode(const GridSpec& spec, const std::vector<int>& k, double amplitude = 1.0);
FourierScalar sine_mode(const GridSpec& spec, const std::vector<int>& k, double amplitude = 1.0);

}  // namespace geoflow
