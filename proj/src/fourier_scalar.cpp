#include "geoflow/fourier_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "geoflow/errors.hpp"
#include "transform.hpp"

namespace geoflow {
namespace {

// FFT index of a wavenumber (negative wavenumbers wrap to the upper half).
int wrap(int k, int m) { return k >= 0 ? k : k + m; }

// Wavenumber of an FFT index, with the Nyquist index m/2 read as +m/2.
int wavenumber(int i, int m) { return i <= m / 2 ? i : i - m; }

void check_range(int k, int m) {
  if (k < -m / 2 || k > m / 2) {
    throw std::invalid_argument("FourierScalar: wavenumber " + std::to_string(k) +
                                " out of range for " + std::to_string(m) + " points");
  }
}

void check_same_spec(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatchError("FourierScalar: operands live on different grids");
}

// A wavevector equal to its own mirror mod M per axis (0 or the Nyquist
// column); such modes carry no conjugate partner.
bool self_paired(int k, int m) { return k == 0 || k == m / 2 || k == -m / 2; }

}  // namespace

FourierScalar::FourierScalar(const GridSpec& spec) : spec_(spec), coef_(spec.total_points()) {}

FourierScalar::FourierScalar(const GridSpec& spec, std::vector<std::complex<double>> coef)
    : spec_(spec), coef_(std::move(coef)) {
  if (coef_.size() != spec_.total_points()) {
    throw std::invalid_argument("FourierScalar: coefficient array has wrong length");
  }
  symmetrize();
}

void FourierScalar::symmetrize() {
  const int m = spec_.points_per_axis();
  if (spec_.dimension() == 1) {
    for (int i = 0; i < m; ++i) {
      const int j = (m - i) % m;
      if (j < i) continue;
      if (j == i) {
        coef_[i] = {coef_[i].real(), 0.0};
      } else {
        const std::complex<double> half = 0.5 * (coef_[i] + std::conj(coef_[j]));
        coef_[i] = half;
        coef_[j] = std::conj(half);
      }
    }
    return;
  }
  for (int i1 = 0; i1 < m; ++i1) {
    const int j1 = (m - i1) % m;
    for (int i2 = 0; i2 < m; ++i2) {
      const int j2 = (m - i2) % m;
      const std::size_t a = static_cast<std::size_t>(i1) * m + i2;
      const std::size_t b = static_cast<std::size_t>(j1) * m + j2;
      if (b < a) continue;
      if (b == a) {
        coef_[a] = {coef_[a].real(), 0.0};
      } else {
        const std::complex<double> half = 0.5 * (coef_[a] + std::conj(coef_[b]));
        coef_[a] = half;
        coef_[b] = std::conj(half);
      }
    }
  }
}

FourierScalar FourierScalar::from_grid(const GridSpec& spec, const std::vector<double>& values) {
  if (values.size() != spec.total_points()) {
    throw std::invalid_argument("FourierScalar: sample array has wrong length");
  }
  std::vector<std::complex<double>> buf(values.begin(), values.end());
  detail::fft(spec, buf.data(), -1);
  return FourierScalar(spec, std::move(buf));
}

std::complex<double> FourierScalar::coef(int k) const {
  if (spec_.dimension() != 1) throw std::invalid_argument("FourierScalar: 1-D accessor on 2-D field");
  const int m = spec_.points_per_axis();
  check_range(k, m);
  return coef_[wrap(k, m)];
}

std::complex<double> FourierScalar::coef(int k1, int k2) const {
  if (spec_.dimension() != 2) throw std::invalid_argument("FourierScalar: 2-D accessor on 1-D field");
  const int m = spec_.points_per_axis();
  check_range(k1, m);
  check_range(k2, m);
  return coef_[static_cast<std::size_t>(wrap(k1, m)) * m + wrap(k2, m)];
}

void FourierScalar::set_mode(int k, std::complex<double> value) {
  if (spec_.dimension() != 1) throw std::invalid_argument("FourierScalar: 1-D accessor on 2-D field");
  const int m = spec_.points_per_axis();
  check_range(k, m);
  if (self_paired(k, m)) {
    coef_[wrap(k, m)] = {value.real(), 0.0};
  } else {
    coef_[wrap(k, m)] = value;
    coef_[wrap(-k, m)] = std::conj(value);
  }
}

void FourierScalar::set_mode(int k1, int k2, std::complex<double> value) {
  if (spec_.dimension() != 2) throw std::invalid_argument("FourierScalar: 2-D accessor on 1-D field");
  const int m = spec_.points_per_axis();
  check_range(k1, m);
  check_range(k2, m);
  const std::size_t a = static_cast<std::size_t>(wrap(k1, m)) * m + wrap(k2, m);
  if (self_paired(k1, m) && self_paired(k2, m)) {
    coef_[a] = {value.real(), 0.0};
  } else {
    coef_[a] = value;
    coef_[static_cast<std::size_t>(wrap(-k1, m)) * m + wrap(-k2, m)] = std::conj(value);
  }
}

std::vector<double> FourierScalar::to_grid() const {
  std::vector<std::complex<double>> buf = coef_;
  detail::fft(spec_, buf.data(), +1);
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

FourierScalar& FourierScalar::operator+=(const FourierScalar& rhs) {
  check_same_spec(spec_, rhs.spec_);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += rhs.coef_[i];
  return *this;
}

FourierScalar& FourierScalar::operator-=(const FourierScalar& rhs) {
  check_same_spec(spec_, rhs.spec_);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
  return *this;
}

FourierScalar& FourierScalar::operator*=(double s) {
  for (auto& c : coef_) c *= s;
  return *this;
}

FourierScalar operator+(FourierScalar lhs, const FourierScalar& rhs) { return lhs += rhs; }
FourierScalar operator-(FourierScalar lhs, const FourierScalar& rhs) { return lhs -= rhs; }
FourierScalar operator*(double s, FourierScalar f) { return f *= s; }
FourierScalar operator-(FourierScalar f) { return f *= -1.0; }

FourierScalar transform_roundtrip(const FourierScalar& f) {
  return FourierScalar::from_grid(f.spec(), f.to_grid());
}

FourierScalar partial_derivative(const FourierScalar& f, int axis) {
  const GridSpec& spec = f.spec();
  if (axis < 0 || axis >= spec.dimension()) {
    throw std::invalid_argument("partial_derivative: axis " + std::to_string(axis) +
                                " out of range for dimension " + std::to_string(spec.dimension()));
  }
  const int m = spec.points_per_axis();
  std::vector<std::complex<double>> out(f.raw().size());
  if (spec.dimension() == 1) {
    for (int i = 0; i < m; ++i) {
      const int k = wavenumber(i, m);
      // The Nyquist mode has no conjugate partner; its derivative is not
      // representable as a real field, so it is dropped.  Dealiased fields
      // never populate it.
      if (std::abs(k) == m / 2) continue;
      const std::complex<double> c = f.raw()[i];
      out[i] = {-static_cast<double>(k) * c.imag(), static_cast<double>(k) * c.real()};
    }
  } else {
    for (int i1 = 0; i1 < m; ++i1) {
      for (int i2 = 0; i2 < m; ++i2) {
        const int k = wavenumber(axis == 0 ? i1 : i2, m);
        if (std::abs(k) == m / 2) continue;
        const std::size_t a = static_cast<std::size_t>(i1) * m + i2;
        const std::complex<double> c = f.raw()[a];
        out[a] = {-static_cast<double>(k) * c.imag(), static_cast<double>(k) * c.real()};
      }
    }
  }
  return FourierScalar(spec, std::move(out));
}

FourierScalar product(const FourierScalar& f, const FourierScalar& g) {
  check_same_spec(f.spec(), g.spec());
  const GridSpec& spec = f.spec();
  std::vector<double> a = f.to_grid();
  const std::vector<double> b = g.to_grid();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  FourierScalar h = FourierScalar::from_grid(spec, a);

  // 2/3-rule truncation.  For power-of-two M the cutoff is strictly below
  // M/3, so aliased images of in-band products fall outside the retained band
  // and this truncation is an exact projection of the true product.
  const int m = spec.points_per_axis();
  const int cut = spec.dealias_cutoff();
  std::vector<std::complex<double>> c = h.raw();
  if (spec.dimension() == 1) {
    for (int i = 0; i < m; ++i) {
      if (std::abs(wavenumber(i, m)) > cut) c[i] = 0.0;
    }
  } else {
    for (int i1 = 0; i1 < m; ++i1) {
      for (int i2 = 0; i2 < m; ++i2) {
        if (std::abs(wavenumber(i1, m)) > cut || std::abs(wavenumber(i2, m)) > cut) {
          c[static_cast<std::size_t>(i1) * m + i2] = 0.0;
        }
      }
    }
  }
  return FourierScalar(spec, std::move(c));
}

double mean(const FourierScalar& f) { return f.raw()[0].real(); }

double integral(const FourierScalar& f) { return f.spec().volume() * mean(f); }

FourierScalar remove_mean(const FourierScalar& f) {
  std::vector<std::complex<double>> c = f.raw();
  c[0] = 0.0;
  return FourierScalar(f.spec(), std::move(c));
}

double l2_inner(const FourierScalar& f, const FourierScalar& g) {
  check_same_spec(f.spec(), g.spec());
  double sum = 0.0;
  const auto& a = f.raw();
  const auto& b = g.raw();
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  }
  return f.spec().volume() * sum;
}

double l2_norm_sq(const FourierScalar& f) { return l2_inner(f, f); }

double sup_norm(const FourierScalar& f) {
  double best = 0.0;
  for (double v : f.to_grid()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_coef(const FourierScalar& f) {
  double best = 0.0;
  for (const auto& c : f.raw()) best = std::max(best, std::abs(c));
  return best;
}

FourierScalar invert_laplacian(const FourierScalar& f) {
  const GridSpec& spec = f.spec();
  const int m = spec.points_per_axis();
  std::vector<std::complex<double>> out(f.raw().size());
  if (spec.dimension() == 1) {
    for (int i = 1; i < m; ++i) {
      const double k = wavenumber(i, m);
      out[i] = f.raw()[i] / (-k * k);
    }
  } else {
    for (int i1 = 0; i1 < m; ++i1) {
      for (int i2 = 0; i2 < m; ++i2) {
        if (i1 == 0 && i2 == 0) continue;
        const double k1 = wavenumber(i1, m);
        const double k2 = wavenumber(i2, m);
        const std::size_t a = static_cast<std::size_t>(i1) * m + i2;
        out[a] = f.raw()[a] / (-(k1 * k1 + k2 * k2));
      }
    }
  }
  return FourierScalar(spec, std::move(out));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FourierScalar random_band_limited(const GridSpec& spec, std::uint64_t seed, int active_modes,
                                  double decay, bool include_constant) {
  if (active_modes < 1 || active_modes > spec.dealias_cutoff()) {
    throw std::invalid_argument("random_band_limited: active_modes must be in [1, " +
                                std::to_string(spec.dealias_cutoff()) + "], got " +
                                std::to_string(active_modes));
  }
  std::mt19937_64 rng(seed);
  auto normal = [&rng]() {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;  // (0,1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;          // [0,1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto draw = [&](double k_sq) {
    const double re = normal();
    const double im = normal();
    const double amp = inv_sqrt2 * std::pow(k_sq, -0.5 * decay);
    return std::complex<double>(re * amp, im * amp);
  };

  FourierScalar f(spec);
  if (include_constant) {
    const double c0 = normal();
    if (spec.dimension() == 1) {
      f.set_mode(0, {c0, 0.0});
    } else {
      f.set_mode(0, 0, {c0, 0.0});
    }
  }
  const int a = active_modes;
  if (spec.dimension() == 1) {
    for (int k = 1; k <= a; ++k) f.set_mode(k, draw(static_cast<double>(k) * k));
  } else {
    for (int k1 = 0; k1 <= a; ++k1) {
      for (int k2 = -a; k2 <= a; ++k2) {
        if (k1 == 0 && k2 <= 0) continue;
        f.set_mode(k1, k2, draw(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2));
      }
    }
  }
  return f;
}

FourierScalar constant_field(const GridSpec& spec, double value) {
  FourierScalar f(spec);
  if (spec.dimension() == 1) {
    f.set_mode(0, {value, 0.0});
  } else {
    f.set_mode(0, 0, {value, 0.0});
  }
  return f;
}

namespace {

void check_builder_wavevector(const GridSpec& spec, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != spec.dimension()) {
    throw std::invalid_argument("mode builder: wavevector length does not match dimension");
  }
  for (int ki : k) check_range(ki, spec.points_per_axis());
}

bool builder_self_paired(const GridSpec& spec, const std::vector<int>& k) {
  for (int ki : k) {
    if (!self_paired(ki, spec.points_per_axis())) return false;
  }
  return true;
}

}  // namespace

FourierScalar cosine_mode(const GridSpec& spec, const std::vector<int>& k, double amplitude) {
  check_builder_wavevector(spec, k);
  FourierScalar f(spec);
  // cos(k.x) = (exp(ik.x) + exp(-ik.x))/2; for self-paired k both terms land
  // on the same stored coefficient.
  const double c = builder_self_paired(spec, k) ? amplitude : 0.5 * amplitude;
  if (spec.dimension() == 1) {
    f.set_mode(k[0], {c, 0.0});
  } else {
    f.set_mode(k[0], k[1], {c, 0.0});
  }
  return f;
}

FourierScalar sine_mode(const GridSpec& spec, const std::vector<int>& k, double amplitude) {
  check_builder_wavevector(spec, k);
  FourierScalar f(spec);
  // sin(k.x) samples to zero when k is its own mirror (k = 0 or Nyquist).
  if (builder_self_paired(spec, k)) return f;
  if (spec.dimension() == 1) {
    f.set_mode(k[0], {0.0, -0.5 * amplitude});
  } else {
    f.set_mode(k[0], k[1], {0.0, -0.5 * amplitude});
  }
  return f;
}

}  // namespace geoflow
