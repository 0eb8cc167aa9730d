#include "geoflow/fd_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geoflow/errors.hpp"
#include "geoflow/grid.hpp"

namespace geoflow {
namespace {

void check_compatible(const FdField& a, const FdField& b) {
  if (a.dimension() != b.dimension() || a.points() != b.points()) {
    throw GridMismatchError("fd_oracle: operands live on different grids");
  }
}

int wrap(int i, int m) { return ((i % m) + m) % m; }

}  // namespace

FdField::FdField(int dimension, int points) : dimension_(dimension), points_(points) {
  if (dimension != 1 && dimension != 2) {
    throw std::invalid_argument("FdField: dimension must be 1 or 2");
  }
  if (points < 8) {
    throw std::invalid_argument("FdField: need at least 8 points per axis");
  }
  std::size_t total = static_cast<std::size_t>(points);
  if (dimension == 2) total *= static_cast<std::size_t>(points);
  values_.assign(total, 0.0);
}

double FdField::spacing() const { return kTwoPi / points_; }

double FdField::value(int i) const { return values_[static_cast<std::size_t>(wrap(i, points_))]; }

double FdField::value(int i, int j) const {
  return values_[static_cast<std::size_t>(wrap(i, points_)) * points_ + wrap(j, points_)];
}

double& FdField::value(int i) { return values_[static_cast<std::size_t>(wrap(i, points_))]; }

double& FdField::value(int i, int j) {
  return values_[static_cast<std::size_t>(wrap(i, points_)) * points_ + wrap(j, points_)];
}

FdField& FdField::operator+=(const FdField& other) {
  check_compatible(*this, other);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += other.values_[n];
  return *this;
}

FdField& FdField::operator-=(const FdField& other) {
  check_compatible(*this, other);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= other.values_[n];
  return *this;
}

FdField& FdField::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  return *this;
}

FdField operator+(FdField a, const FdField& b) { return a += b; }
FdField operator-(FdField a, const FdField& b) { return a -= b; }
FdField operator*(double scale, FdField a) { return a *= scale; }
FdField operator-(FdField a) { return a *= -1.0; }

FdField fd_product(const FdField& a, const FdField& b) {
  check_compatible(a, b);
  FdField out = a;
  for (std::size_t n = 0; n < out.values().size(); ++n) out.values()[n] *= b.values()[n];
  return out;
}

FdField fd_sample(const FourierScalar& f, int fd_points) {
  const int m = f.spec().points_per_axis();
  FdField out(f.spec().dimension(), fd_points);
  const double step = kTwoPi / fd_points;
  if (f.spec().dimension() == 1) {
    for (int k = -m / 2 + 1; k <= m / 2; ++k) {
      const std::complex<double> c = f.coef(k);
      if (c.real() == 0.0 && c.imag() == 0.0) continue;
      for (int i = 0; i < fd_points; ++i) {
        const double phase = k * (step * i);
        out.value(i) += c.real() * std::cos(phase) - c.imag() * std::sin(phase);
      }
    }
    return out;
  }
  for (int k1 = -m / 2 + 1; k1 <= m / 2; ++k1) {
    for (int k2 = -m / 2 + 1; k2 <= m / 2; ++k2) {
      const std::complex<double> c = f.coef(k1, k2);
      if (c.real() == 0.0 && c.imag() == 0.0) continue;
      for (int i = 0; i < fd_points; ++i) {
        for (int j = 0; j < fd_points; ++j) {
          const double phase = k1 * (step * i) + k2 * (step * j);
          out.value(i, j) += c.real() * std::cos(phase) - c.imag() * std::sin(phase);
        }
      }
    }
  }
  return out;
}

namespace {

// Applies a centred 5-point stencil along one axis of the (possibly 2-D)
// grid; the callback receives the -2..+2 neighbours in order.
template <typename Stencil>
FdField apply_stencil(const FdField& f, int axis, Stencil stencil) {
  if (axis < 0 || axis >= f.dimension()) {
    throw std::invalid_argument("fd_oracle: axis out of range");
  }
  const int m = f.points();
  FdField out(f.dimension(), m);
  if (f.dimension() == 1) {
    for (int i = 0; i < m; ++i) {
      out.value(i) = stencil(f.value(i - 2), f.value(i - 1), f.value(i), f.value(i + 1),
                             f.value(i + 2));
    }
    return out;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (axis == 0) {
        out.value(i, j) = stencil(f.value(i - 2, j), f.value(i - 1, j), f.value(i, j),
                                  f.value(i + 1, j), f.value(i + 2, j));
      } else {
        out.value(i, j) = stencil(f.value(i, j - 2), f.value(i, j - 1), f.value(i, j),
                                  f.value(i, j + 1), f.value(i, j + 2));
      }
    }
  }
  return out;
}

}  // namespace

FdField fd_derivative(const FdField& f, int axis) {
  const double scale = 1.0 / (12.0 * f.spacing());
  return apply_stencil(f, axis, [scale](double m2, double m1, double, double p1, double p2) {
    return (8.0 * (p1 - m1) - (p2 - m2)) * scale;
  });
}

FdField fd_second_derivative(const FdField& f, int axis) {
  const double scale = 1.0 / (12.0 * f.spacing() * f.spacing());
  return apply_stencil(f, axis, [scale](double m2, double m1, double c, double p1, double p2) {
    return (-p2 + 16.0 * p1 - 30.0 * c + 16.0 * m1 - m2) * scale;
  });
}

double fd_quadrature(const FdField& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  double volume = kTwoPi;
  if (f.dimension() == 2) volume *= kTwoPi;
  return sum * volume / static_cast<double>(f.values().size());
}

double fd_mean(const FdField& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum / static_cast<double>(f.values().size());
}

double fd_sup(const FdField& f) {
  double sup = 0.0;
  for (double v : f.values()) sup = std::max(sup, std::abs(v));
  return sup;
}

FdField fd_antiderivative(const FdField& f) {
  if (f.dimension() != 1) {
    throw std::invalid_argument("fd_antiderivative: 1-D fields only");
  }
  const int m = f.points();
  const double mean = fd_mean(f);
  FdField g = f;
  for (double& v : g.values()) v -= mean;

  // 4th-order Gregory rule for each interval, accumulated from x = 0; the
  // zero-mean input makes the running sum close up around the circle.
  FdField out(1, m);
  const double weight = f.spacing() / 24.0;
  double acc = 0.0;
  for (int j = 1; j < m; ++j) {
    acc += weight * (-g.value(j - 2) + 13.0 * g.value(j - 1) + 13.0 * g.value(j) - g.value(j + 1));
    out.value(j) = acc;
  }
  const double recentre = fd_mean(out);
  for (double& v : out.values()) v -= recentre;
  return out;
}

namespace {

using FdVec = std::vector<FdField>;

FdVec fd_gradient(const FdField& f) {
  FdVec out;
  for (int axis = 0; axis < f.dimension(); ++axis) out.push_back(fd_derivative(f, axis));
  return out;
}

FdField fd_divergence(const FdVec& v) {
  FdField out = fd_derivative(v[0], 0);
  for (std::size_t axis = 1; axis < v.size(); ++axis) {
    out += fd_derivative(v[axis], static_cast<int>(axis));
  }
  return out;
}

FdVec fd_a_operator(const FdVec& v) {
  const FdField div = fd_divergence(v);
  FdVec out = fd_gradient(div);
  for (FdField& comp : out) comp *= -1.0;
  return out;
}

FdField fd_contract(const FdVec& a, const FdVec& b) {
  FdField out = fd_product(a[0], b[0]);
  for (std::size_t axis = 1; axis < a.size(); ++axis) out += fd_product(a[axis], b[axis]);
  return out;
}

FdVec fd_scale_vec(const FdField& s, const FdVec& v) {
  FdVec out;
  for (const FdField& comp : v) out.push_back(fd_product(s, comp));
  return out;
}

FdVec fd_vec_add(FdVec a, const FdVec& b) {
  for (std::size_t axis = 0; axis < a.size(); ++axis) a[axis] += b[axis];
  return a;
}

FdVec fd_vec_sub(FdVec a, const FdVec& b) {
  for (std::size_t axis = 0; axis < a.size(); ++axis) a[axis] -= b[axis];
  return a;
}

FdVec fd_lie_bracket(const FdVec& u, const FdVec& v) {
  FdVec out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    FdField advect = fd_product(u[0], fd_derivative(v[i], 0));
    FdField back = fd_product(v[0], fd_derivative(u[i], 0));
    for (std::size_t j = 1; j < u.size(); ++j) {
      advect += fd_product(u[j], fd_derivative(v[i], static_cast<int>(j)));
      back += fd_product(v[j], fd_derivative(u[i], static_cast<int>(j)));
    }
    out.push_back(advect - back);
  }
  return out;
}

FdField fd_remove_mean(FdField f) {
  const double mean = fd_mean(f);
  for (double& v : f.values()) v -= mean;
  return f;
}

}  // namespace

double fd_curvature_numerator(const AlgebraVector& u, const AlgebraVector& v, int fd_points) {
  const int dim = u.spec().dimension();
  FdVec u1, v1;
  for (int axis = 0; axis < dim; ++axis) {
    u1.push_back(fd_sample(u.v1[axis], fd_points));
    v1.push_back(fd_sample(v.v1[axis], fd_points));
  }
  const FdField u2 = fd_sample(u.v2, fd_points);
  const FdField v2 = fd_sample(v.v2, fd_points);

  const FdField div_u = fd_divergence(u1);
  const FdField div_v = fd_divergence(v1);
  const FdVec au = fd_a_operator(u1);
  const FdVec av = fd_a_operator(v1);

  // delta term: the symmetric B of the pair.
  const FdField sym_div =
      fd_remove_mean(0.5 * (fd_contract(au, v1) + fd_contract(av, u1) -
                            fd_product(div_v, div_u) + fd_product(u2, v2)));
  const FdField sym_b2 = -0.5 * fd_divergence(fd_vec_add(fd_scale_vec(u2, v1), fd_scale_vec(v2, u1)));
  const double delta =
      0.25 * (fd_quadrature(fd_product(sym_div, sym_div)) + fd_quadrature(fd_product(sym_b2, sym_b2)));

  // beta term.
  const FdVec theta = fd_vec_sub(
      fd_vec_add(fd_vec_add(fd_gradient(fd_contract(au, v1)), fd_scale_vec(div_v, au)),
                 fd_scale_vec(u2, fd_gradient(v2))),
      fd_vec_add(fd_vec_add(fd_gradient(fd_contract(av, u1)), fd_scale_vec(div_u, av)),
                 fd_scale_vec(v2, fd_gradient(u2))));
  const FdVec bracket1 = fd_lie_bracket(u1, v1);
  const double first = fd_quadrature(fd_contract(theta, bracket1));
  const FdField q = fd_contract(u1, fd_gradient(v2)) - fd_contract(v1, fd_gradient(u2));
  const FdField transported_div =
      fd_divergence(fd_vec_sub(fd_scale_vec(u2, v1), fd_scale_vec(v2, u1)));
  const double beta = -0.125 * first - 0.125 * fd_quadrature(fd_product(q, transported_div));

  // bracket term: -3/4 of the pairing of the commutator with itself.
  const FdField div_bracket = fd_divergence(bracket1);
  const double bracket =
      -0.75 * 0.25 *
      (fd_quadrature(fd_product(div_bracket, div_bracket)) + fd_quadrature(fd_product(q, q)));

  // diagonal term.
  const FdField bu_div = fd_remove_mean(fd_contract(au, u1) - 0.5 * fd_product(div_u, div_u) +
                                        0.5 * fd_product(u2, u2));
  const FdField bu_b2 = -fd_divergence(fd_scale_vec(u2, u1));
  const FdField bv_div = fd_remove_mean(fd_contract(av, v1) - 0.5 * fd_product(div_v, div_v) +
                                        0.5 * fd_product(v2, v2));
  const FdField bv_b2 = -fd_divergence(fd_scale_vec(v2, v1));
  const double diag =
      -0.25 *
      (fd_quadrature(fd_product(bu_div, bv_div)) + fd_quadrature(fd_product(bu_b2, bv_b2)));

  return delta + beta + bracket + diag;
}

Hs2State::Hs2State(double time, FdField velocity, FdField density)
    : t(time), u(std::move(velocity)), rho(std::move(density)) {
  if (u.dimension() != 1 || rho.dimension() != 1) {
    throw std::invalid_argument("Hs2State: velocity formulation is 1-D only");
  }
  check_compatible(u, rho);
}

namespace {

struct Hs2Rate {
  FdField du;
  FdField drho;
};

Hs2Rate hs2_rate(const FdField& u, const FdField& rho) {
  const FdField ux = fd_derivative(u);
  const FdField flux = fd_product(u, fd_second_derivative(u)) + 0.5 * fd_product(ux, ux) -
                       0.5 * fd_product(rho, rho);
  // u_txx = -flux_x, so u_tx = -(flux - mean flux) and one more zero-mean
  // antiderivative recovers u_t.
  return Hs2Rate{-fd_antiderivative(flux), -fd_derivative(fd_product(rho, u))};
}

bool hs2_within(const FdField& f, double threshold) {
  for (double v : f.values()) {
    if (!std::isfinite(v) || std::abs(v) > threshold) return false;
  }
  return true;
}

}  // namespace

Hs2State hs2_literal_step(const Hs2State& state, double dt, double blowup_threshold) {
  const Hs2Rate k1 = hs2_rate(state.u, state.rho);
  const Hs2Rate k2 = hs2_rate(state.u + 0.5 * dt * k1.du, state.rho + 0.5 * dt * k1.drho);
  const Hs2Rate k3 = hs2_rate(state.u + 0.5 * dt * k2.du, state.rho + 0.5 * dt * k2.drho);
  const Hs2Rate k4 = hs2_rate(state.u + dt * k3.du, state.rho + dt * k3.drho);

  const double w = dt / 6.0;
  Hs2State next(state.t + dt,
                state.u + w * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
                state.rho + w * (k1.drho + 2.0 * k2.drho + 2.0 * k3.drho + k4.drho));
  if (!hs2_within(next.u, blowup_threshold) || !hs2_within(next.rho, blowup_threshold)) {
    throw BlowupError("hs2_literal_step: state left the finite range", next.t);
  }
  return next;
}

Hs2State hs2_integrate(Hs2State state, double dt, double t_end, double blowup_threshold) {
  if (!(dt > 0.0)) throw std::invalid_argument("hs2_integrate: dt must be positive");
  if (!(t_end >= dt)) throw std::invalid_argument("hs2_integrate: t_end must be at least dt");
  const double steps_real = t_end / dt;
  const long long steps = std::llround(steps_real);
  if (std::abs(steps_real - static_cast<double>(steps)) > 1e-9) {
    throw std::invalid_argument("hs2_integrate: t_end must be an integer multiple of dt");
  }
  const double t0 = state.t;
  for (long long i = 1; i <= steps; ++i) {
    state = hs2_literal_step(state, dt, blowup_threshold);
    state.t = t0 + static_cast<double>(i) * dt;
  }
  return state;
}

double hs2_energy(const Hs2State& state) {
  const FdField ux = fd_derivative(state.u);
  return 0.25 * (fd_quadrature(fd_product(ux, ux)) + fd_quadrature(fd_product(state.rho, state.rho)));
}

}  // namespace geoflow
