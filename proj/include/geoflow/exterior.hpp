#pragma once

#include <vector>

#include "geoflow/fourier_scalar.hpp"

namespace geoflow {

// Tangent vector field on the flat torus: one scalar component per axis, all
// on the same grid.
class VectorField {
 public:
  explicit VectorField(std::vector<FourierScalar> components);
  static VectorField zero(const GridSpec& spec);

  const GridSpec& spec() const noexcept { return components_[0].spec(); }
  int dimension() const noexcept { return static_cast<int>(components_.size()); }
  const FourierScalar& operator[](int i) const { return components_[i]; }
  FourierScalar& operator[](int i) { return components_[i]; }

  VectorField& operator+=(const VectorField& rhs);
  VectorField& operator-=(const VectorField& rhs);
  VectorField& operator*=(double s);

 private:
  std::vector<FourierScalar> components_;
};

// 1-form a_1 dx (+ a_2 dy in 2-D).  On the flat torus the musical isomorphisms
// are componentwise identities, but vector fields and forms are kept as
// distinct types so each operator has its natural signature.
class OneForm {
 public:
  explicit OneForm(std::vector<FourierScalar> components);
  static OneForm zero(const GridSpec& spec);

  const GridSpec& spec() const noexcept { return components_[0].spec(); }
  int dimension() const noexcept { return static_cast<int>(components_.size()); }
  const FourierScalar& operator[](int i) const { return components_[i]; }
  FourierScalar& operator[](int i) { return components_[i]; }

  OneForm& operator+=(const OneForm& rhs);
  OneForm& operator-=(const OneForm& rhs);
  OneForm& operator*=(double s);

 private:
  std::vector<FourierScalar> components_;
};

// Top form h dx ^ dy on T^2, identified with its density h.
class TwoForm {
 public:
  explicit TwoForm(FourierScalar density);
  const GridSpec& spec() const noexcept { return density_.spec(); }
  const FourierScalar& density() const noexcept { return density_; }

 private:
  FourierScalar density_;
};

VectorField operator+(VectorField lhs, const VectorField& rhs);
VectorField operator-(VectorField lhs, const VectorField& rhs);
VectorField operator*(double s, VectorField v);
VectorField operator-(VectorField v);
OneForm operator+(OneForm lhs, const OneForm& rhs);
OneForm operator-(OneForm lhs, const OneForm& rhs);
OneForm operator*(double s, OneForm a);
OneForm operator-(OneForm a);

// Musical isomorphisms (componentwise identity in the flat metric).
OneForm flat(const VectorField& v);
VectorField sharp(const OneForm& a);

// grad f = (df)^sharp.
VectorField gradient(const FourierScalar& f);
FourierScalar divergence(const VectorField& v);

// Exterior derivative on functions: df.
OneForm d0(const FourierScalar& f);

// Exterior derivative on 1-forms (T^2): d(a dx + b dy) = (dx b - dy a) dx^dy.
TwoForm d1(const OneForm& a);

// Codifferentials, adjoint to d in L^2: delta1(a) = -div(a^sharp) and
// delta2(h dx^dy) = (dy h) dx - (dx h) dy.
FourierScalar delta1(const OneForm& a);
OneForm delta2(const TwoForm& w);

// (a dx + b dy) ^ (c dx + e dy) = (a e - b c) dx^dy, products dealiased.
TwoForm wedge11(const OneForm& a, const OneForm& b);

// Lie bracket of vector fields: [u,v]_i = sum_j (u_j dj v_i - v_j dj u_i).
VectorField lie_bracket(const VectorField& u, const VectorField& v);

// Pointwise pairing <a, X> = sum_i a_i X_i and metric dot product,
// both dealiased.
FourierScalar contract(const OneForm& a, const VectorField& x);
FourierScalar dot(const VectorField& x, const VectorField& y);

// Scalar-function multiples.
OneForm multiply(const FourierScalar& f, const OneForm& a);
VectorField multiply(const FourierScalar& f, const VectorField& v);

// Componentwise L^2 inner products (Parseval).
double l2_inner(const OneForm& a, const OneForm& b);
double l2_inner(const VectorField& x, const VectorField& y);
double l2_inner(const TwoForm& a, const TwoForm& b);

// The inertia operator A v = -d(div v), a 1-form.
OneForm a_operator(const VectorField& v);

// w = A^{-1} d f for band-limited f: the gradient field w = grad g with
// Lap g = -(f - mean f), so that A w = d f and div w = -(f - mean f).
VectorField a_inverse_exact(const FourierScalar& f);

// Hodge decomposition a = d f + coexact + harmonic with f the zero-mean
// potential of div(a^sharp); the harmonic part is the constant-coefficient
// form, and in 1-D the coexact part vanishes identically.
struct HodgeParts {
  FourierScalar exact_potential;
  OneForm coexact;
  OneForm harmonic;
};
HodgeParts hodge_split(const OneForm& a);

}  // namespace geoflow
