#include "geoflow/exterior.hpp"

#include <stdexcept>
#include <utility>

#include "geoflow/errors.hpp"

namespace geoflow {
namespace {

void check_components(const std::vector<FourierScalar>& comps, const char* what) {
  if (comps.empty()) throw std::invalid_argument(std::string(what) + ": no components");
  const GridSpec& spec = comps[0].spec();
  if (static_cast<int>(comps.size()) != spec.dimension()) {
    throw std::invalid_argument(std::string(what) + ": component count does not match dimension");
  }
  for (const auto& c : comps) {
    if (!(c.spec() == spec)) {
      throw GridMismatchError(std::string(what) + ": components live on different grids");
    }
  }
}

void check_same_spec(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatchError("exterior: operands live on different grids");
}

void check_two_d(const GridSpec& spec, const char* what) {
  if (spec.dimension() != 2) {
    throw std::invalid_argument(std::string(what) + ": defined on T^2 only");
  }
}

std::vector<FourierScalar> zero_components(const GridSpec& spec) {
  return std::vector<FourierScalar>(spec.dimension(), FourierScalar::zero(spec));
}

}  // namespace

VectorField::VectorField(std::vector<FourierScalar> components)
    : components_(std::move(components)) {
  check_components(components_, "VectorField");
}

VectorField VectorField::zero(const GridSpec& spec) { return VectorField(zero_components(spec)); }

VectorField& VectorField::operator+=(const VectorField& rhs) {
  check_same_spec(spec(), rhs.spec());
  for (int i = 0; i < dimension(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
  check_same_spec(spec(), rhs.spec());
  for (int i = 0; i < dimension(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (auto& c : components_) c *= s;
  return *this;
}

OneForm::OneForm(std::vector<FourierScalar> components) : components_(std::move(components)) {
  check_components(components_, "OneForm");
}

OneForm OneForm::zero(const GridSpec& spec) { return OneForm(zero_components(spec)); }

OneForm& OneForm::operator+=(const OneForm& rhs) {
  check_same_spec(spec(), rhs.spec());
  for (int i = 0; i < dimension(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& rhs) {
  check_same_spec(spec(), rhs.spec());
  for (int i = 0; i < dimension(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

OneForm& OneForm::operator*=(double s) {
  for (auto& c : components_) c *= s;
  return *this;
}

TwoForm::TwoForm(FourierScalar density) : density_(std::move(density)) {
  check_two_d(density_.spec(), "TwoForm");
}

VectorField operator+(VectorField lhs, const VectorField& rhs) { return lhs += rhs; }
VectorField operator-(VectorField lhs, const VectorField& rhs) { return lhs -= rhs; }
VectorField operator*(double s, VectorField v) { return v *= s; }
VectorField operator-(VectorField v) { return v *= -1.0; }
OneForm operator+(OneForm lhs, const OneForm& rhs) { return lhs += rhs; }
OneForm operator-(OneForm lhs, const OneForm& rhs) { return lhs -= rhs; }
OneForm operator*(double s, OneForm a) { return a *= s; }
OneForm operator-(OneForm a) { return a *= -1.0; }

OneForm flat(const VectorField& v) {
  std::vector<FourierScalar> comps;
  comps.reserve(v.dimension());
  for (int i = 0; i < v.dimension(); ++i) comps.push_back(v[i]);
  return OneForm(std::move(comps));
}

VectorField sharp(const OneForm& a) {
  std::vector<FourierScalar> comps;
  comps.reserve(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) comps.push_back(a[i]);
  return VectorField(std::move(comps));
}

VectorField gradient(const FourierScalar& f) {
  std::vector<FourierScalar> comps;
  for (int i = 0; i < f.spec().dimension(); ++i) comps.push_back(partial_derivative(f, i));
  return VectorField(std::move(comps));
}

FourierScalar divergence(const VectorField& v) {
  FourierScalar out = partial_derivative(v[0], 0);
  for (int i = 1; i < v.dimension(); ++i) out += partial_derivative(v[i], i);
  return out;
}

OneForm d0(const FourierScalar& f) {
  std::vector<FourierScalar> comps;
  for (int i = 0; i < f.spec().dimension(); ++i) comps.push_back(partial_derivative(f, i));
  return OneForm(std::move(comps));
}

TwoForm d1(const OneForm& a) {
  check_two_d(a.spec(), "d1");
  return TwoForm(partial_derivative(a[1], 0) - partial_derivative(a[0], 1));
}

FourierScalar delta1(const OneForm& a) { return -divergence(sharp(a)); }

OneForm delta2(const TwoForm& w) {
  std::vector<FourierScalar> comps;
  comps.push_back(partial_derivative(w.density(), 1));
  comps.push_back(-partial_derivative(w.density(), 0));
  return OneForm(std::move(comps));
}

TwoForm wedge11(const OneForm& a, const OneForm& b) {
  check_two_d(a.spec(), "wedge11");
  check_same_spec(a.spec(), b.spec());
  return TwoForm(product(a[0], b[1]) - product(a[1], b[0]));
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
  check_same_spec(u.spec(), v.spec());
  std::vector<FourierScalar> comps;
  for (int i = 0; i < u.dimension(); ++i) {
    FourierScalar advect = product(u[0], partial_derivative(v[i], 0));
    for (int j = 1; j < u.dimension(); ++j) advect += product(u[j], partial_derivative(v[i], j));
    FourierScalar back = product(v[0], partial_derivative(u[i], 0));
    for (int j = 1; j < u.dimension(); ++j) back += product(v[j], partial_derivative(u[i], j));
    comps.push_back(advect - back);
  }
  return VectorField(std::move(comps));
}

FourierScalar contract(const OneForm& a, const VectorField& x) {
  check_same_spec(a.spec(), x.spec());
  FourierScalar out = product(a[0], x[0]);
  for (int i = 1; i < a.dimension(); ++i) out += product(a[i], x[i]);
  return out;
}

FourierScalar dot(const VectorField& x, const VectorField& y) {
  check_same_spec(x.spec(), y.spec());
  FourierScalar out = product(x[0], y[0]);
  for (int i = 1; i < x.dimension(); ++i) out += product(x[i], y[i]);
  return out;
}

OneForm multiply(const FourierScalar& f, const OneForm& a) {
  std::vector<FourierScalar> comps;
  for (int i = 0; i < a.dimension(); ++i) comps.push_back(product(f, a[i]));
  return OneForm(std::move(comps));
}

VectorField multiply(const FourierScalar& f, const VectorField& v) {
  std::vector<FourierScalar> comps;
  for (int i = 0; i < v.dimension(); ++i) comps.push_back(product(f, v[i]));
  return VectorField(std::move(comps));
}

double l2_inner(const OneForm& a, const OneForm& b) {
  check_same_spec(a.spec(), b.spec());
  double sum = 0.0;
  for (int i = 0; i < a.dimension(); ++i) sum += l2_inner(a[i], b[i]);
  return sum;
}

double l2_inner(const VectorField& x, const VectorField& y) {
  check_same_spec(x.spec(), y.spec());
  double sum = 0.0;
  for (int i = 0; i < x.dimension(); ++i) sum += l2_inner(x[i], y[i]);
  return sum;
}

double l2_inner(const TwoForm& a, const TwoForm& b) {
  return l2_inner(a.density(), b.density());
}

OneForm a_operator(const VectorField& v) { return -d0(divergence(v)); }

VectorField a_inverse_exact(const FourierScalar& f) {
  // grad g with Lap g = -(f - mean f); invert_laplacian solves Lap g = f - mean f.
  return gradient(-invert_laplacian(f));
}

HodgeParts hodge_split(const OneForm& a) {
  const FourierScalar potential = invert_laplacian(divergence(sharp(a)));
  OneForm harmonic = OneForm::zero(a.spec());
  for (int i = 0; i < a.dimension(); ++i) {
    harmonic[i] = constant_field(a.spec(), mean(a[i]));
  }
  const OneForm coexact = a - d0(potential) - harmonic;
  return HodgeParts{potential, coexact, harmonic};
}

}  // namespace geoflow
