#include "geoflow/algebra.hpp"

#include <utility>

#include "geoflow/errors.hpp"

namespace geoflow {
namespace {

void check_same_spec(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatchError("algebra: operands live on different grids");
}

}  // namespace

AlgebraVector::AlgebraVector(VectorField field_part, FourierScalar function_part)
    : v1(std::move(field_part)), v2(std::move(function_part)) {
  check_same_spec(v1.spec(), v2.spec());
}

AlgebraVector AlgebraVector::zero(const GridSpec& spec) {
  return AlgebraVector(VectorField::zero(spec), FourierScalar::zero(spec));
}

AlgebraVector operator+(const AlgebraVector& lhs, const AlgebraVector& rhs) {
  return AlgebraVector(lhs.v1 + rhs.v1, lhs.v2 + rhs.v2);
}

AlgebraVector operator-(const AlgebraVector& lhs, const AlgebraVector& rhs) {
  return AlgebraVector(lhs.v1 - rhs.v1, lhs.v2 - rhs.v2);
}

AlgebraVector operator*(double s, const AlgebraVector& u) {
  return AlgebraVector(s * u.v1, s * u.v2);
}

AlgebraVector commutator(const AlgebraVector& u, const AlgebraVector& v) {
  check_same_spec(u.spec(), v.spec());
  return AlgebraVector(lie_bracket(u.v1, v.v1),
                       dot(u.v1, gradient(v.v2)) - dot(v.v1, gradient(u.v2)));
}

double pairing(const AlgebraVector& u, const AlgebraVector& v) {
  check_same_spec(u.spec(), v.spec());
  return 0.25 * (l2_inner(divergence(u.v1), divergence(v.v1)) + l2_inner(u.v2, v.v2));
}

AlgebraVector ad(const AlgebraVector& w, const AlgebraVector& u) {
  return -1.0 * commutator(w, u);
}

double descent_residual(const AlgebraVector& u, const AlgebraVector& v,
                        const AlgebraVector& w) {
  return pairing(ad(w, u), v) + pairing(u, ad(w, v));
}

BRep b_diag(const AlgebraVector& u) {
  const FourierScalar div_u = divergence(u.v1);
  const FourierScalar interior = contract(a_operator(u.v1), u.v1) -
                                 0.5 * product(div_u, div_u) + 0.5 * product(u.v2, u.v2);
  return BRep{remove_mean(interior), -divergence(multiply(u.v2, u.v1))};
}

BRep b_sym(const AlgebraVector& u, const AlgebraVector& v) {
  check_same_spec(u.spec(), v.spec());
  const FourierScalar cross = contract(a_operator(u.v1), v.v1) + contract(a_operator(v.v1), u.v1);
  const FourierScalar interior =
      0.5 * (cross - product(divergence(v.v1), divergence(u.v1)) + product(u.v2, v.v2));
  const VectorField transported = multiply(u.v2, v.v1) + multiply(v.v2, u.v1);
  return BRep{remove_mean(interior), -0.5 * divergence(transported)};
}

double pairing(const BRep& b, const AlgebraVector& w) {
  check_same_spec(b.div_b1.spec(), w.spec());
  return 0.25 * (l2_inner(b.div_b1, divergence(w.v1)) + l2_inner(b.b2, w.v2));
}

}  // namespace geoflow
