#pragma once

#include "geoflow/exterior.hpp"

namespace geoflow {

// Element u = (u1, u2) of the semidirect-product algebra Vect(M) x C^inf(M):
// a vector field paired with a function, both on the same grid.
struct AlgebraVector {
  VectorField v1;
  FourierScalar v2;

  AlgebraVector(VectorField field_part, FourierScalar function_part);
  static AlgebraVector zero(const GridSpec& spec);
  const GridSpec& spec() const noexcept { return v1.spec(); }
};

AlgebraVector operator+(const AlgebraVector& lhs, const AlgebraVector& rhs);
AlgebraVector operator-(const AlgebraVector& lhs, const AlgebraVector& rhs);
AlgebraVector operator*(double s, const AlgebraVector& u);

// [u,v] = ([u1,v1], <u1, grad v2> - <v1, grad u2>).  Antisymmetric bitwise.
AlgebraVector commutator(const AlgebraVector& u, const AlgebraVector& v);

// The (degenerate) metric: 1/4 int [div(u1) div(v1) + u2 v2] dmu.  Vanishes
// whenever u1 is divergence-free and u2 = 0, which is exactly the vertical
// subspace quotiented away.
double pairing(const AlgebraVector& u, const AlgebraVector& v);

// ad_w u = -[w, u].
AlgebraVector ad(const AlgebraVector& w, const AlgebraVector& u);

// <<ad_w u, v>> + <<u, ad_w v>>; zero for every volume-preserving direction
// w (div w1 = 0, w2 = 0) and generically nonzero otherwise.
double descent_residual(const AlgebraVector& u, const AlgebraVector& v, const AlgebraVector& w);

// B(u,v) modulo divergence-free fields: only div B1 and B2 are well defined
// (the metric cannot see more), so B is exposed at divergence level.
struct BRep {
  FourierScalar div_b1;  // zero mean by construction
  FourierScalar b2;
};

// B(u,u): div_b1 = <A u1, u1> - (div u1)^2/2 + u2^2/2 minus its mean,
// b2 = -div(u2 u1).
BRep b_diag(const AlgebraVector& u);

// Symmetrization (B(u,v) + B(v,u))/2 at divergence level:
// div_b1 = [<A u1, v1> + <A v1, u1> - div v1 div u1 + u2 v2]/2 minus mean,
// b2 = -div(u2 v1 + v2 u1)/2.  Symmetric bitwise; b_sym(u,u) = b_diag(u).
BRep b_sym(const AlgebraVector& u, const AlgebraVector& v);

// 1/4 int [div_b1 div(w1) + b2 w2] dmu: the metric pairing of a
// divergence-level B value against an algebra direction.
double pairing(const BRep& b, const AlgebraVector& w);

}  // namespace geoflow
