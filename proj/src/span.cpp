// Copyright 2026 The Sympar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sympar/span.hpp"

#include "sympar/error.hpp"

namespace sympar {

Eigen::Vector3d coords(const Sym2& s) {
  const Vec3 v = phi_inv(s);
  return {v.x, v.y, v.t};
}

Sym2 sym_from_coords(const Eigen::Vector3d& v) {
  return phi(v(0), v(1), v(2));
}

Eigen::Vector4d coords(const Mat2& m) {
  return {m.a[0], m.a[1], m.a[2], m.a[3]};
}

Mat2 mat_from_coords(const Eigen::Vector4d& v) {
  return {{v(0), v(1), v(2), v(3)}};
}

Subspace Subspace::from_generators(std::span<const Sym2> gens,
                                   const Tolerances& tol) {
  std::vector<Eigen::Vector3d> vs;
  vs.reserve(gens.size());
  for (const Sym2& g : gens) vs.push_back(coords(g));
  Span<3> span = Span<3>::from_vectors(vs, tol.rank);
  if (span.dim() == 0) {
    throw Error(ErrorCode::kZeroSubspace, "sigma generators span {0}");
  }
  return from_span(span);
}

Subspace Subspace::from_span(const Span<3>& span) {
  Subspace out;
  out.span_ = span;
  for (int k = 0; k < span.dim(); ++k) {
    out.gens_.push_back(sym_from_coords(span.column(k)));
  }
  return out;
}

double distance(const Subspace& a, const Subspace& b) {
  return projector_distance(a.span(), b.span());
}

Subspace dagger(const Mat2& h, const Subspace& sigma, const Tolerances& tol) {
  std::vector<Eigen::Vector3d> vs;
  for (const Sym2& s : sigma.generators()) vs.push_back(coords(dagger(h, s, tol)));
  return Subspace::from_span(Span<3>::from_independent(vs));
}

Subspace ortho_complement(const Subspace& sigma) {
  if (sigma.dim() != 1 && sigma.dim() != 2) {
    throw Error(ErrorCode::kBadDimension,
                "orthogonal complement needs a line or a plane");
  }
  return Subspace::from_span(sigma.span().complement());
}

Subalgebra Subalgebra::from_span(const Span<4>& span) {
  Subalgebra out;
  out.span_ = span;
  for (int k = 0; k < span.dim(); ++k) {
    out.gens_.push_back(mat_from_coords(span.column(k)));
  }
  return out;
}

double distance(const Subalgebra& a, const Subalgebra& b) {
  return projector_distance(a.span(), b.span());
}

Span<4> mat_span(std::span<const Mat2> gens, const Tolerances& tol) {
  std::vector<Eigen::Vector4d> vs;
  vs.reserve(gens.size());
  for (const Mat2& g : gens) vs.push_back(coords(g));
  return Span<4>::from_vectors(vs, tol.rank);
}

Subalgebra conjugate(const Mat2& g, const Subalgebra& h) {
  const Mat2 ginv = g.inverse();
  std::vector<Eigen::Vector4d> vs;
  for (const Mat2& a : h.generators()) vs.push_back(coords(g * a * ginv));
  return Subalgebra::from_span(Span<4>::from_independent(vs));
}

Subalgebra transpose(const Subalgebra& h) {
  std::vector<Eigen::Vector4d> vs;
  for (const Mat2& a : h.generators()) vs.push_back(coords(a.transpose()));
  return Subalgebra::from_span(Span<4>::from_independent(vs));
}

}  // namespace sympar
