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

#ifndef SYMPAR_SPAN_HPP_
#define SYMPAR_SPAN_HPP_

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sympar/geometry.hpp"
#include "sympar/matrix.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// A linear subspace of R^N held as an orthonormal basis (columns).
template <int N>
class Span {
 public:
  using Vector = Eigen::Matrix<double, N, 1>;
  using Basis = Eigen::Matrix<double, N, Eigen::Dynamic, 0, N, N>;
  using Projector = Eigen::Matrix<double, N, N>;

  Span() : basis_(N, 0) {}

  // Rank-revealing construction: keeps the left singular vectors whose
  // singular value exceeds rank_tol * max(1, largest singular value).
  static Span from_vectors(std::span<const Vector> vectors, double rank_tol) {
    Span out;
    if (vectors.empty()) return out;
    Eigen::Matrix<double, N, Eigen::Dynamic> m(N, vectors.size());
    for (size_t k = 0; k < vectors.size(); ++k) m.col(k) = vectors[k];
    Eigen::JacobiSVD<Eigen::Matrix<double, N, Eigen::Dynamic>> svd(
        m, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const double cut = rank_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    int rank = 0;
    while (rank < s.size() && s(rank) > cut) ++rank;
    out.basis_ = svd.matrixU().leftCols(rank);
    return out;
  }

  // Modified Gram-Schmidt for vectors already known to be independent.
  static Span from_independent(std::span<const Vector> vectors) {
    Span out;
    out.basis_.resize(N, vectors.size());
    for (size_t k = 0; k < vectors.size(); ++k) {
      Vector v = vectors[k];
      for (size_t j = 0; j < k; ++j) {
        v -= out.basis_.col(j).dot(v) * out.basis_.col(j);
      }
      out.basis_.col(k) = v / v.norm();
    }
    return out;
  }

  int dim() const { return static_cast<int>(basis_.cols()); }
  const Basis& basis() const { return basis_; }
  Vector column(int k) const { return basis_.col(k); }

  Projector projector() const { return basis_ * basis_.transpose(); }

  // Norm of the component of v outside the span.
  double residual(const Vector& v) const {
    return (v - basis_ * (basis_.transpose() * v)).norm();
  }

  // Orthonormal basis of the orthogonal complement.
  Span complement() const {
    Span out;
    Eigen::JacobiSVD<Projector> svd(Projector::Identity() - projector(),
                                    Eigen::ComputeFullU);
    out.basis_ = svd.matrixU().leftCols(N - dim());
    return out;
  }

 private:
  Basis basis_;
};

// Frobenius distance between orthogonal projectors; zero iff the spans agree.
template <int N>
double projector_distance(const Span<N>& a, const Span<N>& b) {
  return (a.projector() - b.projector()).norm();
}

// Coordinates: Sym2 -> R^3 through phi_inv (an isometry for the half-trace
// product), Mat2 -> R^4 row-major (entrywise product).
Eigen::Vector3d coords(const Sym2& s);
Sym2 sym_from_coords(const Eigen::Vector3d& v);
Eigen::Vector4d coords(const Mat2& m);
Mat2 mat_from_coords(const Eigen::Vector4d& v);

// A nonzero subspace of Sym(2,R) with an orthonormal generator list.
class Subspace {
 public:
  // Throws kZeroSubspace when the generators span nothing.
  static Subspace from_generators(std::span<const Sym2> gens,
                                  const Tolerances& tol = {});
  static Subspace from_span(const Span<3>& span);

  int dim() const { return span_.dim(); }
  const std::vector<Sym2>& generators() const { return gens_; }
  const Span<3>& span() const { return span_; }

  // Component of s outside the subspace, in the half-trace norm.
  double residual(const Sym2& s) const { return span_.residual(coords(s)); }

 private:
  Span<3> span_;
  std::vector<Sym2> gens_;
};

double distance(const Subspace& a, const Subspace& b);

// Image of the subspace under h^dagger.
Subspace dagger(const Mat2& h, const Subspace& sigma,
                const Tolerances& tol = {});

// Orthogonal complement for the half-trace product. Requires dim 1 or 2
// (kBadDimension otherwise).
Subspace ortho_complement(const Subspace& sigma);

// A Lie subalgebra of gl(2,R) with an orthonormal generator list. Closure is
// enforced by validate_subalgebra; from_span trusts its input.
class Subalgebra {
 public:
  static Subalgebra from_span(const Span<4>& span);

  int dim() const { return span_.dim(); }
  const std::vector<Mat2>& generators() const { return gens_; }
  const Span<4>& span() const { return span_; }
  double residual(const Mat2& m) const { return span_.residual(coords(m)); }

 private:
  Span<4> span_;
  std::vector<Mat2> gens_;
};

double distance(const Subalgebra& a, const Subalgebra& b);

Span<4> mat_span(std::span<const Mat2> gens, const Tolerances& tol = {});

// Ad(g) applied to every generator.
Subalgebra conjugate(const Mat2& g, const Subalgebra& h);
Subalgebra transpose(const Subalgebra& h);

}  // namespace sympar

#endif  // SYMPAR_SPAN_HPP_
