// Copyright 2026 The Curvesmith Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "curvesmith/error.hpp"
#include "curvesmith/image.hpp"

namespace curvesmith {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Mean and covariance of a feature distribution.
template <typename Scalar>
struct GaussianStats {
  DenseVector<Scalar> mean;
  DenseMatrix<Scalar> cov;

  Eigen::Index dim() const noexcept { return mean.size(); }
};

/// Column means and unbiased (N - 1) covariance of the rows of `samples`,
/// symmetrized as (S + S^T) / 2. Throws InsufficientSamples for N < 2.
template <typename Derived>
GaussianStats<typename Derived::Scalar> fit_gaussian(
    const Eigen::MatrixBase<Derived>& samples) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = samples.rows();
  if (n < 2) {
    throw InsufficientSamples("covariance needs at least 2 samples, got " +
                              std::to_string(n));
  }
  GaussianStats<Scalar> stats;
  stats.mean = samples.colwise().mean().transpose();
  const DenseMatrix<Scalar> centered =
      samples.rowwise() - stats.mean.transpose();
  const DenseMatrix<Scalar> s =
      (centered.adjoint() * centered) / static_cast<Scalar>(n - 1);
  stats.cov = (s + s.transpose()) / Scalar(2);
  return stats;
}

/// Principal square root of a symmetric PSD matrix via eigendecomposition;
/// negative eigenvalues are clipped to 0. Throws InvalidInput if M is not
/// square or its asymmetry exceeds 1e-6.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> sqrtm_psd(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw InvalidInput("sqrtm_psd: matrix not square");
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-6)) {
    throw InvalidInput("sqrtm_psd: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> eig(m);
  const DenseVector<Scalar> root =
      eig.eigenvalues().cwiseMax(Scalar(0)).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal() *
         eig.eigenvectors().transpose();
}

/// Squared Frechet distance before the final clip at zero. The trace term
/// Tr sqrt(C1 C2) is computed as Tr sqrt(C1^1/2 C2 C1^1/2) so only symmetric
/// PSD roots are taken. When either covariance is near-singular (smallest
/// eigenvalue below 1e-10 of its largest) both get eps*I added, with
/// eps = 1e-10 * max(Tr C1, Tr C2) / d.
template <typename Scalar>
Scalar frechet_distance_unclipped(const GaussianStats<Scalar>& s1,
                                  const GaussianStats<Scalar>& s2) {
  const Eigen::Index d = s1.dim();
  if (s2.dim() != d || s1.cov.rows() != d || s1.cov.cols() != d ||
      s2.cov.rows() != d || s2.cov.cols() != d) {
    throw InvalidInput("frechet_distance: dimension mismatch (" +
                       std::to_string(s1.dim()) + " vs " +
                       std::to_string(s2.dim()) + ")");
  }
  if (d == 0) throw InvalidInput("frechet_distance: zero-dimensional stats");

  using Solver = Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>>;
  const Solver eig1(s1.cov);
  const Solver eig2(s2.cov, Eigen::EigenvaluesOnly);

  const auto near_singular = [](const DenseVector<Scalar>& ev) {
    return ev.minCoeff() < Scalar(1e-10) * ev.maxCoeff();
  };
  const Scalar tr1 = s1.cov.trace();
  const Scalar tr2 = s2.cov.trace();
  Scalar eps(0);
  if (near_singular(eig1.eigenvalues()) || near_singular(eig2.eigenvalues())) {
    eps = Scalar(1e-10) * std::max(tr1, tr2) / static_cast<Scalar>(d);
  }

  // (C1 + eps I)^1/2 shares C1's eigenvectors.
  const DenseVector<Scalar> root1 =
      (eig1.eigenvalues().array() + eps).cwiseMax(Scalar(0)).sqrt().matrix();
  const DenseMatrix<Scalar> sqrt1 =
      eig1.eigenvectors() * root1.asDiagonal() * eig1.eigenvectors().transpose();

  DenseMatrix<Scalar> c2 = s2.cov;
  c2.diagonal().array() += eps;
  DenseMatrix<Scalar> inner = sqrt1 * c2 * sqrt1;
  inner = (inner + inner.transpose()).eval() / Scalar(2);
  const Solver eig_inner(inner, Eigen::EigenvaluesOnly);
  const Scalar tr_covmean =
      eig_inner.eigenvalues().cwiseMax(Scalar(0)).cwiseSqrt().sum();

  const Scalar mean_term = (s1.mean - s2.mean).squaredNorm();
  return mean_term + tr1 + tr2 + Scalar(2) * eps * static_cast<Scalar>(d) -
         Scalar(2) * tr_covmean;
}

/// d^2 = |mu1 - mu2|^2 + Tr(C1 + C2 - 2 sqrt(C1 C2)), clipped at zero.
template <typename Scalar>
Scalar frechet_distance(const GaussianStats<Scalar>& s1,
                        const GaussianStats<Scalar>& s2) {
  const Scalar d2 = frechet_distance_unclipped(s1, s2);
  return d2 > Scalar(0) ? d2 : Scalar(0);
}

/// Rows of image embeddings, stored as f32 to match the interchange format.
class FeatureSet {
 public:
  using Matrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Throws InsufficientSamples for fewer than 2 rows and InvalidInput for
  /// zero columns or non-finite entries.
  explicit FeatureSet(Matrix rows, std::string source_tag = {});

  Eigen::Index dim() const noexcept { return rows_.cols(); }
  Eigen::Index count() const noexcept { return rows_.rows(); }
  const Matrix& rows() const noexcept { return rows_; }
  const std::string& source_tag() const noexcept { return source_tag_; }

 private:
  Matrix rows_;
  std::string source_tag_;
};

/// Statistics in double precision.
GaussianStats<double> fit_gaussian(const FeatureSet& fs);

/// "FEAT" file: u32 version, u32 dim, u64 count, count*dim f32 row-major,
/// then the CRC-32 of the payload bytes. All little-endian. The source tag
/// is not stored; read_features sets it to the file path.
void write_features(const FeatureSet& fs, const std::filesystem::path& path);
FeatureSet read_features(const std::filesystem::path& path);

std::vector<unsigned char> encode_features(const FeatureSet& fs);
FeatureSet decode_features(const std::vector<unsigned char>& bytes,
                           const std::string& context = "features");

inline constexpr int kTinyFeatureSide = 16;
inline constexpr int kTinyFeatureDim = kTinyFeatureSide * kTinyFeatureSide * 3;

/// Bicubic resize to exactly 16x16 (aspect ignored), channels scaled to
/// [0, 1], flattened row-major with R, G, B interleaved: 768 values.
Eigen::VectorXf tiny_image_features(const RgbImage& img);

/// tiny_image_features for every PNG in `dir`, rows ordered by filename.
FeatureSet extract_tiny_features(const std::filesystem::path& dir, int jobs = 1);

}  // namespace curvesmith
