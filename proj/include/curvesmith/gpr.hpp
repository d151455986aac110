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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "curvesmith/error.hpp"

namespace curvesmith::gpr {

/// exp(-20), the noise variance used unless told otherwise.
inline const double kDefaultAlpha = std::exp(-20.0);

inline const std::vector<double> kDefaultGrid = {0.05, 0.1, 0.2, 0.5,
                                                 1.0,  2.0, 5.0};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Isotropic squared-exponential kernel with unit signal variance.
class RbfKernel {
 public:
  explicit RbfKernel(double length_scale) : length_scale_(length_scale) {
    if (!(length_scale > 0.0) || !std::isfinite(length_scale)) {
      throw InvalidInput("RBF length scale must be positive and finite, got " +
                         std::to_string(length_scale));
    }
  }

  double length_scale() const noexcept { return length_scale_; }

  template <typename A, typename B>
  double operator()(const Eigen::MatrixBase<A>& x,
                    const Eigen::MatrixBase<B>& y) const {
    return std::exp(-(x - y).squaredNorm() /
                    (2.0 * length_scale_ * length_scale_));
  }

  /// Cross-kernel K[i][j] = k(a.row(i), b.row(j)).
  template <typename A, typename B>
  Eigen::MatrixXd matrix(const Eigen::MatrixBase<A>& a,
                         const Eigen::MatrixBase<B>& b) const {
    Eigen::MatrixXd k(a.rows(), b.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < b.rows(); ++j) {
        k(i, j) = (*this)(a.row(i), b.row(j));
      }
    }
    return k;
  }

  /// Symmetric Gram matrix; the upper triangle is mirrored from the lower so
  /// K == K^T holds bit-for-bit.
  template <typename A>
  Eigen::MatrixXd gram(const Eigen::MatrixBase<A>& x) const {
    const Eigen::Index n = x.rows();
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      k(i, i) = 1.0;
      for (Eigen::Index j = 0; j < i; ++j) {
        k(i, j) = k(j, i) = (*this)(x.row(i), x.row(j));
      }
    }
    return k;
  }

 private:
  double length_scale_;
};

/// Fitted multi-output GP: one kernel and Cholesky factor shared by every
/// output column. Immutable once built.
class GprModel {
 public:
  GprModel(Eigen::MatrixXd x_train, double alpha, RbfKernel kernel,
           Eigen::MatrixXd chol, Eigen::MatrixXd dual,
           std::uint64_t cv_seed = kDefaultSeed);

  const Eigen::MatrixXd& x_train() const noexcept { return x_train_; }
  double alpha() const noexcept { return alpha_; }
  const RbfKernel& kernel() const noexcept { return kernel_; }
  /// Lower-triangular L with L L^T = K + alpha I.
  const Eigen::MatrixXd& chol() const noexcept { return chol_; }
  /// (K + alpha I)^{-1} Y, one column per output.
  const Eigen::MatrixXd& dual() const noexcept { return dual_; }
  std::uint64_t cv_seed() const noexcept { return cv_seed_; }

  Eigen::Index size() const noexcept { return x_train_.rows(); }
  Eigen::Index input_dim() const noexcept { return x_train_.cols(); }
  Eigen::Index output_dim() const noexcept { return dual_.cols(); }

  /// Posterior mean k(x, X)^T dual for a single query.
  Eigen::VectorXd predict(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// Posterior means for each row of `queries`.
  Eigen::MatrixXd predict_rows(const Eigen::Ref<const Eigen::MatrixXd>& queries) const;

 private:
  Eigen::MatrixXd x_train_;
  double alpha_;
  RbfKernel kernel_;
  Eigen::MatrixXd chol_;
  Eigen::MatrixXd dual_;
  std::uint64_t cv_seed_;
};

/// Cholesky-factors K + alpha I and solves for the dual weights. Throws
/// IllConditioned (with the smallest working alpha found by doubling) when
/// the matrix is not numerically positive definite.
GprModel fit(const Eigen::Ref<const Eigen::MatrixXd>& x,
             const Eigen::Ref<const Eigen::MatrixXd>& y, RbfKernel kernel,
             double alpha = kDefaultAlpha, std::uint64_t cv_seed = kDefaultSeed);

struct CvResult {
  RbfKernel kernel{1.0};
  std::vector<double> grid;
  std::vector<double> rmse;  // mean held-out RMSE per grid entry; inf if unfittable
  std::uint64_t seed = kDefaultSeed;
};

/// Fold assignment: seeded Fisher-Yates shuffle of 0..n-1, then `folds`
/// contiguous blocks. Returns the fold index of every row.
std::vector<int> assign_folds(std::size_t n, int folds, std::uint64_t seed);

/// k-fold CV over RBF length scales with alpha held fixed. The candidate with
/// the lowest mean RMSE wins; RMSEs within 1e-12 tie and the larger length
/// scale is kept. Folds are evaluated on up to `jobs` threads with identical
/// results for any thread count.
CvResult cross_validate(const Eigen::Ref<const Eigen::MatrixXd>& x,
                        const Eigen::Ref<const Eigen::MatrixXd>& y,
                        const std::vector<double>& grid, int folds = 5,
                        double alpha = kDefaultAlpha,
                        std::uint64_t seed = kDefaultSeed, int jobs = 1);

/// Binary model file, little-endian: "GPRM", u32 version, u32 N, u32 input
/// dim, u32 output dim, f64 alpha, f64 length scale, u64 CV seed, then
/// X_train, dual and the full N x N Cholesky factor, all f64 row-major.
void save_model(const GprModel& model, const std::filesystem::path& path);
GprModel load_model(const std::filesystem::path& path);

/// Encoded bytes of the model file, exposed for byte-level comparisons.
std::vector<unsigned char> encode_model(const GprModel& model);
GprModel decode_model(const std::vector<unsigned char>& bytes,
                      const std::string& context = "model");

}  // namespace curvesmith::gpr
