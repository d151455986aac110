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

#include "curvesmith/gpr.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>

#include "curvesmith/parallel.hpp"

namespace curvesmith::gpr {
namespace {

bool factorizes(const Eigen::MatrixXd& gram, double alpha) {
  Eigen::MatrixXd k = gram;
  k.diagonal().array() += alpha;
  return Eigen::LLT<Eigen::MatrixXd>(k).info() == Eigen::Success;
}

// Smallest alpha of the form start * 2^k that lets K + alpha I factor.
double minimum_working_alpha(const Eigen::MatrixXd& gram, double alpha) {
  double candidate = alpha > 0.0 ? 2.0 * alpha : 1e-15;
  for (int i = 0; i < 2000 && std::isfinite(candidate); ++i) {
    if (factorizes(gram, candidate)) return candidate;
    candidate *= 2.0;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

GprModel::GprModel(Eigen::MatrixXd x_train, double alpha, RbfKernel kernel,
                   Eigen::MatrixXd chol, Eigen::MatrixXd dual,
                   std::uint64_t cv_seed)
    : x_train_(std::move(x_train)),
      alpha_(alpha),
      kernel_(kernel),
      chol_(std::move(chol)),
      dual_(std::move(dual)),
      cv_seed_(cv_seed) {
  const Eigen::Index n = x_train_.rows();
  if (n < 1) throw InvalidInput("GPR model needs at least one training row");
  if (chol_.rows() != n || chol_.cols() != n || dual_.rows() != n) {
    throw InvalidInput("GPR model: inconsistent matrix shapes");
  }
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
    throw InvalidInput("GPR model: alpha must be finite and non-negative");
  }
}

Eigen::VectorXd GprModel::predict(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != input_dim()) {
    throw InvalidInput("predict: query has " + std::to_string(x.size()) +
                       " entries, model expects " + std::to_string(input_dim()));
  }
  if (!x.allFinite()) throw InvalidInput("predict: non-finite query");
  Eigen::VectorXd k_star(size());
  for (Eigen::Index i = 0; i < size(); ++i) {
    k_star[i] = kernel_(x.transpose(), x_train_.row(i));
  }
  return dual_.transpose() * k_star;
}

Eigen::MatrixXd GprModel::predict_rows(
    const Eigen::Ref<const Eigen::MatrixXd>& queries) const {
  if (queries.cols() != input_dim()) {
    throw InvalidInput("predict: query width does not match model");
  }
  if (!queries.allFinite()) throw InvalidInput("predict: non-finite query");
  return kernel_.matrix(queries, x_train_) * dual_;
}

GprModel fit(const Eigen::Ref<const Eigen::MatrixXd>& x,
             const Eigen::Ref<const Eigen::MatrixXd>& y, RbfKernel kernel,
             double alpha, std::uint64_t cv_seed) {
  if (x.rows() < 1) throw InvalidInput("fit: need at least one training row");
  if (x.rows() != y.rows()) {
    throw InvalidInput("fit: X has " + std::to_string(x.rows()) +
                       " rows but Y has " + std::to_string(y.rows()));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput("fit: alpha must be finite and non-negative");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw InvalidInput("fit: training data contains non-finite values");
  }

  const Eigen::MatrixXd gram = kernel.gram(x);
  Eigen::MatrixXd k = gram;
  k.diagonal().array() += alpha;
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success) {
    const double suggestion = minimum_working_alpha(gram, alpha);
    std::ostringstream msg;
    msg.precision(6);
    msg << "kernel matrix with alpha=" << alpha << " and length scale "
        << kernel.length_scale()
        << " is not positive definite; smallest alpha that factors: "
        << suggestion;
    throw IllConditioned(msg.str(), suggestion);
  }
  Eigen::MatrixXd chol = llt.matrixL();
  Eigen::MatrixXd dual = llt.solve(y);
  return GprModel(x, alpha, kernel, std::move(chol), std::move(dual), cv_seed);
}

std::vector<int> assign_folds(std::size_t n, int folds, std::uint64_t seed) {
  if (folds < 2) throw InvalidInput("cross-validation needs at least 2 folds");
  if (n < static_cast<std::size_t>(folds)) {
    throw InvalidInput("cross-validation with " + std::to_string(folds) +
                       " folds needs at least that many rows, got " +
                       std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // mt19937_64's output sequence is fixed by the standard; the modulo keeps
  // the shuffle independent of the library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<int> fold_of(n);
  for (int f = 0; f < folds; ++f) {
    const std::size_t lo = n * f / folds;
    const std::size_t hi = n * (f + 1) / folds;
    for (std::size_t p = lo; p < hi; ++p) fold_of[order[p]] = f;
  }
  return fold_of;
}

CvResult cross_validate(const Eigen::Ref<const Eigen::MatrixXd>& x,
                        const Eigen::Ref<const Eigen::MatrixXd>& y,
                        const std::vector<double>& grid, int folds,
                        double alpha, std::uint64_t seed, int jobs) {
  if (grid.empty()) throw InvalidInput("cross-validation grid is empty");
  if (x.rows() != y.rows()) throw InvalidInput("X and Y row counts differ");
  std::vector<RbfKernel> kernels;
  for (double ls : grid) kernels.emplace_back(ls);

  const auto n = static_cast<std::size_t>(x.rows());
  const std::vector<int> fold_of = assign_folds(n, folds, seed);

  std::vector<std::vector<Eigen::Index>> train(folds), held(folds);
  for (std::size_t i = 0; i < n; ++i) {
    for (int f = 0; f < folds; ++f) {
      (fold_of[i] == f ? held[f] : train[f]).push_back(static_cast<Eigen::Index>(i));
    }
  }

  const std::size_t tasks = grid.size() * static_cast<std::size_t>(folds);
  std::vector<double> fold_rmse(tasks);
  parallel_for(tasks, jobs, [&](std::size_t t) {
    const std::size_t c = t / folds;
    const int f = static_cast<int>(t % folds);
    const Eigen::MatrixXd x_tr = x(train[f], Eigen::all);
    const Eigen::MatrixXd y_tr = y(train[f], Eigen::all);
    const Eigen::MatrixXd x_te = x(held[f], Eigen::all);
    const Eigen::MatrixXd y_te = y(held[f], Eigen::all);
    try {
      const GprModel model = fit(x_tr, y_tr, kernels[c], alpha, seed);
      const Eigen::MatrixXd err = model.predict_rows(x_te) - y_te;
      fold_rmse[t] = std::sqrt(err.squaredNorm() / static_cast<double>(err.size()));
    } catch (const IllConditioned&) {
      fold_rmse[t] = std::numeric_limits<double>::infinity();
    }
  });

  CvResult result{kernels.front(), grid, std::vector<double>(grid.size()), seed};
  for (std::size_t c = 0; c < grid.size(); ++c) {
    double sum = 0.0;
    for (int f = 0; f < folds; ++f) sum += fold_rmse[c * folds + f];
    result.rmse[c] = sum / folds;
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < grid.size(); ++c) {
    const double a = result.rmse[c];
    const double b = result.rmse[best];
    const bool tie = (std::isinf(a) && std::isinf(b)) || std::abs(a - b) < 1e-12;
    if (tie ? grid[c] > grid[best] : a < b) best = c;
  }
  result.kernel = kernels[best];
  return result;
}

}  // namespace curvesmith::gpr
