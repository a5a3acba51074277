#pragma once

/**
 * @file approx.hpp
 * @brief Discrete best approximation by tropical Puiseux polynomials and
 * rational functions.
 *
 * Given samples (x_i, y_i), a polynomial P(x) = (+)_j theta_j x^{p_j} is fitted
 * by solving X theta = y in the best approximate sense, where X_ij = x_i^{p_j}.
 * A rational function P(x)/Q(x) is fitted through the two-sided equation
 * X theta = Y Z sigma with Y = diag(y) and Z_ik = x_i^{q_k}.
 *
 * In max-plus the fitted models are max-affine (polynomial) and differences of
 * max-affine functions (rational), and the reported error is the Chebyshev
 * error max_i |model(x_i) - y_i|.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tropfit/error.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/rational.hpp"
#include "tropfit/semifield.hpp"
#include "tropfit/solvers.hpp"

namespace tropfit {

template <Semifield S>
struct Sample {
  Scalar<S> x;
  Scalar<S> y;
};

template <Semifield S>
class SampleSet {
 public:
  SampleSet() = default;
  explicit SampleSet(std::vector<Sample<S>> points) : points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::InvalidConfig, "sample set is empty");
  }

  static SampleSet from_reals(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw Error(ErrorCode::DimensionMismatch, "x and y lengths differ");
    std::vector<Sample<S>> pts;
    pts.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      pts.push_back({Scalar<S>::from_real(xs[i]), Scalar<S>::from_real(ys[i])});
    return SampleSet(std::move(pts));
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Sample<S>& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  Vector<S> xs() const {
    Vector<S> v(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) v[i] = points_[i].x;
    return v;
  }
  Vector<S> ys() const {
    Vector<S> v(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) v[i] = points_[i].y;
    return v;
  }

 private:
  std::vector<Sample<S>> points_;
};

/// Strictly increasing exponents. Unsorted input is sorted; duplicates throw.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<Rational> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error(ErrorCode::InvalidDegrees, "degree vector is empty");
    std::sort(degrees_.begin(), degrees_.end());
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      if (degrees_[i] == degrees_[i - 1])
        throw Error(ErrorCode::InvalidDegrees, "duplicate degree " + degrees_[i].to_string());
  }
  DegreeVector(std::initializer_list<std::int64_t> ints)
      : DegreeVector(std::vector<Rational>(ints.begin(), ints.end())) {}

  std::size_t size() const noexcept { return degrees_.size(); }
  const Rational& operator[](std::size_t i) const { return degrees_[i]; }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }
  const std::vector<Rational>& values() const noexcept { return degrees_; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<Rational> degrees_;
};

template <Semifield S>
struct PolynomialModel {
  DegreeVector degrees;
  Vector<S> coefficients;

  PolynomialModel() = default;
  PolynomialModel(DegreeVector d, Vector<S> c) : degrees(std::move(d)), coefficients(std::move(c)) {
    if (degrees.size() != coefficients.size())
      throw Error(ErrorCode::DimensionMismatch, "degree and coefficient counts differ");
    if (!is_regular(coefficients)) throw Error(ErrorCode::NonRegularInput, "zero coefficient");
  }

  friend bool operator==(const PolynomialModel&, const PolynomialModel&) = default;
};

template <Semifield S>
struct RationalModel {
  PolynomialModel<S> numerator;
  PolynomialModel<S> denominator;

  friend bool operator==(const RationalModel&, const RationalModel&) = default;
};

template <Semifield S>
using Model = std::variant<PolynomialModel<S>, RationalModel<S>>;

template <Semifield S>
struct FitReport {
  Scalar<S> delta_star;
  Scalar<S> error;
  Model<S> model;
  std::size_t iterations = 0;
  Termination termination = Termination::ClosedForm;

  const PolynomialModel<S>& polynomial() const { return std::get<PolynomialModel<S>>(model); }
  const RationalModel<S>& rational() const { return std::get<RationalModel<S>>(model); }
  bool is_rational() const noexcept { return std::holds_alternative<RationalModel<S>>(model); }
};

// ---------------------------------------------------------------------------

/// M x N matrix with entry (i, j) = x_i^{p_j}.
template <Semifield S>
Matrix<S> build_poly_matrix(const SampleSet<S>& samples, const DegreeVector& degrees) {
  Matrix<S> out(samples.size(), degrees.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& x = samples[i].x;
    if (x.is_zero()) throw Error(ErrorCode::ZeroAbscissa, "sample " + std::to_string(i + 1) + " has x = zero");
    for (std::size_t j = 0; j < degrees.size(); ++j) out(i, j) = pow(x, degrees[j]);
  }
  return out;
}

template <Semifield S>
Scalar<S> eval_polynomial(const PolynomialModel<S>& model, Scalar<S> x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroArgument, "polynomial evaluated at zero");
  auto acc = Scalar<S>::zero();
  for (std::size_t j = 0; j < model.degrees.size(); ++j) acc += model.coefficients[j] * pow(x, model.degrees[j]);
  return acc;
}

template <Semifield S>
Scalar<S> eval_rational(const RationalModel<S>& model, Scalar<S> x) {
  return eval_polynomial(model.numerator, x) * inv(eval_polynomial(model.denominator, x));
}

template <Semifield S>
Scalar<S> eval_model(const Model<S>& model, Scalar<S> x) {
  return std::visit(
      [&](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PolynomialModel<S>>)
          return eval_polynomial(m, x);
        else
          return eval_rational(m, x);
      },
      model);
}

/// d(w, y) with w_i = model(x_i): the error of the model on the samples.
template <Semifield S>
Distance<S> residual_distance(const Model<S>& model, const SampleSet<S>& samples) {
  Vector<S> w(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) w[i] = eval_model(model, samples[i].x);
  return distance(w, samples.ys());
}

template <Semifield S>
FitReport<S> fit_polynomial(const SampleSet<S>& samples, const DegreeVector& degrees) {
  const auto x = build_poly_matrix(samples, degrees);
  const auto sol = one_sided_solve(x, samples.ys());
  return FitReport<S>{sol.delta, sol.error, PolynomialModel<S>(degrees, sol.x_star), 1,
                      sol.exact ? Termination::ExactSolution : Termination::ClosedForm};
}

/// The pair (X, Y Z) of the two-sided equation X theta = Y Z sigma.
template <Semifield S>
std::pair<Matrix<S>, Matrix<S>> build_rational_system(const SampleSet<S>& samples, const DegreeVector& p_degrees,
                                                      const DegreeVector& q_degrees) {
  const auto y = samples.ys();
  if (!is_regular(y)) throw Error(ErrorCode::NonRegularInput, "a sample has y = zero");
  auto x = build_poly_matrix(samples, p_degrees);
  auto z = build_poly_matrix(samples, q_degrees);
  return {std::move(x), mat_mul(Matrix<S>::diagonal(y), z)};
}

template <Semifield S>
FitReport<S> fit_rational(const SampleSet<S>& samples, const DegreeVector& p_degrees, const DegreeVector& q_degrees,
                          std::size_t max_iter = kDefaultMaxIter) {
  const auto [x, yz] = build_rational_system(samples, p_degrees, q_degrees);
  const auto sol = two_sided_solve(x, yz, Vector<S>::ones(p_degrees.size()), max_iter);
  RationalModel<S> model{PolynomialModel<S>(p_degrees, sol.x_star), PolynomialModel<S>(q_degrees, sol.y_star)};
  return FitReport<S>{sol.delta_star, sqrt(sol.delta_star), std::move(model), sol.iterations, sol.termination};
}

}  // namespace tropfit
