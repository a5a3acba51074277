#pragma once

/**
 * @file linalg.hpp
 * @brief Dense tropical vectors and matrices.
 *
 * Only the products the solvers need are provided: matrix times column,
 * row times matrix, and row times column. A row vector is represented by the
 * same Vector type; conjugate() returns row semantics by convention.
 */

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropfit/error.hpp"
#include "tropfit/semifield.hpp"

namespace tropfit {

template <Semifield S>
class Vector {
 public:
  using value_type = Scalar<S>;

  Vector() = default;
  explicit Vector(std::size_t n, Scalar<S> fill = Scalar<S>::zero()) : data_(n, fill) {}
  explicit Vector(std::vector<Scalar<S>> data) : data_(std::move(data)) {}
  Vector(std::initializer_list<double> values) {
    data_.reserve(values.size());
    for (double v : values) data_.push_back(Scalar<S>::from_real(v));
  }

  static Vector from_reals(std::span<const double> values) {
    Vector out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = Scalar<S>::from_real(values[i]);
    return out;
  }

  static Vector ones(std::size_t n) { return Vector(n, Scalar<S>::one()); }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Scalar<S>& operator[](std::size_t i) { return data_[i]; }
  const Scalar<S>& operator[](std::size_t i) const { return data_[i]; }

  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }

  std::vector<double> to_reals() const {
    std::vector<double> out;
    out.reserve(data_.size());
    for (const auto& s : data_) out.push_back(s.value());
    return out;
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar<S>> data_;
};

/// Row-major dense matrix.
template <Semifield S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar<S> fill = Scalar<S>::zero())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (double v : row) data_.push_back(Scalar<S>::from_real(v));
    }
  }

  /// rows x rows matrix with d on the diagonal and Zero elsewhere.
  static Matrix diagonal(const Vector<S>& d) {
    Matrix out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar<S>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar<S>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar<S>> row(std::size_t i) const {
    return std::span<const Scalar<S>>(data_).subspan(i * cols_, cols_);
  }
  std::span<const Scalar<S>> entries() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar<S>> data_;
};

/// Finite(s) with s >= 1, or Infinite when the supports differ.
template <Semifield S>
struct Distance {
  bool infinite = false;
  Scalar<S> value = Scalar<S>::one();

  static Distance finite(Scalar<S> s) { return Distance{false, s}; }
  static Distance infinity() { return Distance{true, Scalar<S>::zero()}; }

  bool is_finite() const noexcept { return !infinite; }

  friend bool operator==(const Distance& a, const Distance& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<=(const Distance& a, const Distance& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return leq(a.value, b.value);
  }
};

// ---------------------------------------------------------------------------

template <Semifield S>
bool is_regular(const Vector<S>& v) noexcept {
  for (const auto& s : v)
    if (s.is_zero()) return false;
  return true;
}

template <Semifield S>
bool is_regular(const Matrix<S>& m) noexcept {
  for (const auto& s : m.entries())
    if (s.is_zero()) return false;
  return true;
}

template <Semifield S>
bool is_zero_vector(const Vector<S>& v) noexcept {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

/// 0-based indices of the non-Zero elements.
template <Semifield S>
std::set<std::size_t> support(const Vector<S>& v) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.insert(i);
  return out;
}

template <Semifield S>
Vector<S> mat_vec_mul(const Matrix<S>& a, const Vector<S>& x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(a.cols()) +
                                                  " columns, vector has " + std::to_string(x.size()) +
                                                  " elements");
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto acc = Scalar<S>::zero();
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
  return out;
}

/// Row vector r times matrix a; the result is a row vector of length cols(a).
template <Semifield S>
Vector<S> row_mat_mul(const Vector<S>& r, const Matrix<S>& a) {
  if (a.rows() != r.size())
    throw Error(ErrorCode::DimensionMismatch, "row vector length does not match matrix rows");
  Vector<S> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += r[i] * row[j];
  }
  return out;
}

/// Row vector r times column vector c.
template <Semifield S>
Scalar<S> dot(const Vector<S>& r, const Vector<S>& c) {
  if (r.size() != c.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  auto acc = Scalar<S>::zero();
  for (std::size_t i = 0; i < r.size(); ++i) acc += r[i] * c[i];
  return acc;
}

/// Elementwise inverse with Zero kept as Zero (row semantics).
template <Semifield S>
Vector<S> conjugate(const Vector<S>& x) {
  if (is_zero_vector(x)) throw Error(ErrorCode::ZeroVector, "conjugate of the zero vector");
  Vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x[i].is_zero() ? Scalar<S>::zero() : inv(x[i]);
  return out;
}

template <Semifield S>
Vector<S> operator+(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <Semifield S>
Vector<S> operator*(Scalar<S> lambda, const Vector<S>& v) {
  Vector<S> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = lambda * v[i];
  return out;
}

template <Semifield S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/**
 * Generalized metric b^- a (+) a^- b over the common support.
 *
 * Two zero vectors are at distance 1; vectors with different supports are at
 * an Infinite distance.
 */
template <Semifield S>
Distance<S> distance(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  auto acc = Scalar<S>::one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return Distance<S>::infinity();
    if (a[i].is_zero()) continue;
    acc += a[i] * inv(b[i]);
    acc += inv(a[i]) * b[i];
  }
  return Distance<S>::finite(acc);
}

}  // namespace tropfit
