#pragma once

/**
 * @file solvers.hpp
 * @brief Best approximate solutions of Ax = b and Ax = By.
 *
 * For regular A and b the squared error of the best approximation is
 *
 *     delta = (A (b^- A)^-)^- b,
 *
 * attained at x = sqrt(delta) (b^- A)^-. When delta = 1 the system is
 * consistent and (b^- A)^- is its maximal solution.
 *
 * The two-sided solver alternates one-sided projections between the column
 * spans of A and B. The squared errors it records form a non-increasing
 * sequence.
 */

#include <cstddef>
#include <string_view>
#include <vector>

#include "tropfit/error.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/semifield.hpp"

namespace tropfit {

/// Tolerance for declaring a squared error equal to the unit.
inline constexpr double kExactTolerance = 1e-9;
/// Elementwise tolerance for recognising a repeated iterate.
inline constexpr double kCycleTolerance = 1e-9;
inline constexpr std::size_t kDefaultMaxIter = 1000;

enum class Termination { ExactSolution, CycleDetected, IterationCap, ClosedForm };

constexpr std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::ExactSolution: return "exact-solution";
    case Termination::CycleDetected: return "cycle-detected";
    case Termination::IterationCap: return "iteration-cap";
    case Termination::ClosedForm: return "closed-form";
  }
  return "unknown";
}

template <Semifield S>
struct OneSidedSolution {
  Scalar<S> delta;  // squared error, >= 1
  Scalar<S> error;  // sqrt(delta)
  Vector<S> x_star;
  bool exact = false;
};

template <Semifield S>
struct TwoSidedSolution {
  Scalar<S> delta_star;
  Vector<S> x_star;
  Vector<S> y_star;
  std::size_t iterations = 0;
  Termination termination = Termination::IterationCap;
  /// delta_0, delta_1, ... in the order they were computed.
  std::vector<Scalar<S>> deltas;
};

namespace detail {

template <Semifield S>
void require_regular(const Matrix<S>& m, const char* name) {
  if (m.rows() == 0 || m.cols() == 0)
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " is empty");
  if (!is_regular(m)) throw Error(ErrorCode::NonRegularInput, std::string(name) + " has a zero entry");
}

template <Semifield S>
void require_regular(const Vector<S>& v, const char* name) {
  if (v.empty()) throw Error(ErrorCode::DimensionMismatch, std::string(name) + " is empty");
  if (!is_regular(v)) throw Error(ErrorCode::NonRegularInput, std::string(name) + " has a zero element");
}

// Core of the one-sided solution without input validation. Inputs are
// regular, so every intermediate vector is regular too.
template <Semifield S>
OneSidedSolution<S> project(const Matrix<S>& a, const Vector<S>& b) {
  const Vector<S> maximal = conjugate(row_mat_mul(conjugate(b), a));  // (b^- A)^-
  const Scalar<S> delta = dot(conjugate(mat_vec_mul(a, maximal)), b);
  const Scalar<S> error = sqrt(delta);
  OneSidedSolution<S> out{delta, error, maximal, is_unit(delta, kExactTolerance)};
  if (!out.exact) out.x_star = error * maximal;
  return out;
}

template <Semifield S>
bool seen_before(const std::vector<Vector<S>>& history, const Vector<S>& v) {
  for (const auto& h : history) {
    bool same = true;
    for (std::size_t i = 0; i < v.size() && same; ++i)
      same = approx_equal(h[i], v[i], kCycleTolerance);
    if (same) return true;
  }
  return false;
}

}  // namespace detail

/// Best approximate solution of Ax = b for regular A and b.
template <Semifield S>
OneSidedSolution<S> one_sided_solve(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "A has " + std::to_string(a.rows()) + " rows, b has " +
                                                  std::to_string(b.size()) + " elements");
  detail::require_regular(a, "A");
  detail::require_regular(b, "b");
  return detail::project(a, b);
}

/**
 * Alternating solver for Ax = By starting from x0.
 *
 * Even steps project Ax_i onto span(B) and yield y_{i+1}; odd steps project
 * By_i onto span(A) and yield x_{i+1}. The loop stops when a squared error
 * equals the unit, when the fresh iterate repeats an earlier one, or after
 * max_iter squared errors have been computed. The returned triple is the one
 * with the smallest squared error; ties go to the later iterate, which is the
 * pair the stopping rule itself designates.
 */
template <Semifield S>
TwoSidedSolution<S> two_sided_solve(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& x0,
                                    std::size_t max_iter = kDefaultMaxIter) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "A and B have different row counts");
  if (x0.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "x0 length does not match A");
  if (max_iter == 0) throw Error(ErrorCode::InvalidConfig, "max_iter must be at least 1");
  detail::require_regular(a, "A");
  detail::require_regular(b, "B");
  detail::require_regular(x0, "x0");

  TwoSidedSolution<S> out;
  std::vector<Vector<S>> xs{x0};
  std::vector<Vector<S>> ys;
  Vector<S> x = x0;
  Vector<S> y;
  bool have_best = false;

  auto record = [&](const Scalar<S>& delta, const Vector<S>& xi, const Vector<S>& yi) {
    out.deltas.push_back(delta);
    if (!have_best || leq(delta, out.delta_star) || approx_equal(delta, out.delta_star, kExactTolerance)) {
      out.delta_star = delta;
      out.x_star = xi;
      out.y_star = yi;
      have_best = true;
    }
  };

  for (std::size_t step = 0; step < max_iter; ++step) {
    if (step % 2 == 0) {
      auto proj = detail::project(b, mat_vec_mul(a, x));
      y = std::move(proj.x_star);
      record(proj.delta, x, y);
      out.iterations = step + 1;
      if (proj.exact) {
        out.termination = Termination::ExactSolution;
        return out;
      }
      if (detail::seen_before(ys, y)) {
        out.termination = Termination::CycleDetected;
        return out;
      }
      ys.push_back(y);
    } else {
      auto proj = detail::project(a, mat_vec_mul(b, y));
      x = std::move(proj.x_star);
      record(proj.delta, x, y);
      out.iterations = step + 1;
      if (proj.exact) {
        out.termination = Termination::ExactSolution;
        return out;
      }
      if (detail::seen_before(xs, x)) {
        out.termination = Termination::CycleDetected;
        return out;
      }
      xs.push_back(x);
    }
  }
  out.termination = Termination::IterationCap;
  return out;
}

template <Semifield S>
TwoSidedSolution<S> two_sided_solve(const Matrix<S>& a, const Matrix<S>& b) {
  return two_sided_solve(a, b, Vector<S>::ones(a.cols()), kDefaultMaxIter);
}

}  // namespace tropfit
