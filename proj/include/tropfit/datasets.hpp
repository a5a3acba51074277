#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropfit/error.hpp"
#include "tropfit/io/format.hpp"

namespace tropfit::datasets {

/// Convex test function x^2 - 3 x^{1/3} + 5/2 on [0, 2].
inline double convex_f(double x) { return x * x - 3.0 * std::cbrt(x) + 2.5; }

/// Nonconvex test function 3 (x - 1)^2 sin(x) + 1/4 on [0, 2].
inline double nonconvex_g(double x) { return 3.0 * (x - 1.0) * (x - 1.0) * std::sin(x) + 0.25; }

/// x_i = (i - 1) / 10 for i = 1..21.
inline std::vector<double> grid() {
  std::vector<double> xs;
  for (int i = 0; i < 21; ++i) xs.push_back(static_cast<double>(i) / 10.0);
  return xs;
}

inline std::vector<double> evaluate(std::string_view name, const std::vector<double>& xs) {
  std::vector<double> ys;
  for (double x : xs) {
    if (name == "f") ys.push_back(convex_f(x));
    else if (name == "g") ys.push_back(nonconvex_g(x));
    else throw Error(ErrorCode::InvalidConfig, "unknown dataset '" + std::string(name) + "'");
  }
  return ys;
}

inline std::string to_csv(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::string out = "x,y\n";
  for (std::size_t i = 0; i < xs.size(); ++i) out += io::format_exact(xs[i]) + "," + io::format_exact(ys[i]) + "\n";
  return out;
}

}  // namespace tropfit::datasets
