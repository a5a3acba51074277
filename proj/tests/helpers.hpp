#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "tropfit/datasets.hpp"
#include "tropfit/tropfit.hpp"

namespace testing {

using MP = tropfit::MaxPlus;
using MT = tropfit::MaxTimes;

inline tropfit::Matrix<MP> to_matrix(const oracle::Dense& d) {
  tropfit::Matrix<MP> m(d.size(), d.front().size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j) m(i, j) = tropfit::Scalar<MP>(d[i][j]);
  return m;
}

inline tropfit::Vector<MP> to_vector(const std::vector<double>& v) { return tropfit::Vector<MP>::from_reals(v); }

inline tropfit::SampleSet<MP> dataset(const char* name) {
  const auto xs = tropfit::datasets::grid();
  const auto ys = tropfit::datasets::evaluate(name, xs);
  return tropfit::SampleSet<MP>::from_reals(xs, ys);
}

inline tropfit::Scalar<MP> mp(double v) { return tropfit::Scalar<MP>(v); }
inline tropfit::Scalar<MT> mt(double v) { return tropfit::Scalar<MT>(v); }

}  // namespace testing
