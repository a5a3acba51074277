// Fits the convex f and nonconvex g sample sets with fixed degree classes and
// prints the fitted max-plus models in conventional max(...) form.
#include <cstdio>
#include <string>

#include "tropfit/datasets.hpp"
#include "tropfit/tropfit.hpp"

using namespace tropfit;
using MP = MaxPlus;

namespace {

std::string conventional(const PolynomialModel<MP>& m) {
  std::string s = "max(";
  for (std::size_t j = 0; j < m.degrees.size(); ++j) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.4f%+gx", j ? ", " : "", m.coefficients[j].value(), m.degrees[j].to_double());
    s += buf;
  }
  return s + ")";
}

SampleSet<MP> load(const char* name) {
  const auto xs = datasets::grid();
  const auto ys = datasets::evaluate(name, xs);
  return SampleSet<MP>::from_reals(xs, ys);
}

}  // namespace

int main() {
  const auto f = load("f");
  for (const auto& degrees : {DegreeVector{-14, -1, 1, 2, 3}, DegreeVector{-15, -3, -1, 0, 1, 2, 3}}) {
    const auto r = fit_polynomial(f, degrees);
    std::printf("f, N=%zu: delta* = %.4f\n  P(x) = %s\n", degrees.size(), r.delta_star.value(),
                conventional(r.polynomial()).c_str());
  }

  const auto g = load("g");
  const auto r = fit_rational(g, DegreeVector{-3, -2, 1, 2}, DegreeVector{-5, -2});
  std::printf("g, N=4 L=2: delta* = %.4f (%zu iterations, %s)\n  P(x) = %s\n  Q(x) = %s\n", r.delta_star.value(),
              r.iterations, std::string(to_string(r.termination)).c_str(),
              conventional(r.rational().numerator).c_str(), conventional(r.rational().denominator).c_str());
  return 0;
}
