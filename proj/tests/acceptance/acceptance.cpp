// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "tropfit/cli.hpp"

using namespace tropfit;
using testing::MP;
using testing::mp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_residual(const Model<MP>& model, const SampleSet<MP>& samples) {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::fabs(eval_model(model, s.x).value() - s.y.value()));
  return m;
}

// Fits produced by criteria 1-4, revisited by criterion 9.
std::vector<std::pair<std::string, FitReport<MP>>> g_fits;

Outcome golden_polynomial(const DegreeVector& degrees, double delta, const std::vector<double>& theta) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = testing::dataset("f");
  const auto r = fit_polynomial(f, degrees);
  const double elapsed = seconds_since(t0);
  o.require(std::fabs(r.delta_star.value() - delta) <= 1e-3, "delta* = " + fmt("%.6f", r.delta_star.value()));
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double c = r.polynomial().coefficients[j].value();
    o.require(std::fabs(c - theta[j]) <= 1e-3, "theta_" + std::to_string(j + 1) + " = " + fmt("%.6f", c));
  }
  o.require(elapsed < 0.1, "runtime " + fmt("%.3f s", elapsed));
  o.detail = (o.pass ? "delta* = " + fmt("%.4f", r.delta_star.value()) + ", " + fmt("%.4f s", elapsed) : o.detail);
  g_fits.emplace_back("N=" + std::to_string(degrees.size()), r);
  return o;
}

Outcome criterion1() {
  return golden_polynomial(DegreeVector{-14, -1, 1, 2, 3}, 0.1360, {2.5680, 0.9176, -0.4320, -1.6281, -3.2413});
}

Outcome criterion2() {
  return golden_polynomial(DegreeVector{-15, -3, -1, 0, 1, 2, 3}, 0.0481,
                           {2.5240, 1.4096, 0.8736, 0.3503, -0.4760, -1.6720, -3.2853});
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = testing::dataset("g");
  const auto r = fit_rational(g, DegreeVector{-3, -2, 1, 2}, DegreeVector{-5, -2});
  const double elapsed = seconds_since(t0);
  o.require(std::fabs(r.delta_star.value() - 0.1395) <= 2e-3, "delta* = " + fmt("%.6f", r.delta_star.value()));

  // Printed coefficients of P* and Q*; gauge removed by pinning sigma_1.
  const std::vector<double> theta{3.4753, 2.7409, -1.0110, -2.6014};
  const std::vector<double> sigma{3.2525, 2.4211};
  const auto& m = r.rational();
  const double shift = m.denominator.coefficients[0].value() - sigma[0];
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double c = m.numerator.coefficients[j].value() - shift;
    o.require(std::fabs(c - theta[j]) <= 2e-3, "theta_" + std::to_string(j + 1) + " = " + fmt("%.6f", c));
  }
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const double c = m.denominator.coefficients[k].value() - shift;
    o.require(std::fabs(c - sigma[k]) <= 2e-3, "sigma_" + std::to_string(k + 1) + " = " + fmt("%.6f", c));
  }
  o.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
  if (o.pass) o.detail = "delta* = " + fmt("%.4f", r.delta_star.value()) + ", " + fmt("%.4f s", elapsed);
  g_fits.emplace_back("N=4,L=2", r);
  return o;
}

Outcome rational_delta(const DegreeVector& p, const DegreeVector& q, double expected, const std::string& label) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = testing::dataset("g");
  const auto r = fit_rational(g, p, q);
  const double elapsed = seconds_since(t0);
  o.require(std::fabs(r.delta_star.value() - expected) <= 2e-3,
            "delta* = " + fmt("%.6f", r.delta_star.value()) + ", expected " + fmt("%.4f", expected));
  o.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
  if (o.pass) o.detail = "delta* = " + fmt("%.4f", r.delta_star.value()) + ", " + fmt("%.4f s", elapsed);
  g_fits.emplace_back(label, r);
  return o;
}

Outcome criterion4() {
  return rational_delta(DegreeVector{-3, -2, 0, 1, 2, 4}, DegreeVector{-5, -3, -2, 0}, 0.0701, "N=6,L=4");
}

// Same class with the exponent list of the published conventional form.
Outcome criterion4_published_form() {
  return rational_delta(DegreeVector{-3, -2, -1, 0, 2, 4}, DegreeVector{-5, -3, -2, 0}, 0.0701, "N=6,L=4 (p3=-1)");
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> rows(1, 4), cols(1, 3);
  const auto axis = oracle::axis(-10, 10, 0.1);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const auto m = static_cast<std::size_t>(rows(rng));
    const auto n = static_cast<std::size_t>(cols(rng));
    const auto ad = oracle::random_dense(rng, m, n, -5, 5);
    const auto bd = oracle::random_dense(rng, m, 1, -5, 5);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = bd[i][0];
    const double err = sqrt(one_sided_solve(testing::to_matrix(ad), testing::to_vector(b)).delta).value();
    const double grid = oracle::one_sided_grid_min(ad, b, axis);
    if (!(err <= grid + 1e-9 && err >= grid - 0.1 * static_cast<double>(n))) ++failures;
  }
  const double elapsed = seconds_since(t0);
  o.require(failures == 0, std::to_string(failures) + " of 100 instances outside the grid bounds");
  o.require(elapsed < 10.0, "runtime " + fmt("%.2f s", elapsed));
  if (o.pass) o.detail = "100 instances, " + fmt("%.2f s", elapsed);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(606);
  const auto axis = oracle::axis(-6, 6, 0.2);
  int non_monotone = 0, above_grid = 0;
  for (int t = 0; t < 100; ++t) {
    const auto ad = oracle::random_dense(rng, 3, 2, -5, 5);
    const auto bd = oracle::random_dense(rng, 3, 2, -5, 5);
    const auto sol = two_sided_solve(testing::to_matrix(ad), testing::to_matrix(bd));
    // Rounding in the conjugate products can add an ulp or so.
    for (std::size_t i = 1; i < sol.deltas.size(); ++i)
      if (sol.deltas[i].value() > sol.deltas[i - 1].value() + 1e-12) {
        ++non_monotone;
        break;
      }
    const double grid = oracle::two_sided_grid_min(ad, bd, axis);
    // Squaring doubles in max-plus.
    if (sol.delta_star.value() > 2.0 * grid + 1e-9) ++above_grid;
  }
  const double elapsed = seconds_since(t0);
  o.require(non_monotone == 0, std::to_string(non_monotone) + " non-monotone sequences");
  o.require(above_grid == 0, std::to_string(above_grid) + " instances above the grid oracle");
  o.require(elapsed < 60.0, "runtime " + fmt("%.2f s", elapsed));
  if (o.pass) o.detail = "100 instances, " + fmt("%.2f s", elapsed);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<int> rows(1, 6), cols(1, 4);
  std::uniform_real_distribution<double> u(-5, 5);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const auto m = static_cast<std::size_t>(rows(rng));
    const auto n = static_cast<std::size_t>(cols(rng));
    const auto a = testing::to_matrix(oracle::random_dense(rng, m, n, -5, 5));
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    const auto b = mat_vec_mul(a, testing::to_vector(x));
    const auto sol = one_sided_solve(a, b);
    bool ok = sol.exact && std::fabs(sol.delta.value()) <= 1e-12;
    const auto ax = mat_vec_mul(a, sol.x_star);
    for (std::size_t i = 0; i < m; ++i) ok = ok && std::fabs(ax[i].value() - b[i].value()) <= 1e-12;
    for (std::size_t j = 0; j < n; ++j) ok = ok && sol.x_star[j].value() >= x[j] - 1e-12;
    if (!ok) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " of 100 systems not recovered");
  if (o.pass) o.detail = "100 systems";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_int_distribution<int> len(1, 8);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(len(rng));
    std::vector<double> ra(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
      ra[i] = u(rng);
      rb[i] = u(rng);
    }
    const auto a = testing::to_vector(ra);
    const auto b = testing::to_vector(rb);
    const auto dab = distance(a, b);
    const auto dba = distance(b, a);
    const auto lambda = mp(u(rng));
    const auto scaled = distance(lambda * a, lambda * b);
    bool ok = dab.is_finite() && dba.is_finite() && scaled.is_finite();
    ok = ok && dab == dba;
    ok = ok && leq(Scalar<MP>::one(), dab.value);
    ok = ok && std::fabs(dab.value.value() - oracle::chebyshev(ra, rb)) <= 1e-12;
    ok = ok && std::fabs(scaled.value.value() - dab.value.value()) <= 1e-12;
    ok = ok && distance(a, a) == Distance<MP>::finite(Scalar<MP>::one());
    ok = ok && (ra == rb) == (dab.value == Scalar<MP>::one());
    if (!ok) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " of 1000 pairs violate a metric property");
  if (o.pass) o.detail = "1000 pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto f = testing::dataset("f");
  const auto g = testing::dataset("g");
  for (const auto& [label, report] : g_fits) {
    const auto& samples = report.is_rational() ? g : f;
    const double residual = max_residual(report.model, samples);
    o.require(std::fabs(residual - report.error.value()) <= 1e-9,
              label + ": max residual " + fmt("%.12f", residual) + " vs error " + fmt("%.12f", report.error.value()));
  }
  o.require(g_fits.size() >= 4, "fits from criteria 1-4 missing");
  if (o.pass) o.detail = std::to_string(g_fits.size()) + " fits";
  return o;
}

Outcome criterion10() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(TROPFIT_TEST_TMPDIR) / "acceptance";
  fs::create_directories(dir);
  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "tropfit");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  run({"datasets", "--output-dir", dir.string()});
  const std::vector<std::vector<std::string>> commands{
      {"fit", "--kind", "polynomial", "--terms", "5", "--range", "-15:5", "--samples", "300", "--seed", "7",
       "--input", (dir / "f.csv").string()},
      {"fit", "--kind", "rational", "--num-terms", "4", "--den-terms", "2", "--range", "-10:10", "--samples", "40",
       "--seed", "11", "--input", (dir / "g.csv").string()}};
  for (const auto& base : commands) {
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = run(one);
    const auto b = run(four);
    o.require(a.first == 0 && b.first == 0, "fit exited with " + std::to_string(a.first) + "/" + std::to_string(b.first));
    o.require(!a.second.empty() && a.second == b.second, base[2] + " documents differ between 1 and 4 threads");
  }
  if (o.pass) o.detail = "polynomial and rational searches";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  golden convex fit, N=5", criterion1},
      {"2  golden convex fit, N=7", criterion2},
      {"3  golden rational fit, N=4 L=2", criterion3},
      {"4  golden rational fit, N=6 L=4, p=(-3,-2,0,1,2,4)", criterion4},
      {"4' rational fit, N=6 L=4, p=(-3,-2,-1,0,2,4) [supplementary]", criterion4_published_form},
      {"5  one-sided grid oracle", criterion5},
      {"6  two-sided monotonicity and grid oracle", criterion6},
      {"7  exact-system recovery", criterion7},
      {"8  metric properties", criterion8},
      {"9  residual identity", criterion9},
      {"10 CLI determinism across thread counts", criterion10},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
