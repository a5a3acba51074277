#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "tropfit/io/csv.hpp"
#include "tropfit/io/model_document.hpp"

using namespace tropfit;
using testing::MP;

TEST_CASE("parse_samples_text", "[io]") {
  auto s = io::parse_samples_text("x,y\n0,2.5\n0.1,1.1175\n");
  CHECK(s.xs == std::vector<double>{0, 0.1});
  CHECK(s.ys == std::vector<double>{2.5, 1.1175});

  s = io::parse_samples_text("0,2.5\n");
  CHECK(s.xs.size() == 1);

  s = io::parse_samples_text("x,y\r\n1,2\r\n\r\n3,4");
  CHECK(s.ys == std::vector<double>{2, 4});

  try {
    (void)io::parse_samples_text("0,abc\n");
    FAIL("expected MalformedRow");
  } catch (const LineError& e) {
    CHECK(e.code() == ErrorCode::MalformedRow);
    CHECK(e.line() == 1);
  }
  try {
    (void)io::parse_samples_text("x,y\n1,2\nfoo,bar\n");
    FAIL("expected MalformedRow");
  } catch (const LineError& e) {
    CHECK(e.line() == 3);
  }
  try {
    (void)io::parse_samples_text("x,y\n");
    FAIL("expected EmptyFile");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyFile);
  }
  CHECK_THROWS_AS(io::parse_samples_text(""), Error);
  CHECK_THROWS_AS(io::parse_samples_text("1,2,3\n"), Error);
}

TEST_CASE("datasets match the published sample tables", "[io]") {
  const auto xs = datasets::grid();
  REQUIRE(xs.size() == 21);
  const auto f = datasets::evaluate("f", xs);
  const auto g = datasets::evaluate("g", xs);
  CHECK(f[1] == Catch::Approx(1.1175).margin(5e-5));
  CHECK(f[20] == Catch::Approx(2.7202).margin(5e-5));
  CHECK(g[3] == Catch::Approx(0.6844).margin(5e-5));
  CHECK(g[20] == Catch::Approx(2.9779).margin(5e-5));
  const auto parsed = io::parse_samples_text(datasets::to_csv(xs, f));
  CHECK(parsed.xs == xs);
  CHECK(parsed.ys == f);
}

TEST_CASE("model documents round-trip", "[io][property]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7), len(1, 6);
  for (int t = 0; t < 100; ++t) {
    io::ModelDocument doc;
    doc.semifield = t % 2 ? SemifieldId::MaxPlus : SemifieldId::MaxTimes;
    auto part = [&] {
      io::PolynomialPart p;
      std::set<Rational> unique;
      for (int k = len(rng); k > 0; --k) unique.emplace(num(rng), den(rng));
      p.degrees.assign(unique.begin(), unique.end());
      for (std::size_t k = 0; k < p.degrees.size(); ++k) p.coefficients.push_back(u(rng) / 3.0);
      return p;
    };
    doc.numerator = part();
    if (t % 3 == 0) {
      doc.kind = "rational";
      doc.denominator = part();
    }
    doc.delta_star = u(rng);
    doc.error = u(rng) / 7.0;
    doc.provenance = {{"seed", t}, {"tool_version", "x"}, {"config", {{"range", {-3, 4}}, {"ratio", 0.1}}}};

    const auto text = io::serialize(doc);
    const auto back = io::parse_model_document(text);
    CHECK(back == doc);
    CHECK(io::serialize(back) == text);
  }
}

TEST_CASE("malformed model documents are rejected", "[io]") {
  auto code_of = [](const std::string& text) {
    try {
      (void)io::parse_model_document(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoFailure;
  };
  CHECK(code_of("{") == ErrorCode::MalformedModel);
  CHECK(code_of(R"({"semifield":"min-plus"})") == ErrorCode::MalformedModel);
  CHECK(code_of(R"({"semifield":"max-plus","kind":"polynomial","numerator":{"degrees":[1],"coefficients":[0]},
                   "delta_star":0,"error":0})") == ErrorCode::MalformedModel);
  CHECK(code_of(R"({"semifield":"max-plus","kind":"polynomial","numerator":{"degrees":["1","2"],"coefficients":[0]},
                   "delta_star":0,"error":0})") == ErrorCode::MalformedModel);

  // Well-formed JSON but unsorted exponents cannot become a model.
  const auto doc = io::parse_model_document(
      R"({"semifield":"max-plus","kind":"polynomial","numerator":{"degrees":["2","1"],"coefficients":[0,1]},
          "delta_star":0,"error":0})");
  CHECK_THROWS_AS(io::to_model<MP>(doc), Error);
}
