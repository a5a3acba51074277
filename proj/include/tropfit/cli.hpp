#pragma once

/**
 * @file cli.hpp
 * @brief The `tropfit` command line: fit, eval and datasets.
 *
 * Exit codes: 0 success, 2 malformed input or arguments, 3 input the solvers
 * cannot accept (a zero abscissa or ordinate).
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropfit/approx.hpp"
#include "tropfit/datasets.hpp"
#include "tropfit/error.hpp"
#include "tropfit/io/csv.hpp"
#include "tropfit/io/format.hpp"
#include "tropfit/io/model_document.hpp"
#include "tropfit/search.hpp"
#include "tropfit/version.hpp"

namespace tropfit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitSolver = 3;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRegularInput:
    case ErrorCode::ZeroAbscissa:
    case ErrorCode::ZeroArgument:
    case ErrorCode::InversionOfZero:
    case ErrorCode::ZeroToNonpositivePower:
      return kExitSolver;
    default:
      return kExitMalformed;
  }
}

struct FitOptions {
  std::string semifield = "max-plus";
  std::string kind = "polynomial";
  std::string degrees, num_degrees, den_degrees;
  std::optional<std::size_t> terms, num_terms, den_terms;
  std::string range;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::size_t max_iter = kDefaultMaxIter;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string input;
  std::string output;
};

struct EvalOptions {
  std::string model;
  std::string grid;
  std::string x_values;
  std::string input;
  std::string output;
};

struct DatasetOptions {
  std::string name;
  std::string output_dir;
  std::string output;
};

namespace detail {

inline DegreeVector parse_degree_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(Rational::parse(std::string_view(text).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return DegreeVector(std::move(out));
}

inline std::vector<double> split_reals(const std::string& text, char sep, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(sep, pos);
    if (next == std::string::npos) next = text.size();
    double v = 0;
    if (!io::parse_real(std::string_view(text).substr(pos, next - pos), v))
      throw Error(ErrorCode::InvalidConfig, std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
    pos = next + 1;
  }
  if (out.size() != expected) throw Error(ErrorCode::InvalidConfig, std::string("bad ") + what + " '" + text + "'");
  return out;
}

/// a:b:step, both ends included to within step/2.
inline std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split_reals(spec, ':', 3, "grid");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0.0) || b < a) throw Error(ErrorCode::InvalidConfig, "grid needs a <= b and step > 0");
  const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 0.5)) + 1;
  std::vector<double> xs;
  xs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) xs.push_back(a + static_cast<double>(k) * step);
  return xs;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoFailure, "cannot write '" + path + "'");
  f << text;
}

inline nlohmann::json degree_json(const DegreeVector& d) {
  auto arr = nlohmann::json::array();
  for (const auto& r : d) arr.push_back(r.to_string());
  return arr;
}

template <Semifield S>
int run_fit(const FitOptions& opt, std::ostream& out, std::ostream& err) {
  const auto raw = io::parse_samples_file(opt.input);
  const auto samples = SampleSet<S>::from_reals(raw.xs, raw.ys);
  const bool rational = opt.kind == "rational";
  const bool fixed = rational ? (!opt.num_degrees.empty() || !opt.den_degrees.empty()) : !opt.degrees.empty();

  nlohmann::json config = {{"kind", opt.kind}, {"semifield", opt.semifield}, {"max_iter", opt.max_iter}};
  nlohmann::json seed = nullptr;
  std::optional<FitReport<S>> report;

  if (fixed) {
    config["mode"] = "fixed";
    if (rational) {
      if (opt.num_degrees.empty() || opt.den_degrees.empty())
        throw Error(ErrorCode::InvalidConfig, "rational fits need both --num-degrees and --den-degrees");
      const auto p = parse_degree_list(opt.num_degrees);
      const auto q = parse_degree_list(opt.den_degrees);
      config["num_degrees"] = degree_json(p);
      config["den_degrees"] = degree_json(q);
      report = fit_rational(samples, p, q, opt.max_iter);
    } else {
      const auto p = parse_degree_list(opt.degrees);
      config["degrees"] = degree_json(p);
      report = fit_polynomial(samples, p);
    }
  } else {
    SearchConfig sc;
    if (rational) {
      if (!opt.num_terms || !opt.den_terms)
        throw Error(ErrorCode::InvalidConfig, "rational search needs --num-terms and --den-terms");
      sc.n_terms_numerator = *opt.num_terms;
      sc.n_terms_denominator = *opt.den_terms;
      config["num_terms"] = *opt.num_terms;
      config["den_terms"] = *opt.den_terms;
    } else {
      if (!opt.terms) throw Error(ErrorCode::InvalidConfig, "give --degrees, or --terms for a random search");
      sc.n_terms_numerator = *opt.terms;
      config["terms"] = *opt.terms;
    }
    if (opt.range.empty() || !opt.samples || !opt.seed)
      throw Error(ErrorCode::InvalidConfig, "random search needs --range, --samples and --seed");
    const auto bounds = split_reals(opt.range, ':', 2, "range");
    if (bounds[0] != std::floor(bounds[0]) || bounds[1] != std::floor(bounds[1]))
      throw Error(ErrorCode::InvalidConfig, "range bounds must be integers");
    sc.degree_min = static_cast<std::int64_t>(bounds[0]);
    sc.degree_max = static_cast<std::int64_t>(bounds[1]);
    sc.n_samples = *opt.samples;
    sc.rng_seed = *opt.seed;
    sc.max_iter_two_sided = opt.max_iter;
    sc.threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
    config["mode"] = "search";
    config["range"] = {sc.degree_min, sc.degree_max};
    config["samples"] = sc.n_samples;
    seed = sc.rng_seed;

    auto sr = random_search(samples, sc);
    config["best_draw"] = sr.best_index;
    config["samples_evaluated"] = sr.samples_evaluated;
    config["failed_draws"] = sr.failures.size();
    report = std::move(sr.best);
  }

  const nlohmann::json provenance = {
      {"config", config},
      {"seed", seed},
      {"tool_version", kVersion},
      {"diagnostics", {{"iterations", report->iterations}, {"termination", std::string(to_string(report->termination))}}}};
  const auto doc = io::to_document(*report, provenance);
  write_output(opt.output, io::serialize(doc), out);
  err << "delta_star = " << io::format_display(doc.delta_star) << "\n"
      << "error = " << io::format_display(doc.error) << "\n";
  return kExitOk;
}

template <Semifield S>
int run_eval(const EvalOptions& opt, const io::ModelDocument& doc, std::ostream& out) {
  const auto model = io::to_model<S>(doc);
  const int sources = !opt.grid.empty() + !opt.x_values.empty() + !opt.input.empty();
  if (sources != 1) throw Error(ErrorCode::InvalidConfig, "give exactly one of --grid, --x-values, --input");

  std::vector<double> xs;
  std::optional<std::vector<double>> ys;
  if (!opt.grid.empty()) {
    xs = parse_grid(opt.grid);
  } else if (!opt.input.empty()) {
    auto raw = io::parse_samples_file(opt.input);
    xs = std::move(raw.xs);
    ys = std::move(raw.ys);
  } else {
    const auto text = io::read_file(opt.x_values);
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      double v = 0;
      if (!io::parse_real(line, v)) throw LineError(ErrorCode::MalformedRow, line_no, "expected a number");
      xs.push_back(v);
    }
    if (xs.empty()) throw Error(ErrorCode::EmptyFile, "no x values found");
  }

  // The residual column is the tropical quotient model(x) / y: model - y in max-plus.
  std::string text = ys ? "x\tmodel\ty\tresidual\n" : "x\tmodel\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto value = eval_model(model, Scalar<S>::from_real(xs[i]));
    text += io::format_general(xs[i], 12) + "\t" + io::format_general(value.value(), 12);
    if (ys) {
      const auto y = Scalar<S>::from_real((*ys)[i]);
      text += "\t" + io::format_general(y.value(), 12) + "\t" + io::format_general((value * inv(y)).value(), 12);
    }
    text += "\n";
  }
  write_output(opt.output, text, out);
  return kExitOk;
}

inline int run_datasets(const DatasetOptions& opt, std::ostream& out) {
  const auto xs = datasets::grid();
  if (!opt.name.empty()) {
    write_output(opt.output, datasets::to_csv(xs, datasets::evaluate(opt.name, xs)), out);
    return kExitOk;
  }
  const std::string dir = opt.output_dir.empty() ? "." : opt.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create directory '" + dir + "'");
  for (const char* name : {"f", "g"})
    write_output(dir + "/" + name + ".csv", datasets::to_csv(xs, datasets::evaluate(name, xs)), out);
  return kExitOk;
}

}  // namespace detail

/// Runs the command line given as argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical Puiseux polynomial and rational curve fitting"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a model to a CSV of samples and write a model document");
  fit_cmd->add_option("--semifield", fit.semifield, "max-plus or max-times")
      ->check(CLI::IsMember({"max-plus", "max-times"}));
  fit_cmd->add_option("--kind", fit.kind, "polynomial or rational")->check(CLI::IsMember({"polynomial", "rational"}));
  fit_cmd->add_option("--degrees", fit.degrees, "Polynomial exponents, e.g. -14,-1,1,2,3 or 1/3,2");
  fit_cmd->add_option("--num-degrees", fit.num_degrees, "Numerator exponents (rational fits)");
  fit_cmd->add_option("--den-degrees", fit.den_degrees, "Denominator exponents (rational fits)");
  fit_cmd->add_option("--terms", fit.terms, "Number of monomials for a random polynomial search");
  fit_cmd->add_option("--num-terms", fit.num_terms, "Numerator monomials for a random rational search");
  fit_cmd->add_option("--den-terms", fit.den_terms, "Denominator monomials for a random rational search");
  fit_cmd->add_option("--range", fit.range, "Integer degree range min:max for the search");
  fit_cmd->add_option("--samples", fit.samples, "Number of degree draws to evaluate");
  fit_cmd->add_option("--seed", fit.seed, "Seed of the degree sampler");
  fit_cmd->add_option("--max-iter", fit.max_iter, "Iteration cap of the two-sided solver")->capture_default_str();
  fit_cmd->add_option("--threads", fit.threads, "Search worker threads (default: all processors)");
  fit_cmd->add_option("--input", fit.input, "Samples CSV (x,y)")->required();
  fit_cmd->add_option("--output", fit.output, "Model document path (default: standard output)");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model document and write TSV");
  eval_cmd->add_option("--model", eval.model, "Model document")->required();
  eval_cmd->add_option("--grid", eval.grid, "Evaluation grid a:b:step (ends inclusive)");
  eval_cmd->add_option("--x-values", eval.x_values, "File with one x per line");
  eval_cmd->add_option("--input", eval.input, "Samples CSV; adds y and residual columns");
  eval_cmd->add_option("--output", eval.output, "TSV path (default: standard output)");

  DatasetOptions ds;
  auto* ds_cmd = app.add_subcommand("datasets", "Write the f and g sample sets at x = 0, 0.1, ..., 2");
  ds_cmd->add_option("--name", ds.name, "Write only this dataset (f or g)")->check(CLI::IsMember({"f", "g"}));
  ds_cmd->add_option("--output-dir", ds.output_dir, "Directory for f.csv and g.csv");
  ds_cmd->add_option("--output", ds.output, "Path for --name output (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (fit_cmd->parsed()) {
      if (fit.semifield == "max-times") return detail::run_fit<MaxTimes>(fit, out, err);
      return detail::run_fit<MaxPlus>(fit, out, err);
    }
    if (eval_cmd->parsed()) {
      const auto doc = io::parse_model_document(io::read_file(eval.model));
      if (doc.semifield == SemifieldId::MaxTimes) return detail::run_eval<MaxTimes>(eval, doc, out);
      return detail::run_eval<MaxPlus>(eval, doc, out);
    }
    return detail::run_datasets(ds, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tropfit::cli
