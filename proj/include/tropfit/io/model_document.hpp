#pragma once

/**
 * @file model_document.hpp
 * @brief JSON model files written by `tropfit fit` and read by `tropfit eval`.
 *
 * Layout (keys in this order, two-space indent, LF line endings):
 *
 *   {
 *     "semifield": "max-plus" | "max-times",
 *     "kind": "polynomial" | "rational",
 *     "numerator": {"degrees": ["-1", "1/2", ...], "coefficients": [...]},
 *     "denominator": {...},            // rational models only
 *     "delta_star": <real>,
 *     "error": <real>,
 *     "provenance": {"config": {...}, "seed": <int|null>, "tool_version": "..."}
 *   }
 *
 * Reals are written with 17 significant digits so that a parse/serialize
 * cycle reproduces the text byte for byte.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropfit/approx.hpp"
#include "tropfit/error.hpp"
#include "tropfit/io/format.hpp"
#include "tropfit/rational.hpp"
#include "tropfit/semifield.hpp"
#include "tropfit/version.hpp"

namespace tropfit::io {

struct PolynomialPart {
  std::vector<Rational> degrees;
  std::vector<double> coefficients;

  friend bool operator==(const PolynomialPart&, const PolynomialPart&) = default;
};

struct ModelDocument {
  SemifieldId semifield = SemifieldId::MaxPlus;
  std::string kind = "polynomial";
  PolynomialPart numerator;
  std::optional<PolynomialPart> denominator;
  double delta_star = 0.0;
  double error = 0.0;
  nlohmann::json provenance = nlohmann::json::object();

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

namespace detail {

inline void write_value(std::string& out, const nlohmann::json& j, int indent);

inline void write_indent(std::string& out, int indent) { out.append(static_cast<std::size_t>(indent) * 2, ' '); }

inline bool is_scalar(const nlohmann::json& j) { return !j.is_object() && !j.is_array(); }

inline void write_value(std::string& out, const nlohmann::json& j, int indent) {
  if (j.is_number_float()) {
    out += format_exact(j.get<double>());
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    out += "[";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",";
      if (flat) {
        if (!first) out += " ";
      } else {
        out += "\n";
        write_indent(out, indent + 1);
      }
      write_value(out, e, indent + 1);
      first = false;
    }
    if (!flat && !j.empty()) {
      out += "\n";
      write_indent(out, indent);
    }
    out += "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out += first ? "\n" : ",\n";
      write_indent(out, indent + 1);
      out += nlohmann::json(key).dump() + ": ";
      write_value(out, value, indent + 1);
      first = false;
    }
    out += "\n";
    write_indent(out, indent);
    out += "}";
  } else {
    out += j.dump();
  }
}

inline nlohmann::json part_to_json(const PolynomialPart& part) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : part.degrees) degrees.push_back(d.to_string());
  nlohmann::json coefficients = nlohmann::json::array();
  for (double c : part.coefficients) coefficients.push_back(c);
  return nlohmann::json::object({{"coefficients", coefficients}, {"degrees", degrees}});
}

inline void write_part(std::string& out, const char* key, const PolynomialPart& part) {
  const auto j = part_to_json(part);
  out += "  \"";
  out += key;
  out += "\": {\n    \"degrees\": ";
  write_value(out, j["degrees"], 2);
  out += ",\n    \"coefficients\": ";
  write_value(out, j["coefficients"], 2);
  out += "\n  },\n";
}

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedModel, what); }

inline double read_real(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) malformed(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

inline PolynomialPart read_part(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object()) malformed(std::string("missing object '") + key + "'");
  const auto& obj = j[key];
  if (!obj.contains("degrees") || !obj["degrees"].is_array() || !obj.contains("coefficients") ||
      !obj["coefficients"].is_array())
    malformed(std::string("'") + key + "' needs 'degrees' and 'coefficients' arrays");
  PolynomialPart part;
  for (const auto& d : obj["degrees"]) {
    if (!d.is_string()) malformed("degrees must be strings such as \"-1\" or \"1/3\"");
    try {
      part.degrees.push_back(Rational::parse(d.get<std::string>()));
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  for (const auto& c : obj["coefficients"]) {
    if (!c.is_number()) malformed("coefficients must be numbers");
    part.coefficients.push_back(c.get<double>());
  }
  if (part.degrees.empty() || part.degrees.size() != part.coefficients.size())
    malformed(std::string("'") + key + "' has mismatched or empty degree/coefficient lists");
  return part;
}

}  // namespace detail

inline std::string serialize(const ModelDocument& doc) {
  std::string out = "{\n";
  out += "  \"semifield\": \"" + std::string(to_string(doc.semifield)) + "\",\n";
  out += "  \"kind\": " + nlohmann::json(doc.kind).dump() + ",\n";
  detail::write_part(out, "numerator", doc.numerator);
  if (doc.denominator) detail::write_part(out, "denominator", *doc.denominator);
  out += "  \"delta_star\": " + format_exact(doc.delta_star) + ",\n";
  out += "  \"error\": " + format_exact(doc.error) + ",\n";
  out += "  \"provenance\": ";
  detail::write_value(out, doc.provenance, 1);
  out += "\n}\n";
  return out;
}

inline ModelDocument parse_model_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    detail::malformed(e.what());
  }
  if (!j.is_object()) detail::malformed("top level must be an object");
  ModelDocument doc;
  if (!j.contains("semifield") || !j["semifield"].is_string()) detail::malformed("missing 'semifield'");
  const auto sf = parse_semifield(j["semifield"].get<std::string>());
  if (!sf) detail::malformed("unknown semifield '" + j["semifield"].get<std::string>() + "'");
  doc.semifield = *sf;
  if (!j.contains("kind") || !j["kind"].is_string()) detail::malformed("missing 'kind'");
  doc.kind = j["kind"].get<std::string>();
  if (doc.kind != "polynomial" && doc.kind != "rational") detail::malformed("unknown kind '" + doc.kind + "'");
  doc.numerator = detail::read_part(j, "numerator");
  if (doc.kind == "rational") doc.denominator = detail::read_part(j, "denominator");
  else if (j.contains("denominator")) detail::malformed("polynomial model must not have a denominator");
  doc.delta_star = detail::read_real(j, "delta_star");
  doc.error = detail::read_real(j, "error");
  if (j.contains("provenance")) doc.provenance = j["provenance"];
  return doc;
}

// ---------------------------------------------------------------------------

template <Semifield S>
PolynomialPart to_part(const PolynomialModel<S>& m) {
  return PolynomialPart{m.degrees.values(), m.coefficients.to_reals()};
}

template <Semifield S>
ModelDocument to_document(const FitReport<S>& report, nlohmann::json provenance) {
  ModelDocument doc;
  doc.semifield = S::id;
  if (report.is_rational()) {
    doc.kind = "rational";
    doc.numerator = to_part(report.rational().numerator);
    doc.denominator = to_part(report.rational().denominator);
  } else {
    doc.kind = "polynomial";
    doc.numerator = to_part(report.polynomial());
  }
  doc.delta_star = report.delta_star.value();
  doc.error = report.error.value();
  doc.provenance = std::move(provenance);
  return doc;
}

template <Semifield S>
PolynomialModel<S> to_polynomial(const PolynomialPart& part) {
  if (!std::is_sorted(part.degrees.begin(), part.degrees.end()))
    detail::malformed("degrees must be listed in increasing order");
  try {
    DegreeVector degrees(part.degrees);
    Vector<S> coeffs(part.coefficients.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Scalar<S>::from_real(part.coefficients[i]);
    return PolynomialModel<S>(std::move(degrees), std::move(coeffs));
  } catch (const Error& e) {
    detail::malformed(e.what());
  }
}

template <Semifield S>
Model<S> to_model(const ModelDocument& doc) {
  if (doc.semifield != S::id) detail::malformed("semifield mismatch");
  if (doc.denominator) return RationalModel<S>{to_polynomial<S>(doc.numerator), to_polynomial<S>(*doc.denominator)};
  return to_polynomial<S>(doc.numerator);
}

}  // namespace tropfit::io
