#ifndef LUMBRAL_IO_HPP
#define LUMBRAL_IO_HPP

// Rendering of triangles, polynomials, verification reports and Dobinski
// traces as json, csv, tex and plain tables.  Rationals always travel as
// strings in machine formats.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lumbral/errors.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"
#include "lumbral/triangle.hpp"
#include "lumbral/verifier.hpp"

namespace lumbral::io {

enum class Format { kJson, kCsv, kTex, kTable };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "tex") return Format::kTex;
  if (s == "table") return Format::kTable;
  throw ParameterError("unknown format '" + s + "' (expected json, csv, tex or table)");
}

using nlohmann::ordered_json;

namespace detail {

inline std::string tex_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const std::string sign = r.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(r.numerator())).get_str() + "}{" + r.denominator().get_str() + "}";
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline ordered_json optional_rational(const std::optional<Rational>& r) {
  return r ? ordered_json(r->to_string()) : ordered_json(nullptr);
}

template <typename T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Triangles

struct TriangleMeta {
  std::string kind;
  std::optional<Rational> lambda;  // nullopt for lambda-free kinds
  bool lambda_limit = false;
  std::optional<long> m;
  std::optional<long> r;
};

inline ordered_json triangle_to_json(const Triangle& t, const TriangleMeta& meta) {
  ordered_json j;
  j["kind"] = meta.kind;
  j["lambda"] = meta.lambda_limit ? ordered_json("0") : detail::optional_rational(meta.lambda);
  j["m"] = detail::optional_value(meta.m);
  j["r"] = detail::optional_value(meta.r);
  j["n_max"] = t.n_max();
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k <= n; ++k) row.push_back(t(n, k).to_string());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Triangle triangle_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("triangle json: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError("triangle json: missing rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("triangle json: row is not an array");
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (!v.is_string()) throw ParseError("triangle json: entries must be strings");
      r.push_back(Rational::parse(v.get<std::string>()));
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("triangle json: no rows");
  return Triangle(std::move(rows));
}

inline std::string render_triangle(const Triangle& t, const TriangleMeta& meta, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::kJson:
      os << triangle_to_json(t, meta).dump() << '\n';
      break;
    case Format::kCsv:
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) os << (k ? "," : "") << t(n, k).to_string();
        os << '\n';
      }
      break;
    case Format::kTex:
      os << "\\begin{array}{" << std::string(t.n_max() + 1, 'r') << "}\n";
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) os << (k ? " & " : "") << detail::tex_rational(t(n, k));
        os << " \\\\\n";
      }
      os << "\\end{array}\n";
      break;
    case Format::kTable: {
      std::size_t width = 1;
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) width = std::max(width, t(n, k).to_string().size());
      }
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) os << (k ? "  " : "") << detail::pad_left(t(n, k).to_string(), width);
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomials

struct PolyMeta {
  std::string family;
  std::size_t n = 0;
  std::optional<Rational> lambda;
  bool lambda_limit = false;
  std::optional<long> m;
  std::optional<long> k;
};

inline std::string tex_poly(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeff(static_cast<std::size_t>(d));
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (d == 0 || !mag.is_one()) out += detail::tex_rational(mag);
    if (d >= 1) out += (d == 0 || mag.is_one() ? "" : " ") + std::string("x");
    if (d >= 2) out += "^{" + std::to_string(d) + "}";
  }
  return out;
}

inline ordered_json poly_to_json(const PolyX& p, const PolyMeta& meta) {
  ordered_json j;
  j["family"] = meta.family;
  j["n"] = meta.n;
  j["lambda"] = meta.lambda_limit ? ordered_json("0") : detail::optional_rational(meta.lambda);
  j["m"] = detail::optional_value(meta.m);
  j["k"] = detail::optional_value(meta.k);
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  if (coeffs.empty()) coeffs.push_back("0");
  j["coeffs"] = std::move(coeffs);
  j["text"] = p.to_string();
  return j;
}

inline std::string render_poly(const PolyX& p, const PolyMeta& meta, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::kJson:
      os << poly_to_json(p, meta).dump() << '\n';
      break;
    case Format::kCsv: {
      os << "degree,coefficient\n";
      const auto& c = p.coeffs();
      if (c.empty()) os << "0,0\n";
      for (std::size_t d = 0; d < c.size(); ++d) os << d << ',' << c[d].to_string() << '\n';
      break;
    }
    case Format::kTex:
      os << "\\[ " << tex_poly(p) << " \\]\n";
      break;
    case Format::kTable:
      os << p.to_string() << '\n';
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Verification reports

inline ordered_json grid_point_to_json(const GridPoint& p) {
  ordered_json j;
  j["n"] = p.n;
  j["lambda"] = p.lambda_limit ? ordered_json("0") : detail::optional_rational(p.lambda);
  j["m"] = detail::optional_value(p.m);
  j["k"] = detail::optional_value(p.k);
  j["r"] = detail::optional_value(p.r);
  j["x"] = detail::optional_rational(p.x);
  return j;
}

inline ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["identity"] = to_string(r.identity);
  j["kind"] = to_string(r.kind);
  j["n_max"] = r.n_max;
  j["passed"] = r.passed();
  j["points"] = r.grid.size();
  j["failures"] = r.failures();
  j["lambda_degree_bound"] = r.lambda_degree_bound;
  j["distinct_lambda_samples"] = r.distinct_lambda_samples;
  j["certified_polynomial_in_lambda"] = r.certified_polynomial_in_lambda;
  j["max_relative_error"] = detail::optional_value(r.max_relative_error);
  if (r.witness) {
    ordered_json w;
    w["point"] = grid_point_to_json(r.witness->point);
    w["relation"] = r.witness->relation;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  ordered_json grid = ordered_json::array();
  for (const auto& p : r.grid) {
    ordered_json g = grid_point_to_json(p.point);
    g["pass"] = p.pass;
    if (p.relative_error) g["relative_error"] = *p.relative_error;
    grid.push_back(std::move(g));
  }
  j["grid"] = std::move(grid);
  return j;
}

inline std::string format_error(std::optional<double> e) {
  if (!e) return "-";
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << *e;
  return os.str();
}

inline std::string render_reports(const std::vector<VerificationReport>& reports, Format fmt, bool colour = false) {
  std::ostringstream os;
  switch (fmt) {
    case Format::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      os << "identity,kind,n_max,points,failures,passed,lambda_degree_bound,distinct_lambda_samples,certified,max_relative_error\n";
      for (const auto& r : reports) {
        os << to_string(r.identity) << ',' << to_string(r.kind) << ',' << r.n_max << ',' << r.grid.size() << ','
           << r.failures() << ',' << (r.passed() ? "true" : "false") << ',' << r.lambda_degree_bound << ','
           << r.distinct_lambda_samples << ',' << (r.certified_polynomial_in_lambda ? "true" : "false") << ','
           << (r.max_relative_error ? format_error(r.max_relative_error) : "") << '\n';
      }
      break;
    case Format::kTex:
      os << "\\begin{tabular}{lrrll}\n\\hline\nidentity & points & failures & status & certified \\\\\n\\hline\n";
      for (const auto& r : reports) {
        std::string tag = to_string(r.identity);
        std::string escaped;
        for (char c : tag) escaped += c == '_' ? std::string("\\_") : std::string(1, c);
        os << escaped << " & " << r.grid.size() << " & " << r.failures() << " & " << (r.passed() ? "pass" : "FAIL")
           << " & " << (r.certified_polynomial_in_lambda ? "yes" : "no") << " \\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
      break;
    case Format::kTable: {
      const std::string green = colour ? "\033[32m" : "";
      const std::string red = colour ? "\033[31m" : "";
      const std::string reset = colour ? "\033[0m" : "";
      std::size_t width = 8;
      for (const auto& r : reports) width = std::max(width, to_string(r.identity).size());
      os << detail::pad_right("identity", width) << "  status  points  fail  bound  samples  certified  max_rel_err\n";
      for (const auto& r : reports) {
        os << detail::pad_right(to_string(r.identity), width) << "  "
           << (r.passed() ? green + "pass  " + reset : red + "FAIL  " + reset) << "  "
           << detail::pad_left(std::to_string(r.grid.size()), 6) << "  "
           << detail::pad_left(std::to_string(r.failures()), 4) << "  "
           << detail::pad_left(std::to_string(r.lambda_degree_bound), 5) << "  "
           << detail::pad_left(std::to_string(r.distinct_lambda_samples), 7) << "  "
           << detail::pad_right(r.certified_polynomial_in_lambda ? "yes" : "no", 9) << "  "
           << format_error(r.max_relative_error) << '\n';
      }
      for (const auto& r : reports) {
        if (!r.witness) continue;
        os << '\n' << red << to_string(r.identity) << " witness" << reset << " at " << r.witness->point.to_string()
           << "\n  " << r.witness->relation << "\n  lhs: " << r.witness->lhs << "\n  rhs: " << r.witness->rhs << '\n';
      }
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Dobinski traces

struct DobinskiTrace {
  std::size_t n = 0;
  Rational lambda;
  Rational x;
  std::size_t terms = 0;
  std::vector<std::pair<std::size_t, double>> checkpoints;
  Rational reference_exact;
  double reference = 0;
  double relative_error = 0;
};

inline std::string render_dobinski(const DobinskiTrace& t, Format fmt) {
  std::ostringstream os;
  os.precision(17);
  switch (fmt) {
    case Format::kJson: {
      ordered_json j;
      j["n"] = t.n;
      j["lambda"] = t.lambda.to_string();
      j["x"] = t.x.to_string();
      j["K"] = t.terms;
      ordered_json cps = ordered_json::array();
      for (const auto& [k, s] : t.checkpoints) cps.push_back({{"k", k}, {"partial_sum", s}});
      j["checkpoints"] = std::move(cps);
      j["reference_exact"] = t.reference_exact.to_string();
      j["reference"] = t.reference;
      j["relative_error"] = t.relative_error;
      os << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "k,partial_sum\n";
      for (const auto& [k, s] : t.checkpoints) os << k << ',' << s << '\n';
      os << "reference," << t.reference << "\nrelative_error," << t.relative_error << '\n';
      break;
    case Format::kTex:
      os << "\\begin{tabular}{rr}\n$K$ & partial sum \\\\\n\\hline\n";
      for (const auto& [k, s] : t.checkpoints) os << k << " & " << s << " \\\\\n";
      os << "\\hline\nexact & $" << detail::tex_rational(t.reference_exact) << "$ \\\\\nrel.\\ error & "
         << t.relative_error << " \\\\\n\\end{tabular}\n";
      break;
    case Format::kTable:
      os << "       K  partial sum\n";
      for (const auto& [k, s] : t.checkpoints) os << detail::pad_left(std::to_string(k), 8) << "  " << s << '\n';
      os << "exact value     " << t.reference_exact.to_string() << " = " << t.reference << '\n';
      os << "relative error  " << t.relative_error << '\n';
      break;
  }
  return os.str();
}

}  // namespace lumbral::io

#endif  // LUMBRAL_IO_HPP
