// Command-line front end.  All mathematics lives in the library; this file
// only parses flags, dispatches and formats.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lumbral.hpp"
#include "lumbral/io.hpp"

namespace {

using namespace lumbral;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kNMaxCap = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string lambda_text;
  std::optional<long> m;
  std::optional<long> r;
  std::optional<long> k;
  std::size_t n_max = 8;
  std::size_t n = 0;
  std::string x_text = "1";
  std::size_t terms = 200;
  std::string format = "table";
  std::string out;
  std::uint64_t seed = 0;
  std::string lambda_samples;
  std::string m_values;
  std::string k_values;
  std::string r_values;
};

// "0" selects the classical limit.
std::optional<Lambda> parse_lambda(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Lambda::from_rational(Rational::parse(text));
}

Lambda require_lambda(const Config& c, const std::string& what) {
  auto l = parse_lambda(c.lambda_text);
  if (!l) throw UsageError(what + " requires --lambda");
  return *l;
}

long require_m(const Config& c, const std::string& what) {
  if (!c.m) throw UsageError(what + " requires --m");
  return *c.m;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(parse(item));
  }
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

void check_n_max(std::size_t n) {
  if (n > kNMaxCap) throw UsageError("n must not exceed " + std::to_string(kNMaxCap));
}

bool colour_enabled(const Config& c) {
  return c.out.empty() && ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + c.out + "'");
  f << text;
}

int cmd_triangle(const std::string& kind, const Config& c) {
  check_n_max(c.n_max);
  io::TriangleMeta meta{kind, std::nullopt, false, std::nullopt, std::nullopt};
  auto with_lambda = [&](const Lambda& l) {
    if (l.is_limit()) {
      meta.lambda_limit = true;
    } else {
      meta.lambda = l.value();
    }
  };
  std::optional<Triangle> t;
  if (kind == "s1") {
    t = stirling1(c.n_max);
  } else if (kind == "s2") {
    t = stirling2(c.n_max);
  } else if (kind == "s1deg" || kind == "s2deg") {
    const Lambda l = require_lambda(c, "triangle " + kind);
    with_lambda(l);
    t = kind == "s1deg" ? degenerate_stirling1(c.n_max, l) : degenerate_stirling2(c.n_max, l);
  } else if (kind == "whitney-deg") {
    const Lambda l = require_lambda(c, "triangle " + kind);
    with_lambda(l);
    meta.m = require_m(c, "triangle " + kind);
    t = degenerate_whitney2(c.n_max, *meta.m, l);
  } else if (kind == "whitney-r1" || kind == "whitney-r2") {
    meta.m = require_m(c, "triangle " + kind);
    meta.r = c.r.value_or(1);
    t = kind == "whitney-r1" ? r_whitney1(c.n_max, *meta.m, *meta.r) : r_whitney2(c.n_max, *meta.m, *meta.r);
  } else {
    throw UsageError("unknown triangle kind '" + kind + "' (s1, s2, s1deg, s2deg, whitney-deg, whitney-r1, whitney-r2)");
  }
  emit(c, io::render_triangle(*t, meta, io::parse_format(c.format)));
  return kExitOk;
}

int cmd_poly(const std::string& family, const Config& c) {
  check_n_max(c.n);
  static const std::vector<std::pair<std::string, Family>> names{
      {"bell", Family::kBellClassical},           {"bell-partial", Family::kBellPartialDeg},
      {"bell-full", Family::kBellFullyDeg},       {"dowling", Family::kDowlingClassical},
      {"dowling-deg", Family::kDowlingDeg},       {"dowling-full", Family::kDowlingFullyDeg},
      {"bernoulli-deg", Family::kBernoulliDeg},   {"bernoulli2-deg", Family::kBernoulli2Deg},
      {"polybell", Family::kPolyBellDeg},
  };
  std::optional<Family> tag;
  for (const auto& [name, f] : names) {
    if (name == family) tag = f;
  }
  if (!tag) {
    throw UsageError("unknown family '" + family +
                     "' (bell, bell-partial, bell-full, dowling, dowling-deg, dowling-full, bernoulli-deg, "
                     "bernoulli2-deg, polybell)");
  }
  FamilyId id{*tag, std::nullopt, std::nullopt, std::nullopt};
  io::PolyMeta meta{family, c.n, std::nullopt, false, std::nullopt, std::nullopt};
  if (FamilyId::needs_m(*tag)) id.m = meta.m = require_m(c, "poly " + family);
  if (FamilyId::needs_k(*tag)) {
    if (!c.k) throw UsageError("poly " + family + " requires --k");
    id.k = meta.k = *c.k;
  }
  if (FamilyId::needs_lambda(*tag)) {
    id.lambda = require_lambda(c, "poly " + family);
    if (id.lambda->is_limit()) {
      meta.lambda_limit = true;
    } else {
      meta.lambda = id.lambda->value();
    }
  }
  emit(c, io::render_poly(family_polynomial(id, c.n), meta, io::parse_format(c.format)));
  return kExitOk;
}

int cmd_verify(const std::string& which, const Config& c) {
  check_n_max(c.n_max);
  SuiteConfig suite;
  if (!c.lambda_samples.empty()) {
    suite.lambda_samples = parse_list<Rational>(c.lambda_samples, [](const std::string& s) { return Rational::parse(s); });
  } else if (!c.lambda_text.empty()) {
    suite.lambda_samples = std::vector<Rational>{Rational::parse(c.lambda_text)};
  }
  if (!c.m_values.empty()) {
    suite.m_values = parse_list<long>(c.m_values, parse_long);
  } else if (c.m) {
    suite.m_values = {*c.m};
  }
  if (!c.k_values.empty()) {
    suite.k_values = parse_list<long>(c.k_values, parse_long);
  } else if (c.k) {
    suite.k_values = {*c.k};
  }
  if (!c.r_values.empty()) {
    suite.options.r_values = parse_list<long>(c.r_values, parse_long);
  } else if (c.r) {
    suite.options.r_values = {*c.r};
  }
  suite.options.seed = c.seed;
  suite.options.dobinski_terms = c.terms;

  std::vector<VerificationReport> reports;
  if (which == "all") {
    reports = run_full_suite(c.n_max, suite);
  } else {
    reports.push_back(verify_with_config(parse_identity(which), c.n_max, suite));
  }
  emit(c, io::render_reports(reports, io::parse_format(c.format), colour_enabled(c)));
  return all_passed(reports) ? kExitOk : kExitFailure;
}

int cmd_dobinski(const Config& c) {
  check_n_max(c.n);
  const Lambda l = require_lambda(c, "dobinski");
  if (l.is_limit()) throw DomainError("dobinski: lambda must satisfy 0 < lambda < 1");
  if (c.terms == 0) throw UsageError("--K must be positive");
  const Rational x = Rational::parse(c.x_text);
  const auto sums = dobinski_partial_sums(c.n, l.value(), x, c.terms);
  io::DobinskiTrace trace;
  trace.n = c.n;
  trace.lambda = l.value();
  trace.x = x;
  trace.terms = c.terms;
  std::size_t last = 0;
  for (std::size_t i = 1; i <= 10; ++i) {
    const std::size_t k = std::max<std::size_t>(c.terms * i / 10, 1);
    if (k == last) continue;
    trace.checkpoints.emplace_back(k, sums[k]);
    last = k;
  }
  trace.reference_exact = fully_degenerate_bell(c.n, l)(x);
  trace.reference = trace.reference_exact.to_double();
  trace.relative_error = DobinskiResult{sums.back(), trace.reference}.relative_error();
  emit(c, io::render_dobinski(trace, io::parse_format(c.format)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-umbral calculus: degenerate Bell, Dowling and Bernoulli families"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--lambda", c.lambda_text, "lambda as p/q or a terminating decimal; 0 selects the classical limit");
  app.add_option("--m", c.m, "positive integer m (Dowling and Whitney families)");
  app.add_option("--n-max", c.n_max, "largest row / degree (at most 64)");
  app.add_option("--format", c.format, "json, csv, tex or table")->check(CLI::IsMember({"json", "csv", "tex", "table"}));
  app.add_option("--out", c.out, "write output to a file instead of stdout");
  app.add_option("--seed", c.seed, "seed for randomized inputs");

  std::string kind;
  auto* tri = app.add_subcommand("triangle", "emit a number triangle");
  tri->add_option("kind", kind, "s1, s2, s1deg, s2deg, whitney-deg, whitney-r1, whitney-r2")->required();
  tri->add_option("--r", c.r, "r for r-Whitney triangles (default 1)");

  std::string family;
  auto* poly = app.add_subcommand("poly", "emit one polynomial of a family");
  poly->add_option("family", family, "bell, bell-partial, bell-full, dowling, dowling-deg, dowling-full, "
                                     "bernoulli-deg, bernoulli2-deg, polybell")
      ->required();
  poly->add_option("--n", c.n, "degree")->required();
  poly->add_option("--k", c.k, "poly-Bell order");

  std::string identity;
  auto* ver = app.add_subcommand("verify", "check identities exactly over a grid");
  ver->add_option("identity", identity, "identity tag (e.g. lemma1, thm11, eq56) or 'all'")->required();
  ver->add_option("--lambda-samples", c.lambda_samples, "comma-separated lambda samples");
  ver->add_option("--m-values", c.m_values, "comma-separated m values (default 1,2,3)");
  ver->add_option("--k-values", c.k_values, "comma-separated poly-Bell orders (default 0,1,2,3)");
  ver->add_option("--r-values", c.r_values, "comma-separated r values (default 0,1,2)");
  ver->add_option("--k", c.k, "single poly-Bell order");
  ver->add_option("--r", c.r, "single r value");
  ver->add_option("--K", c.terms, "terms of the Dobinski series (default 400)");

  auto* dob = app.add_subcommand("dobinski", "partial sums of the Dobinski-like series");
  dob->add_option("--n", c.n, "degree")->required();
  dob->add_option("--x", c.x_text, "evaluation point (default 1)");
  dob->add_option("--K", c.terms, "number of terms (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (ver->parsed() && ver->count("--K") == 0) c.terms = 400;

  try {
    if (tri->parsed()) return cmd_triangle(kind, c);
    if (poly->parsed()) return cmd_poly(family, c);
    if (ver->parsed()) return cmd_verify(identity, c);
    if (dob->parsed()) return cmd_dobinski(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lumbral::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
