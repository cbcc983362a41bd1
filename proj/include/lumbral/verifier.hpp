#ifndef LUMBRAL_VERIFIER_HPP
#define LUMBRAL_VERIFIER_HPP

// Catalogue of identities, each checked exactly over a grid of (n, lambda, m, k).
// Identities whose two sides are polynomials in lambda are certified by
// sampling: a nonzero polynomial of degree <= D has at most D roots, so D + 1
// distinct passing samples prove it.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lumbral/closed_forms.hpp"
#include "lumbral/errors.hpp"
#include "lumbral/families.hpp"
#include "lumbral/kernels.hpp"
#include "lumbral/partitions.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"
#include "lumbral/series.hpp"
#include "lumbral/stirling_whitney.hpp"
#include "lumbral/triangle.hpp"
#include "lumbral/umbral.hpp"

namespace lumbral {

enum class IdentityId {
  kEq1A2AOrtho,
  kEq3A4AOrtho,
  kLemma1,
  kThm2Dobinski,
  kThm3Gf,
  kEq11Eq12Dowling,
  kEq25Addition,
  kThm4Roundtrip,
  kThm5,
  kThm6,
  kThm7,
  kThm8,
  kThm9Roundtrip,
  kThm10,
  kFallingInDowling,
  kThm11,
  kEq56Closing,
  kStirlingOrtho,
  kDegStirlingOrtho,
  kPolyBellK1IsBernoulli,
  kLimitLambda0Suite,
  kWhitneyOracle,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  std::string_view statement;
};

inline constexpr std::array<IdentityInfo, 22> kIdentityCatalogue{{
    {IdentityId::kEq1A2AOrtho, "EQ_1A_2A_ORTHO", "sum_j V_m(n,j) W_m(j,k) = delta_{n,k} and the reverse product"},
    {IdentityId::kEq3A4AOrtho, "EQ_3A_4A_ORTHO", "r-Whitney numbers of both kinds are inverse triangles"},
    {IdentityId::kLemma1, "LEMMA1", "phi_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) (x)_{k,lambda} matches its generating function"},
    {IdentityId::kThm2Dobinski, "THM2_DOBINSKI", "Dobinski-like series for phi_{n,lambda}(x)"},
    {IdentityId::kThm3Gf, "THM3_GF", "generating function of d_{m,lambda}(n,x) against its Whitney sum"},
    {IdentityId::kEq11Eq12Dowling, "EQ11_EQ12_DOWLING", "D_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) x^k matches its generating function"},
    {IdentityId::kEq25Addition, "EQ25_ADDITION", "phi_{n,lambda}(x+y) = sum_l C(n,l) phi_{l,lambda}(x) phi_{n-l,lambda}(y)"},
    {IdentityId::kThm4Roundtrip, "THM4_ROUNDTRIP", "p(x) = sum_k (1/k!) <(log_lambda(1+t))^k | p> phi_{k,lambda}(x)"},
    {IdentityId::kThm5, "THM5", "beta_{n,lambda}(x) in the phi basis"},
    {IdentityId::kThm6, "THM6", "(x)_{n,lambda} = sum_k S_{1,lambda}(n,k) phi_{k,lambda}(x)"},
    {IdentityId::kThm7, "THM7", "poly-Bell B^{(k)}_{n,lambda}(x) in the phi basis"},
    {IdentityId::kThm8, "THM8", "phi_{n,lambda}(x) in the b_{n,lambda} basis"},
    {IdentityId::kThm9Roundtrip, "THM9_ROUNDTRIP", "p(x) expanded in the d_{m,lambda} basis and reassembled"},
    {IdentityId::kThm10, "THM10", "beta_{n,lambda}(x) in the d_{m,lambda} basis"},
    {IdentityId::kFallingInDowling, "FALLING_IN_DOWLING", "(x)_{n,lambda} in the d_{m,lambda} basis"},
    {IdentityId::kThm11, "THM11", "d_{m,lambda}(n,x) = sum_k (sum_j S_{1,lambda}(j,k) W_{m,lambda}(n,j)) phi_{k,lambda}(x)"},
    {IdentityId::kEq56Closing, "EQ56_CLOSING", "phi_{n,lambda/m}(x/m) = m^{-n} sum_k C(n,k) (-1)_{n-k,lambda} d_{m,lambda}(k,x)"},
    {IdentityId::kStirlingOrtho, "STIRLING_ORTHO", "classical Stirling numbers of both kinds are inverse triangles"},
    {IdentityId::kDegStirlingOrtho, "DEG_STIRLING_ORTHO", "sum_j S_{1,lambda}(n,j) S_{2,lambda}(j,k) = delta_{n,k} and the reverse product"},
    {IdentityId::kPolyBellK1IsBernoulli, "POLYBELL_K1_IS_BERNOULLI", "B^{(1)}_{n,lambda}(x) = beta_{n,lambda}(x)"},
    {IdentityId::kLimitLambda0Suite, "LIMIT_LAMBDA0_SUITE", "lambda -> 0 reproduces the classical families"},
    {IdentityId::kWhitneyOracle, "WHITNEY_ORACLE", "coloured set-partition counts equal r-Whitney numbers of the second kind"},
}};

inline const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : kIdentityCatalogue) {
    if (info.id == id) return info;
  }
  throw ParameterError("unknown identity");
}

inline std::string to_string(IdentityId id) { return std::string(identity_info(id).tag); }

// Accepts the tag in any case, with '-' for '_', plus short aliases (thm2, eq25, eq56, ...).
inline IdentityId parse_identity(std::string_view name) {
  std::string norm;
  for (char c : name) norm += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& info : kIdentityCatalogue) {
    if (info.tag == norm) return info.id;
  }
  static const std::array<std::pair<std::string_view, IdentityId>, 9> aliases{{
      {"THM2", IdentityId::kThm2Dobinski},
      {"THM3", IdentityId::kThm3Gf},
      {"THM4", IdentityId::kThm4Roundtrip},
      {"THM9", IdentityId::kThm9Roundtrip},
      {"EQ25", IdentityId::kEq25Addition},
      {"EQ56", IdentityId::kEq56Closing},
      {"LIMIT", IdentityId::kLimitLambda0Suite},
      {"EQ11", IdentityId::kEq11Eq12Dowling},
      {"EQ12", IdentityId::kEq11Eq12Dowling},
  }};
  for (const auto& [alias, id] : aliases) {
    if (alias == norm) return id;
  }
  throw ParameterError("unknown identity '" + std::string(name) + "'");
}

enum class CheckKind {
  kExactInLambda,  // polynomial in lambda; certified by sampling
  kLambdaFree,     // no lambda at all
  kLimitPoint,     // single evaluation at lambda = 0
  kNumerical,      // floating point with a tolerance
};

inline CheckKind check_kind(IdentityId id) {
  switch (id) {
    case IdentityId::kEq1A2AOrtho:
    case IdentityId::kEq3A4AOrtho:
    case IdentityId::kStirlingOrtho:
    case IdentityId::kWhitneyOracle:
      return CheckKind::kLambdaFree;
    case IdentityId::kLimitLambda0Suite:
      return CheckKind::kLimitPoint;
    case IdentityId::kThm2Dobinski:
      return CheckKind::kNumerical;
    default:
      return CheckKind::kExactInLambda;
  }
}

inline std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kExactInLambda:
      return "exact";
    case CheckKind::kLambdaFree:
      return "exact-lambda-free";
    case CheckKind::kLimitPoint:
      return "exact-limit";
    case CheckKind::kNumerical:
      return "numerical";
  }
  return "?";
}

// Every factor (S_{1,lambda}, S_{2,lambda}, W_{m,lambda}, beta, (x)_{.,lambda})
// has lambda-degree <= n and no product in the catalogue has more than four of
// them, so 4n is safe.  Identities with nothing to certify get 0.
inline std::size_t lambda_degree_bound(IdentityId id, std::size_t n, long /*m*/ = 1) {
  return check_kind(id) == CheckKind::kExactInLambda ? 4 * n : 0;
}

struct GridPoint {
  std::size_t n = 0;
  std::optional<Rational> lambda;
  bool lambda_limit = false;
  std::optional<long> m;
  std::optional<long> k;
  std::optional<long> r;
  std::optional<Rational> x;

  std::string to_string() const {
    std::ostringstream os;
    os << "n=" << n;
    if (lambda_limit) os << " lambda->0";
    if (lambda) os << " lambda=" << lambda->to_string();
    if (m) os << " m=" << *m;
    if (k) os << " k=" << *k;
    if (r) os << " r=" << *r;
    if (x) os << " x=" << x->to_string();
    return os.str();
  }
};

struct PointResult {
  GridPoint point;
  bool pass = true;
  std::optional<double> relative_error;
};

struct Witness {
  GridPoint point;
  std::string relation;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  IdentityId identity{};
  CheckKind kind{};
  std::size_t n_max = 0;
  std::vector<PointResult> grid;
  std::optional<Witness> witness;
  std::size_t lambda_degree_bound = 0;
  std::size_t distinct_lambda_samples = 0;
  bool certified_polynomial_in_lambda = false;
  std::optional<double> max_relative_error;

  bool passed() const {
    return std::all_of(grid.begin(), grid.end(), [](const PointResult& p) { return p.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(grid.begin(), grid.end(), [](const PointResult& p) { return !p.pass; }));
  }
};

// Which triangle a tamper hook is being offered.
enum class TriangleRole { kStirling1Deg, kStirling2Deg, kWhitney2Deg };

using TriangleTamper = std::function<Triangle(TriangleRole, const Triangle&)>;

struct VerifyOptions {
  std::vector<long> r_values{0, 1, 2};
  std::size_t dobinski_terms = 400;
  double dobinski_tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  TriangleTamper tamper;  // test hook; corrupts a triangle before it is used
};

// Distinct nonzero non-integer rationals, small heights first.
inline std::vector<Rational> default_lambda_samples(std::size_t count) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  auto add = [&](const Rational& v) {
    if (out.size() < count && !v.is_zero() && !v.is_integer() && seen.insert(v).second) out.push_back(v);
  };
  for (const auto& v : {Rational(1, 2), Rational(-1, 3), Rational(2, 5), Rational(3, 4), Rational(1, 7),
                        Rational(-1, 7), Rational(1, 3), Rational(5, 3)}) {
    add(v);
  }
  for (long q = 2; out.size() < count; ++q) {
    for (long p = 1; p < 2 * q && out.size() < count; ++p) {
      add(Rational(p, q));
      add(Rational(-p, q));
    }
  }
  return out;
}

inline std::size_t default_lambda_sample_count(std::size_t n_max) { return std::max<std::size_t>(4 * n_max + 1, 4); }

namespace detail {

inline std::string render(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}
inline std::string render(const PolyX& p) { return p.to_string(); }
inline std::string render(const Rational& r) { return r.to_string(); }

// Drops trailing zeros so rows of different lengths compare by value.
inline std::vector<Rational> trimmed(std::vector<Rational> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

// Coefficients of sum_{i,j} c[i][j] x^i y^j.
struct Bivariate {
  std::vector<std::vector<Rational>> c;

  void add(std::size_t i, std::size_t j, const Rational& v) {
    if (v.is_zero()) return;
    if (c.size() <= i) c.resize(i + 1);
    if (c[i].size() <= j) c[i].resize(j + 1);
    c[i][j] += v;
  }
  Bivariate normalised() const {
    Bivariate out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c[i].size(); ++j) out.add(i, j, c[i][j]);
    }
    for (auto& row : out.c) row = trimmed(row);
    while (!out.c.empty() && out.c.back().empty()) out.c.pop_back();
    return out;
  }
  bool operator==(const Bivariate& o) const { return normalised().c == o.normalised().c; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        if (c[i][j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c[i][j].to_string();
        if (i) s += "*x^" + std::to_string(i);
        if (j) s += "*y^" + std::to_string(j);
      }
    }
    return s.empty() ? "0" : s;
  }
};
inline std::string render(const Bivariate& b) { return b.to_string(); }

// Collects the sub-checks of one grid point; the first mismatch becomes the witness.
class PointCheck {
 public:
  explicit PointCheck(GridPoint point) : point_(std::move(point)) {}

  template <typename T>
  void expect_eq(std::string relation, const T& lhs, const T& rhs) {
    if (lhs == rhs) return;
    fail(std::move(relation), render(lhs), render(rhs));
  }
  void expect_rows(std::string relation, const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
    expect_eq(std::move(relation), trimmed(lhs), trimmed(rhs));
  }
  void fail(std::string relation, std::string lhs, std::string rhs) {
    if (!witness_) witness_ = Witness{point_, std::move(relation), std::move(lhs), std::move(rhs)};
  }
  void set_relative_error(double e) { relative_error_ = e; }

  const GridPoint& point() const { return point_; }
  const std::optional<Witness>& witness() const { return witness_; }
  std::optional<double> relative_error() const { return relative_error_; }

 private:
  GridPoint point_;
  std::optional<Witness> witness_;
  std::optional<double> relative_error_;
};

class Recorder {
 public:
  void add(const PointCheck& c) {
    report_.grid.push_back({c.point(), !c.witness().has_value(), c.relative_error()});
    if (c.witness() && !report_.witness) report_.witness = c.witness();
    if (c.relative_error()) {
      report_.max_relative_error = std::max(report_.max_relative_error.value_or(0.0), *c.relative_error());
    }
  }
  VerificationReport& report() { return report_; }

 private:
  VerificationReport report_;
};

struct Grid {
  std::size_t n_max;
  std::vector<Rational> lambdas;
  std::vector<long> ms;
  std::vector<long> ks;
  const VerifyOptions& opt;

  // a Sheffer pair needs order cap >= 1 even when n_max = 0
  std::size_t pair_cap() const { return std::max<std::size_t>(n_max, 1); }

  Triangle tampered(TriangleRole role, Triangle t) const { return opt.tamper ? opt.tamper(role, t) : t; }
  Triangle s1(const Lambda& l) const { return tampered(TriangleRole::kStirling1Deg, degenerate_stirling1(n_max, l)); }
  Triangle s2(const Lambda& l) const { return tampered(TriangleRole::kStirling2Deg, degenerate_stirling2(n_max, l)); }
  Triangle w(long m, const Lambda& l) const {
    return tampered(TriangleRole::kWhitney2Deg, degenerate_whitney2(n_max, m, l));
  }
};

inline GridPoint at(std::size_t n, const Rational& lambda, std::optional<long> m = {}, std::optional<long> k = {}) {
  GridPoint p;
  p.n = n;
  p.lambda = lambda;
  p.m = m;
  p.k = k;
  return p;
}

inline std::vector<Rational> identity_row(std::size_t n) {
  std::vector<Rational> row(n + 1);
  row[n] = Rational(1);
  return row;
}

inline void check_inverse_pair(Recorder& rec, const Triangle& a, const Triangle& b, const GridPoint& base,
                               const std::string& name) {
  const Triangle ab = triangle_product(a, b);
  const Triangle ba = triangle_product(b, a);
  for (std::size_t n = 0; n <= a.n_max(); ++n) {
    GridPoint p = base;
    p.n = n;
    PointCheck c(p);
    c.expect_rows(name + " row", ab.row(n), identity_row(n));
    c.expect_rows(name + " reversed row", ba.row(n), identity_row(n));
    rec.add(c);
  }
}

// Seeded random polynomial of degree n, the same for every lambda so that the
// sampling argument applies to a fixed identity.
inline PolyX random_poly(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> c(n + 1);
  for (auto& v : c) v = Rational(num(rng), den(rng));
  if (c[n].is_zero()) c[n] = Rational(1);
  return PolyX(std::move(c));
}

inline std::vector<std::pair<std::string, PolyX>> roundtrip_inputs(std::size_t n, const Rational& lambda,
                                                                   std::uint64_t seed) {
  return {{"(x)_{n,lambda}", lambda_falling(n, lambda)},
          {"x^n", PolyX::monomial(Rational(1), n)},
          {"random", random_poly(n, seed)}};
}

// ---------------------------------------------------------------------------
// Individual identities

inline void run_stirling_ortho(const Grid& g, Recorder& rec) {
  check_inverse_pair(rec, stirling1(g.n_max), stirling2(g.n_max), GridPoint{}, "S1 * S2");
}

inline void run_deg_stirling_ortho(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    check_inverse_pair(rec, g.s1(l), g.s2(l), at(0, lv), "S1_lambda * S2_lambda");
  }
}

inline void run_eq1a2a(const Grid& g, Recorder& rec) {
  for (long m : g.ms) {
    GridPoint base;
    base.m = m;
    check_inverse_pair(rec, whitney1(g.n_max, m), whitney2(g.n_max, m), base, "V_m * W_m");
  }
}

inline void run_eq3a4a(const Grid& g, Recorder& rec) {
  for (long m : g.ms) {
    for (long r : g.opt.r_values) {
      GridPoint base;
      base.m = m;
      base.r = r;
      check_inverse_pair(rec, r_whitney1(g.n_max, m, r), r_whitney2(g.n_max, m, r), base, "V^(r)_m * W^(r)_m");
    }
  }
}

inline void run_whitney_oracle(const Grid& g, Recorder& rec) {
  for (long m : g.ms) {
    for (long r : g.opt.r_values) {
      const Triangle w = r_whitney2(g.n_max, m, r);
      for (std::size_t n = 0; n <= g.n_max && n + static_cast<std::size_t>(r) <= g.opt.enumeration_cap; ++n) {
        GridPoint p;
        p.n = n;
        p.m = m;
        p.r = r;
        PointCheck c(p);
        std::vector<Rational> counted;
        for (const auto& v : colored_partition_row(n, m, static_cast<std::size_t>(r), g.opt.enumeration_cap)) {
          counted.emplace_back(mpz_class(v));
        }
        c.expect_rows("coloured partitions vs W^(r)_m", counted, w.row(n));
        if (m == 1 && r == 1) {
          // W^{(1)}_1(n,k) = S2(n+1,k+1)
          const Triangle s2 = stirling2(n + 1);
          std::vector<Rational> shifted;
          for (std::size_t k = 0; k <= n; ++k) shifted.push_back(s2(n + 1, k + 1));
          c.expect_rows("W^(1)_1(n,k) vs S2(n+1,k+1)", w.row(n), shifted);
        }
        rec.add(c);
      }
    }
  }
}

inline void run_lemma1(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto by_sum = fully_degenerate_bell_from(g.s2(l), l);
    const auto by_gf = fully_degenerate_bell_gf(g.n_max, l).coeffs();
    const auto by_engine = sheffer_generate(bell_pair(l, g.pair_cap()), g.n_max).polys;
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      PointCheck c(at(n, lv));
      c.expect_eq("sum S2_lambda (x)_lambda vs generating function", by_sum[n], by_gf[n]);
      c.expect_eq("generating function vs Sheffer engine", by_gf[n], by_engine[n]);
      rec.add(c);
    }
  }
}

inline void run_thm3(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    for (long m : g.ms) {
      const auto by_sum = fully_degenerate_dowling_from(g.w(m, l), l);
      const auto by_gf = fully_degenerate_dowling_gf(g.n_max, m, l).coeffs();
      const auto by_engine = sheffer_generate(dowling_pair(m, l, g.pair_cap()), g.n_max).polys;
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        c.expect_eq("sum W_lambda (x)_lambda vs generating function", by_sum[n], by_gf[n]);
        c.expect_eq("generating function vs Sheffer engine", by_gf[n], by_engine[n]);
        rec.add(c);
      }
    }
  }
}

inline void run_eq11_eq12(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    for (long m : g.ms) {
      const auto by_sum = combine_rows(g.w(m, l), monomials(g.n_max));
      const auto by_gf = degenerate_dowling_gf(g.n_max, m, l).coeffs();
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        c.expect_eq("sum W_lambda x^k vs generating function", by_sum[n], by_gf[n]);
        rec.add(c);
      }
    }
  }
}

inline Bivariate shifted_sum(const PolyX& p) {  // p(x + y)
  Bivariate out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.add(j, i - j, c[i] * Rational::binomial(i, j));
  }
  return out;
}

inline void run_eq25(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      Bivariate rhs;
      for (std::size_t j = 0; j <= n; ++j) {
        const Rational b = Rational::binomial(n, j);
        const auto& px = phi[j].coeffs();
        const auto& py = phi[n - j].coeffs();
        for (std::size_t a = 0; a < px.size(); ++a) {
          for (std::size_t c = 0; c < py.size(); ++c) rhs.add(a, c, b * px[a] * py[c]);
        }
      }
      PointCheck c(at(n, lv));
      c.expect_eq("phi(x+y) vs binomial convolution", shifted_sum(phi[n]), rhs);
      rec.add(c);
    }
  }
}

inline void run_roundtrip(const Grid& g, Recorder& rec, bool dowling) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const std::vector<std::optional<long>> ms = dowling ? std::vector<std::optional<long>>(g.ms.begin(), g.ms.end())
                                                        : std::vector<std::optional<long>>{std::nullopt};
    for (const auto& m : ms) {
      const ShefferPair pair = dowling ? dowling_pair(*m, l, g.pair_cap()) : bell_pair(l, g.pair_cap());
      const auto basis = dowling ? fully_degenerate_dowling_table(g.n_max, *m, l) : fully_degenerate_bell_table(g.n_max, l);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        for (const auto& [name, p] : roundtrip_inputs(n, lv, g.opt.seed)) {
          c.expect_eq("expand then reassemble " + name, reconstruct(expand_in_basis(p, pair), basis), p);
        }
        rec.add(c);
      }
    }
  }
}

// Shared shape: closed-form coefficients C, target basis r, source polynomial s.
// Checks s = sum_k C_k r_k and that the engine's connection coefficients are C.
inline void expect_expansion(PointCheck& c, const std::vector<Rational>& closed, const std::vector<PolyX>& basis,
                             const PolyX& source, const std::vector<Rational>& engine) {
  c.expect_eq("closed-form expansion vs polynomial", reconstruct(closed, basis), source);
  c.expect_rows("closed-form coefficients vs umbral engine", closed, engine);
}

inline void run_thm5(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const Series beta = degenerate_bernoulli_numbers(g.n_max, l);
    const auto beta_polys = degenerate_bernoulli_table(g.n_max, l);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    const Triangle s1 = g.s1(l);
    const Triangle engine = connection_coefficients(bernoulli_pair(l, g.pair_cap()), bell_pair(l, g.pair_cap()), g.n_max);
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      PointCheck c(at(n, lv));
      expect_expansion(c, closed_form::bernoulli_in_bell(n, beta, s1), phi, beta_polys[n], engine.row(n));
      rec.add(c);
    }
  }
}

inline void run_thm6(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    const auto fallings = lambda_falling_table(g.n_max, lv);
    const Triangle s1 = g.s1(l);
    const Triangle engine = connection_coefficients(falling_pair(l, g.pair_cap()), bell_pair(l, g.pair_cap()), g.n_max);
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      PointCheck c(at(n, lv));
      expect_expansion(c, closed_form::falling_in_bell(n, s1), phi, fallings[n], engine.row(n));
      rec.add(c);
    }
  }
}

inline void run_thm7(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    const Triangle s1 = g.s1(l);
    for (long k : g.ks) {
      const Series numbers = degenerate_poly_bernoulli_numbers(g.n_max, k, l);
      const auto polys = degenerate_poly_bell_table(g.n_max, k, l);
      const Triangle engine = connection_coefficients(poly_bell_pair(k, l, g.pair_cap()), bell_pair(l, g.pair_cap()), g.n_max);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, {}, k));
        expect_expansion(c, closed_form::poly_bell_in_bell(n, numbers, s1), phi, polys[n], engine.row(n));
        rec.add(c);
      }
    }
  }
}

inline void run_thm8(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const Series beta = degenerate_bernoulli_numbers(g.n_max, l);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    const auto b2 = degenerate_bernoulli2_table(g.n_max, l);
    const Triangle s2 = g.s2(l);
    const Triangle engine = connection_coefficients(bell_pair(l, g.pair_cap()), bernoulli2_pair(l, g.pair_cap()), g.n_max);
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      PointCheck c(at(n, lv));
      expect_expansion(c, closed_form::bell_in_bernoulli2(n, beta, s2, phi, lv), b2, phi[n], engine.row(n));
      rec.add(c);
    }
  }
}

inline void run_thm10(const Grid& g, Recorder& rec) {
  const Triangle s1_classical = stirling1(g.n_max);
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const Series beta = degenerate_bernoulli_numbers(g.n_max, l);
    const auto beta_polys = degenerate_bernoulli_table(g.n_max, l);
    for (long m : g.ms) {
      const Triangle s1_scaled = g.s1(l.scaled(Rational(1, m)));
      const auto d = fully_degenerate_dowling_table(g.n_max, m, l);
      const Triangle engine = connection_coefficients(bernoulli_pair(l, g.pair_cap()), dowling_pair(m, l, g.pair_cap()), g.n_max);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        expect_expansion(c, closed_form::bernoulli_in_dowling(n, m, beta, s1_scaled, s1_classical), d, beta_polys[n],
                         engine.row(n));
        rec.add(c);
      }
    }
  }
}

inline void run_falling_in_dowling(const Grid& g, Recorder& rec) {
  const Triangle s1_classical = stirling1(g.n_max);
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto fallings = lambda_falling_table(g.n_max, lv);
    for (long m : g.ms) {
      const Triangle s1_scaled = g.s1(l.scaled(Rational(1, m)));
      const auto d = fully_degenerate_dowling_table(g.n_max, m, l);
      const Triangle engine = connection_coefficients(falling_pair(l, g.pair_cap()), dowling_pair(m, l, g.pair_cap()), g.n_max);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        expect_expansion(c, closed_form::falling_in_dowling(n, m, s1_scaled, s1_classical), d, fallings[n],
                         engine.row(n));
        rec.add(c);
      }
    }
  }
}

inline void run_thm11(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    const Triangle s1 = g.s1(l);
    for (long m : g.ms) {
      const auto d = fully_degenerate_dowling_table(g.n_max, m, l);
      const Triangle w = g.w(m, l);
      const Triangle engine = connection_coefficients(dowling_pair(m, l, g.pair_cap()), bell_pair(l, g.pair_cap()), g.n_max);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        expect_expansion(c, closed_form::dowling_in_bell(n, s1, w), phi, d[n], engine.row(n));
        rec.add(c);
      }
    }
  }
}

inline void run_eq56(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    for (long m : g.ms) {
      const Rational mr(m);
      const auto phi_scaled = fully_degenerate_bell_table(g.n_max, l.scaled(mr.inverse()));
      const auto d = fully_degenerate_dowling_table(g.n_max, m, l);
      const ShefferPair scaled = scaled_bell_pair(m, l, g.pair_cap());
      const auto engine_polys = sheffer_generate(scaled, g.n_max).polys;
      const Triangle engine = connection_coefficients(scaled, dowling_pair(m, l, g.pair_cap()), g.n_max);
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        PointCheck c(at(n, lv, m));
        const PolyX lhs = phi_scaled[n].substitute_affine(mr.inverse(), Rational(0)) * mr.pow(static_cast<long>(n));
        expect_expansion(c, closed_form::scaled_bell_in_dowling(n, lv), d, lhs, engine.row(n));
        c.expect_eq("m^n phi_{n,lambda/m}(x/m) vs Sheffer engine", lhs, engine_polys[n]);
        rec.add(c);
      }
    }
  }
}

inline void run_polybell_k1(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    const Lambda l(lv);
    const auto poly_bell = degenerate_poly_bell_table(g.n_max, 1, l);
    const auto beta = degenerate_bernoulli_table(g.n_max, l);
    for (std::size_t n = 0; n <= g.n_max; ++n) {
      PointCheck c(at(n, lv, {}, 1));
      c.expect_eq("B^(1)_lambda vs beta_lambda", poly_bell[n], beta[n]);
      rec.add(c);
    }
  }
}

// Classical Bernoulli numbers from sum_{j<=n} C(n+1,j) B_j = 0.
inline std::vector<Rational> classical_bernoulli_numbers(std::size_t n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) acc += Rational::binomial(n + 1, j) * b[j];
    b[n] = -acc / Rational(static_cast<long>(n + 1));
  }
  return b;
}

// Bernoulli numbers of the second kind from sum_j C(n,j) b_{n-j} (-1)^j j!/(j+1) = delta_{n,0}.
inline std::vector<Rational> classical_bernoulli2_numbers(std::size_t n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) {
      acc += Rational::binomial(n, j) * b[n - j] * (j % 2 ? Rational(-1) : Rational(1)) * Rational::factorial(j) /
             Rational(static_cast<long>(j + 1));
    }
    b[n] = -acc;
  }
  return b;
}

// sum_j C(n,j) a_{n-j} basis[j].
inline PolyX binomial_transform(std::size_t n, const std::vector<Rational>& a, const std::vector<PolyX>& basis) {
  PolyX out;
  for (std::size_t j = 0; j <= n; ++j) out += basis[j] * (Rational::binomial(n, j) * a[n - j]);
  return out;
}

inline void run_limit_suite(const Grid& g, Recorder& rec) {
  const Lambda zero = Lambda::classical_limit();
  const std::size_t n_max = g.n_max;
  const Triangle s1 = stirling1(n_max);
  const Triangle s2 = stirling2(n_max);
  const Triangle s1_limit = degenerate_stirling1(n_max, zero);
  const Triangle s2_limit = degenerate_stirling2(n_max, zero);
  const auto phi = fully_degenerate_bell_table(n_max, zero);
  const auto bel = partial_degenerate_bell_table(n_max, zero);
  const auto beta = degenerate_bernoulli_table(n_max, zero);
  const auto b2 = degenerate_bernoulli2_table(n_max, zero);
  const auto bern = classical_bernoulli_numbers(n_max);
  const auto bern2 = classical_bernoulli2_numbers(n_max);
  const auto mono = monomials(n_max);
  const auto fallings = lambda_falling_table(n_max, Rational(1));
  const auto bell_numbers_from_partitions = [&](std::size_t n) {
    std::size_t count = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>&) { ++count; });
    return Rational(static_cast<long>(count));
  };

  std::vector<std::pair<long, std::vector<PolyX>>> dowling_limit;
  std::vector<std::pair<long, Triangle>> whitney_limit;
  for (long m : g.ms) {
    dowling_limit.emplace_back(m, fully_degenerate_dowling_table(n_max, m, zero));
    whitney_limit.emplace_back(m, degenerate_whitney2(n_max, m, zero));
  }
  std::vector<std::pair<long, std::vector<PolyX>>> poly_bell_limit;
  std::vector<std::pair<long, Series>> poly_bernoulli_limit;
  for (long k : g.ks) {
    poly_bell_limit.emplace_back(k, degenerate_poly_bell_table(n_max, k, zero));
    poly_bernoulli_limit.emplace_back(k, degenerate_poly_bernoulli_numbers(n_max, k, zero));
  }
  const auto bell_plus_one = fully_degenerate_bell_table(n_max + 1, zero);

  for (std::size_t n = 0; n <= n_max; ++n) {
    GridPoint p;
    p.n = n;
    p.lambda_limit = true;
    PointCheck c(p);
    c.expect_rows("S1_0 vs S1", s1_limit.row(n), s1.row(n));
    c.expect_rows("S2_0 vs S2", s2_limit.row(n), s2.row(n));
    c.expect_eq("phi_{n,0} vs Bell polynomial", phi[n], bell_polynomial(n));
    c.expect_eq("Bel_{n,0} vs Bell polynomial", bel[n], bell_polynomial(n));
    if (n <= g.opt.enumeration_cap) {
      c.expect_eq("phi_{n,0}(1) vs set-partition count", phi[n](Rational(1)), bell_numbers_from_partitions(n));
    }
    for (const auto& [m, w] : whitney_limit) {
      c.expect_rows("W_{m,0} vs W_m (m=" + std::to_string(m) + ")", w.row(n), whitney2(n, m).row(n));
    }
    for (const auto& [m, d] : dowling_limit) {
      c.expect_eq("d_{m,0} vs D_m (m=" + std::to_string(m) + ")", d[n], dowling_polynomial(n, m));
      if (m == 1) c.expect_eq("D_1(n,1) vs Bell(n+1)", d[n](Rational(1)), bell_plus_one[n + 1](Rational(1)));
    }
    c.expect_eq("beta_{n,0} vs classical Bernoulli polynomial", beta[n], binomial_transform(n, bern, mono));
    c.expect_eq("b_{n,0} vs second-kind recursion", b2[n], binomial_transform(n, bern2, fallings));
    for (std::size_t i = 0; i < poly_bell_limit.size(); ++i) {
      const long k = poly_bell_limit[i].first;
      const Series& numbers = poly_bernoulli_limit[i].second;
      c.expect_eq("B^(k)_{n,0} is Appell (k=" + std::to_string(k) + ")", poly_bell_limit[i].second[n],
                  binomial_transform(n, numbers.coeffs(), mono));
      if (k == 1) c.expect_eq("B^(1)_{n,0} vs classical Bernoulli", poly_bell_limit[i].second[n], beta[n]);
    }
    rec.add(c);
  }
}

inline const std::vector<Rational>& default_dobinski_lambdas() {
  static const std::vector<Rational> v{Rational(1, 10), Rational(1, 7), Rational(1, 3), Rational(2, 5)};
  return v;
}

inline void run_thm2(const Grid& g, Recorder& rec) {
  for (const auto& lv : g.lambdas) {
    std::vector<Rational> xs;
    if (lv < Rational(1, 2)) {
      xs = {Rational(1), Rational(2), Rational(5, 2)};
    } else {
      xs = {lv, lv * Rational(2), lv * Rational(3)};  // x/lambda integral: the series terminates
    }
    const Lambda l(lv);
    const auto phi = fully_degenerate_bell_table(g.n_max, l);
    for (const auto& x : xs) {
      for (std::size_t n = 0; n <= g.n_max; ++n) {
        GridPoint p = at(n, lv);
        p.x = x;
        PointCheck c(p);
        const double sum = dobinski_partial_sums(n, lv, x, g.opt.dobinski_terms).back();
        const DobinskiResult res{sum, phi[n](x).to_double()};
        c.set_relative_error(res.relative_error());
        if (!(res.relative_error() <= g.opt.dobinski_tolerance)) {
          std::ostringstream a, b;
          a.precision(17);
          b.precision(17);
          a << res.partial_sum;
          b << res.reference;
          c.fail("Dobinski partial sum vs exact phi", a.str(), b.str());
        }
        rec.add(c);
      }
    }
  }
}

}  // namespace detail

// Runs one identity over the grid.  lambda_samples, m_values and k_values are
// used only by identities that depend on them.
inline VerificationReport verify(IdentityId id, std::size_t n_max, std::vector<Rational> lambda_samples,
                                 std::vector<long> m_values, std::vector<long> k_values,
                                 const VerifyOptions& options = {}) {
  const CheckKind kind = check_kind(id);
  const bool uses_lambda = kind == CheckKind::kExactInLambda || kind == CheckKind::kNumerical;
  const bool uses_m = id == IdentityId::kEq1A2AOrtho || id == IdentityId::kEq3A4AOrtho ||
                      id == IdentityId::kWhitneyOracle || id == IdentityId::kThm3Gf ||
                      id == IdentityId::kEq11Eq12Dowling || id == IdentityId::kThm9Roundtrip ||
                      id == IdentityId::kThm10 || id == IdentityId::kFallingInDowling || id == IdentityId::kThm11 ||
                      id == IdentityId::kEq56Closing;
  const bool uses_k = id == IdentityId::kThm7;

  {
    std::set<Rational> seen;
    std::erase_if(lambda_samples, [&](const Rational& l) { return !seen.insert(l).second; });
  }
  if (uses_lambda) {
    if (lambda_samples.empty()) throw ParameterError("verify " + to_string(id) + ": empty grid (no lambda samples)");
    for (const auto& l : lambda_samples) {
      if (l.is_zero()) throw DomainError("verify: lambda = 0 is only valid in " + to_string(IdentityId::kLimitLambda0Suite));
    }
  }
  if (id == IdentityId::kThm2Dobinski) {
    std::erase_if(lambda_samples, [](const Rational& l) { return l.sign() <= 0 || l >= Rational(1); });
    if (lambda_samples.empty()) throw DomainError("verify THM2_DOBINSKI: needs lambda samples in (0, 1)");
  }
  if (uses_m) {
    if (m_values.empty()) throw ParameterError("verify " + to_string(id) + ": empty grid (no m values)");
    for (long m : m_values) detail::require_positive_m(m);
  }
  if (uses_k && k_values.empty()) throw ParameterError("verify " + to_string(id) + ": empty grid (no k values)");
  if (id == IdentityId::kEq3A4AOrtho || id == IdentityId::kWhitneyOracle) {
    if (options.r_values.empty()) throw ParameterError("verify " + to_string(id) + ": empty grid (no r values)");
    for (long r : options.r_values) {
      if (r < 0) throw DomainError("r must be nonnegative");
    }
  }
  const detail::Grid grid{n_max, lambda_samples, m_values, k_values, options};

  detail::Recorder rec;
  switch (id) {
    case IdentityId::kEq1A2AOrtho: detail::run_eq1a2a(grid, rec); break;
    case IdentityId::kEq3A4AOrtho: detail::run_eq3a4a(grid, rec); break;
    case IdentityId::kLemma1: detail::run_lemma1(grid, rec); break;
    case IdentityId::kThm2Dobinski: detail::run_thm2(grid, rec); break;
    case IdentityId::kThm3Gf: detail::run_thm3(grid, rec); break;
    case IdentityId::kEq11Eq12Dowling: detail::run_eq11_eq12(grid, rec); break;
    case IdentityId::kEq25Addition: detail::run_eq25(grid, rec); break;
    case IdentityId::kThm4Roundtrip: detail::run_roundtrip(grid, rec, false); break;
    case IdentityId::kThm5: detail::run_thm5(grid, rec); break;
    case IdentityId::kThm6: detail::run_thm6(grid, rec); break;
    case IdentityId::kThm7: detail::run_thm7(grid, rec); break;
    case IdentityId::kThm8: detail::run_thm8(grid, rec); break;
    case IdentityId::kThm9Roundtrip: detail::run_roundtrip(grid, rec, true); break;
    case IdentityId::kThm10: detail::run_thm10(grid, rec); break;
    case IdentityId::kFallingInDowling: detail::run_falling_in_dowling(grid, rec); break;
    case IdentityId::kThm11: detail::run_thm11(grid, rec); break;
    case IdentityId::kEq56Closing: detail::run_eq56(grid, rec); break;
    case IdentityId::kStirlingOrtho: detail::run_stirling_ortho(grid, rec); break;
    case IdentityId::kDegStirlingOrtho: detail::run_deg_stirling_ortho(grid, rec); break;
    case IdentityId::kPolyBellK1IsBernoulli: detail::run_polybell_k1(grid, rec); break;
    case IdentityId::kLimitLambda0Suite: detail::run_limit_suite(grid, rec); break;
    case IdentityId::kWhitneyOracle: detail::run_whitney_oracle(grid, rec); break;
  }

  VerificationReport report = std::move(rec.report());
  report.identity = id;
  report.kind = kind;
  report.n_max = n_max;
  report.lambda_degree_bound = lambda_degree_bound(id, n_max);
  switch (kind) {
    case CheckKind::kExactInLambda: {
      std::set<Rational> passing(lambda_samples.begin(), lambda_samples.end());
      for (const auto& p : report.grid) {
        if (!p.pass && p.point.lambda) passing.erase(*p.point.lambda);
      }
      report.distinct_lambda_samples = passing.size();
      break;
    }
    case CheckKind::kLambdaFree:
      // constant in lambda: a single evaluation stands for every sample
      report.distinct_lambda_samples = report.passed() ? 1 : 0;
      break;
    case CheckKind::kLimitPoint:
    case CheckKind::kNumerical:
      report.distinct_lambda_samples = 0;
      break;
  }
  report.certified_polynomial_in_lambda =
      (kind == CheckKind::kExactInLambda || kind == CheckKind::kLambdaFree) && report.passed() &&
      report.distinct_lambda_samples > report.lambda_degree_bound;
  return report;
}

struct SuiteConfig {
  std::optional<std::vector<Rational>> lambda_samples;  // defaults sized to certify 4 n_max
  std::vector<long> m_values{1, 2, 3};
  std::vector<long> k_values{0, 1, 2, 3};
  VerifyOptions options;
  bool parallel = true;
};

inline std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& info : kIdentityCatalogue) out.push_back(info.id);
  return out;
}

// One identity with the suite's default grid filled in where the config is silent.
inline VerificationReport verify_with_config(IdentityId id, std::size_t n_max, const SuiteConfig& config = {}) {
  const std::vector<Rational> lambdas =
      config.lambda_samples ? *config.lambda_samples : default_lambda_samples(default_lambda_sample_count(n_max));
  if (id != IdentityId::kThm2Dobinski) {
    return verify(id, n_max, lambdas, config.m_values, config.k_values, config.options);
  }
  std::vector<Rational> dobinski = config.lambda_samples ? lambdas : detail::default_dobinski_lambdas();
  return verify(id, n_max, std::move(dobinski), config.m_values, config.k_values, config.options);
}

// Every identity once, in catalogue order.  Reports are returned in that order
// whatever order the workers finish in.  Caller-supplied lambda samples outside
// (0, 1) are dropped for the Dobinski check only.
inline std::vector<VerificationReport> run_full_suite(std::size_t n_max, const SuiteConfig& config = {}) {
  auto run = [&](IdentityId id) {
    if (id == IdentityId::kThm2Dobinski && config.lambda_samples) {
      SuiteConfig c = config;
      std::erase_if(*c.lambda_samples, [](const Rational& l) { return l.sign() <= 0 || l >= Rational(1); });
      if (c.lambda_samples->empty()) c.lambda_samples.reset();
      return verify_with_config(id, n_max, c);
    }
    return verify_with_config(id, n_max, config);
  };
  std::vector<VerificationReport> out;
  if (!config.parallel) {
    for (auto id : all_identities()) out.push_back(run(id));
    return out;
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (auto id : all_identities()) jobs.push_back(std::async(std::launch::async, run, id));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

}  // namespace lumbral

#endif  // LUMBRAL_VERIFIER_HPP
