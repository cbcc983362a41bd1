#include <gtest/gtest.h>

#include "lumbral.hpp"
#include "lumbral/io.hpp"

using namespace lumbral;

namespace {

io::TriangleMeta meta_for(const std::string& kind) {
  io::TriangleMeta m;
  m.kind = kind;
  return m;
}

}  // namespace

TEST(Io, TriangleJsonRoundTrip) {
  const Lambda l(Rational(-2, 7));
  for (const Triangle& t : {degenerate_stirling1(9, l), degenerate_stirling2(9, l), degenerate_whitney2(7, 3, l),
                            r_whitney1(6, 2, 2), Triangle::identity(0)}) {
    const std::string text = io::render_triangle(t, {"x", Rational(-2, 7), false, 3L, std::nullopt}, io::Format::kJson);
    EXPECT_EQ(io::triangle_from_json(text), t);
  }
}

TEST(Io, TriangleJsonRejectsGarbage) {
  EXPECT_THROW(io::triangle_from_json("{"), ParseError);
  EXPECT_THROW(io::triangle_from_json(R"({"rows": [[1]]})"), ParseError);
  EXPECT_THROW(io::triangle_from_json(R"({"rows": []})"), ParseError);
  EXPECT_THROW(io::triangle_from_json(R"({"nope": 1})"), ParseError);
}

TEST(Io, TriangleFormats) {
  const Triangle s2 = stirling2(4);
  const std::string csv = io::render_triangle(s2, meta_for("s2"), io::Format::kCsv);
  EXPECT_NE(csv.find("0,1,7,6,1\n"), std::string::npos);
  const std::string deg = io::render_triangle(degenerate_stirling2(2, Lambda(Rational(1, 2))), meta_for("s2deg"), io::Format::kCsv);
  EXPECT_EQ(deg, "1\n0,1\n0,1/2,1\n");
  const std::string tex = io::render_triangle(degenerate_stirling1(3, Lambda(Rational(1, 3))), meta_for("s1deg"), io::Format::kTex);
  EXPECT_NE(tex.find("\\frac{"), std::string::npos);
  EXPECT_EQ(io::render_triangle(Triangle::identity(0), meta_for("s1"), io::Format::kTable), "1\n");
}

TEST(Io, PolyFormats) {
  const PolyX p = fully_degenerate_bell(3, Lambda(Rational(1, 3)));
  io::PolyMeta meta;
  meta.family = "bell-full";
  meta.n = 3;
  meta.lambda = Rational(1, 3);
  EXPECT_EQ(io::render_poly(p, meta, io::Format::kTable), p.to_string() + "\n");
  const std::string csv = io::render_poly(p, meta, io::Format::kCsv);
  EXPECT_EQ(csv.substr(0, 19), "degree,coefficient\n");
  EXPECT_NE(csv.find("3,1\n"), std::string::npos);
  const auto j = nlohmann::json::parse(io::render_poly(p, meta, io::Format::kJson));
  EXPECT_EQ(j["lambda"], "1/3");
  ASSERT_EQ(j["coeffs"].size(), 4u);
  for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(Rational::parse(j["coeffs"][d].get<std::string>()), p.coeff(d));
  EXPECT_EQ(io::tex_poly(PolyX({Rational(-1, 2), Rational(0), Rational(1)})), "x^{2} - \\frac{1}{2}");
  EXPECT_EQ(io::tex_poly(PolyX()), "0");
}

TEST(Io, ReportJsonCarriesWitness) {
  VerifyOptions opt;
  opt.tamper = [](TriangleRole role, const Triangle& t) {
    return role == TriangleRole::kStirling2Deg ? t.with_entry(3, 1, Rational(9)) : t;
  };
  const auto r = verify(IdentityId::kLemma1, 4, {Rational(1, 2)}, {}, {}, opt);
  const auto j = io::report_to_json(r);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["witness"]["point"]["n"], 3);
  EXPECT_EQ(j["witness"]["point"]["lambda"], "1/2");
  const std::string table = io::render_reports({r}, io::Format::kTable);
  EXPECT_NE(table.find("FAIL"), std::string::npos);
  EXPECT_NE(table.find("witness"), std::string::npos);
  EXPECT_EQ(table.find("\033["), std::string::npos);
}

TEST(Io, ParseFormat) {
  EXPECT_EQ(io::parse_format("tex"), io::Format::kTex);
  EXPECT_THROW(io::parse_format("xml"), ParameterError);
}
