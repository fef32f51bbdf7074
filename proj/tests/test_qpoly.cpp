#include <gtest/gtest.h>

#include <json.hpp>

#include "fubm/errors.hpp"
#include "fubm/qpoly.hpp"
#include "support.hpp"

using namespace fubm;
using fubm::testing::kSeed;
using fubm::testing::random_quasipoly;

namespace {

QuasiPoly y(int m, Poly p = Poly{1}) { return QuasiPoly::y_power(m, std::move(p)); }

}  // namespace

TEST(Rational, RatioIsCanonical) {
  EXPECT_EQ(ratio(-2, 2), Rational(-1));
  EXPECT_EQ(rational_to_string(ratio(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("  10/4 "), ratio(5, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational("1/0"), StructureError);
  EXPECT_THROW(parse_rational("abc"), StructureError);
  EXPECT_THROW(parse_rational(""), StructureError);
}

TEST(Poly, Arithmetic) {
  const Poly a{1, 1};
  const Poly b{-1, 1};
  EXPECT_EQ(a * b, (Poly{-1, 0, 1}));
  EXPECT_EQ(a - a, Poly{});
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ((Poly{1, 2, 3}).derivative(), (Poly{2, 6}));
  EXPECT_EQ((Poly{2, 6}).antiderivative(), (Poly{0, 2, 3}));
  EXPECT_EQ((Poly{1, 1}).pow(3), (Poly{1, 3, 3, 1}));
  EXPECT_EQ((Poly{1, 1}).evaluate(Rational(2)), Rational(3));
}

TEST(Poly, TrailingZerosTrimmed) {
  const Poly p(std::vector<Rational>{1, 0, 0});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(p.is_constant());
}

TEST(QuasiPoly, TextXY) {
  EXPECT_EQ(to_text_xy(QuasiPoly(1) - y(2)), "1 - y^2");
  EXPECT_EQ(to_text_xy(y(3, Poly{1, 1}) - y(1)), "-y + (x + 1)*y^3");
  EXPECT_EQ(to_text_xy(-y(4, Poly{3, 2}) + y(2, Poly{4}) - QuasiPoly(1)), "-1 + 4*y^2 - (2*x + 3)*y^4");
  EXPECT_EQ(to_text_xy(QuasiPoly()), "0");
}

TEST(QuasiPoly, TextT) {
  EXPECT_EQ(to_text_t(QuasiPoly(1) - y(2)), "1 - exp(-t)");
  EXPECT_EQ(to_text_t(y(3)), "exp(-3*t/2)");
  EXPECT_EQ(to_text_t(QuasiPoly::t()), "t");
}

TEST(QuasiPoly, Latex) {
  EXPECT_EQ(to_latex_xy(QuasiPoly(1) - y(2)), "1 - y^{2}");
  EXPECT_NE(to_latex_t(y(2, Poly{0, 1})).find("e^{-t}"), std::string::npos);
}

TEST(QuasiPoly, ZeroTermsDropped) {
  QuasiPoly f = y(2, Poly{1, 2});
  f -= y(2, Poly{1, 2});
  EXPECT_TRUE(f.is_zero());
  EXPECT_TRUE(f.terms().empty());
}

TEST(QuasiPoly, CalculusRoundTrip) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const QuasiPoly f = random_quasipoly(rng);
    const QuasiPoly big_f = f.integrate_from_zero();
    EXPECT_EQ(big_f.ddt(), f);
    EXPECT_EQ(big_f.at_zero(), Rational(0));
  }
}

TEST(QuasiPoly, DerivativeOfExponential) {
  // d/dt (t e^{-t}) = e^{-t} - t e^{-t}
  EXPECT_EQ(y(2, Poly{0, 1}).ddt(), y(2, Poly{1, -1}));
  EXPECT_EQ(y(1).integrate_from_zero(), QuasiPoly(2) - y(1, Poly{2}));
}

TEST(QuasiPoly, RingAxioms) {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 150; ++trial) {
    const QuasiPoly a = random_quasipoly(rng), b = random_quasipoly(rng), c = random_quasipoly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, QuasiPoly());
    EXPECT_EQ(a * QuasiPoly(1), a);
    EXPECT_EQ((a * b).ddt(), a.ddt() * b + a * b.ddt());
  }
}

TEST(QuasiPoly, EvalIsHomomorphism) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<int> tn(0, 40);
  PrecisionScope scope(160);
  for (int trial = 0; trial < 60; ++trial) {
    const QuasiPoly a = random_quasipoly(rng), b = random_quasipoly(rng);
    const Real t = Real(tn(rng)) / 8;
    const Real lhs = eval(a * b, t, 160);
    const Real rhs = eval(a, t, 160) * eval(b, t, 160);
    const Real sum = eval(a + b, t, 160) - eval(a, t, 160) - eval(b, t, 160);
    EXPECT_LT(Real(abs(lhs - rhs)), Real("1e-35") * (1 + abs(lhs)));
    EXPECT_LT(Real(abs(sum)), Real("1e-35") * (1 + abs(lhs)));
  }
}

TEST(QuasiPoly, EvalKnownValue) {
  // 1 - e^{-t} at t = ln 2 is 1/2; use t = 0 and t = 1 exactly.
  const QuasiPoly f = QuasiPoly(1) - y(2);
  EXPECT_EQ(eval(f, "0", 128), Real(0));
  PrecisionScope scope(128);
  const Real e1 = 1 - exp(Real(-1));
  EXPECT_LT(Real(abs(eval(f, "1", 128) - e1)), Real("1e-37"));
}

TEST(QuasiPoly, Units) {
  const QuasiPoly u = y(2, Poly{3});
  ASSERT_TRUE(u.is_unit());
  EXPECT_EQ(u * u.unit_inverse(), QuasiPoly(1));
  EXPECT_FALSE(y(2, Poly{0, 1}).is_unit());
  EXPECT_FALSE((QuasiPoly(1) + y(2)).is_unit());
}

TEST(QuasiPoly, JsonRoundTrip) {
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const QuasiPoly f = random_quasipoly(rng);
    const Json j = to_json(f);
    EXPECT_EQ(quasipoly_from_json(Json::parse(j.dump())), f);
  }
}

TEST(QuasiPoly, JsonRejectsMalformed) {
  EXPECT_THROW(quasipoly_from_json(Json::parse("42")), StructureError);
  EXPECT_THROW(poly_from_json(Json::parse(R"(["1/0"])")), StructureError);
}
