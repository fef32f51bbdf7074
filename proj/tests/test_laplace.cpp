#include <gtest/gtest.h>

#include "fubm/cumulants.hpp"
#include "fubm/laplace.hpp"
#include "support.hpp"

using namespace fubm;

namespace {

QuasiPoly y(int m, Poly p = Poly{1}) { return QuasiPoly::y_power(m, std::move(p)); }

// Integrand of I_{k,l} without the exponential, as a polynomial in s.
Poly integrand_poly(int k, int l) {
  std::vector<Rational> c{0, 0, 1};
  Poly p(std::move(c));
  for (int a : {k, l}) {
    if (a == 1) {
      std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
      p = Poly(std::move(shifted));
    } else {
      p = p * Poly{a - 1, 1}.pow(static_cast<unsigned>(a - 2));
    }
  }
  return p;
}

// int_0^1 s^j e^{-ts} ds = j!/t^{j+1} (1 - e^{-t} sum_{i<=j} t^i/i!).
Real moment_integral(int j, const Real& t) {
  Real partial = 0, term = 1, fact = 1;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) {
      term *= t / i;
      fact *= i;
    }
    partial += term;
  }
  return fact / pow(t, j + 1) * (1 - exp(-t) * partial);
}

Real i_oracle(int k, int l, const Real& t) {
  const Poly p = integrand_poly(k, l);
  Real s = 0;
  for (int j = 0; j <= p.degree(); ++j) s += to_real(p.coeff(j)) * moment_integral(j, t);
  return s;
}

}  // namespace

TEST(Laplace, ClosedFormMatchesMobius) {
  for (int k = 1; k <= 7; ++k)
    for (int l = 1; k + l <= 8; ++l) EXPECT_EQ(z_from_laplace(k, l), z_mobius(ones_then_stars(k, l))) << k << "," << l;
}

TEST(Laplace, UVIntegerAndSymmetric) {
  for (int k = 1; k <= 8; ++k) {
    for (int l = 1; l <= 8; ++l) {
      EXPECT_TRUE(u_poly(k, l).has_integer_coeffs());
      EXPECT_TRUE(v_poly(k, l).has_integer_coeffs());
      EXPECT_EQ(u_poly(k, l), u_poly(l, k));
      EXPECT_EQ(v_poly(k, l), v_poly(l, k));
    }
  }
}

TEST(Laplace, SmallCases) {
  EXPECT_EQ(v_poly(1, 1), Poly{1});
  EXPECT_EQ(v_poly(2, 1), Poly{1});
  EXPECT_EQ(u_poly(2, 1), (Poly{-1, -1}));
}

TEST(Laplace, SpecialRelation) {
  // U_{k,1} = -V_{k+1,1} / k.
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(u_poly(k, 1), v_poly(k + 1, 1) * ratio(-1, k)) << k;
}

TEST(Laplace, VK1ClosedForm) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(v_k1_closed(k), v_poly(k, 1)) << k;
  EXPECT_EQ(v_k1_closed(3), (Poly{2, 2}));
}

TEST(Laplace, SuffixStarTable) {
  const QuasiPoly ny = -y(1);
  EXPECT_EQ(suffix_star_cumulant(1), QuasiPoly(1) - y(2));
  EXPECT_EQ(suffix_star_cumulant(2), ny * (QuasiPoly(1) - y(2, Poly{1, 1})));
  EXPECT_EQ(suffix_star_cumulant(3), ny.pow(2) * (y(0, Poly{1, 1}) - y(2, Poly{1, 2, ratio(3, 2)})));
  EXPECT_EQ(suffix_star_cumulant(4),
            ny.pow(3) * (y(0, Poly{1, 2, ratio(3, 2)}) - y(2, Poly{1, 3, 4, ratio(8, 3)})));
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(suffix_star_cumulant(k), z_mobius(ones_then_stars(k, 1)));
}

TEST(Laplace, BivariateIdentity) {
  for (int order = 1; order <= 6; ++order) {
    const auto rep = check_f_identity(order);
    EXPECT_TRUE(rep.ok) << order;
    EXPECT_EQ(rep.coeff11, QuasiPoly(1));
    EXPECT_TRUE(rep.nonzero.empty());
    EXPECT_EQ(rep.checked, order * order);
  }
}

TEST(Laplace, BivariateCoefficientsAreCumulants) {
  const auto f = f_bivariate(5);
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l) EXPECT_FALSE(f.coeffs.at({k, l}).is_zero());
}

TEST(Laplace, IntegralMatchesExactMoments) {
  const unsigned bits = 160;
  PrecisionScope scope(bits);
  for (const char* ts : {"0.25", "1", "3.5"}) {
    const Real t(ts);
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l) {
        const Real a = i_integral(k, l, t, bits);
        const Real b = i_oracle(k, l, t);
        EXPECT_LT(Real(abs(a - b)), Real("1e-40")) << k << "," << l << " t=" << ts;
      }
  }
}

TEST(Laplace, KappaFromIntegral) {
  const unsigned bits = 128;
  PrecisionScope scope(bits);
  for (const char* ts : {"0.5", "2"}) {
    const Real t(ts);
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const Real a = kappa_from_integral(k, l, t, bits);
        const Real b = eval(z_mobius(ones_then_stars(k, l)), t, bits);
        EXPECT_LT(Real(abs(a - b)), Real("1e-30")) << k << "," << l;
      }
  }
}
