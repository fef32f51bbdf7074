#include <gtest/gtest.h>

#include "fubm/errors.hpp"
#include "fubm/moments.hpp"
#include "support.hpp"

using namespace fubm;
namespace ft = fubm::testing;

namespace {

Rational rat_pow(const Rational& a, int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= a;
  return e < 0 ? 1 / r : r;
}

Rational fact(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational choose(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

// Moment of u_t^n: e^{-nt/2} sum_k (-t)^k / k! n^{k-1} C(n, k+1).
QuasiPoly moment_oracle(int n) {
  if (n == 0) return QuasiPoly(1);
  std::vector<Rational> c;
  for (int k = 0; k < n; ++k) c.push_back(rat_pow(-1, k) / fact(k) * rat_pow(Rational(n), k - 1) * choose(n, k + 1));
  return QuasiPoly::y_power(n, Poly(std::move(c)));
}

// exp of a power series with zero constant term: n E_n = sum k f_k E_{n-k}.
std::vector<Rational> series_exp(const std::vector<Rational>& f, int order) {
  std::vector<Rational> e(static_cast<std::size_t>(order) + 1, 0);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += k * f[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
    e[static_cast<std::size_t>(n)] = s / n;
  }
  return e;
}

}  // namespace

TEST(Words, ParseForms) {
  const Word w{Letter::One, Letter::Star, Letter::One};
  EXPECT_EQ(parse_word("1*1"), w);
  EXPECT_EQ(parse_word("(1, *, 1)"), w);
  EXPECT_EQ(parse_word("uu*u"), w);
  EXPECT_EQ(word_to_string(w), "1*1");
  EXPECT_EQ(parse_word("uu"), (Word{Letter::One, Letter::One}));
}

TEST(Words, ParseErrors) {
  EXPECT_THROW(parse_word(""), StructureError);
  EXPECT_THROW(parse_word("12"), StructureError);
  EXPECT_THROW(parse_word("*u"), StructureError);
}

TEST(Words, Builders) {
  EXPECT_EQ(word_to_string(ones_then_stars(3, 2)), "111**");
  EXPECT_EQ(word_to_string(alternating_even(2)), "1*1*");
  EXPECT_EQ(word_to_string(alternating_odd(3)), "1*1*1");
  EXPECT_EQ(count_ones(parse_word("1*11*")), 3);
  EXPECT_EQ(count_stars(parse_word("1*11*")), 2);
  EXPECT_EQ(word_to_string(subword(parse_word("1*11*"), {1, 3, 5})), "11*");
}

TEST(Moments, BianeFormula) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(m_poly(constant_word(Letter::One, n)), moment_oracle(n)) << n;
    EXPECT_EQ(QuasiPoly::y_power(n, biane_Q(n)), moment_oracle(n)) << n;
  }
  EXPECT_EQ(biane_Q(3), (Poly{1, -3, ratio(3, 2)}));
}

TEST(Moments, UnitaryCancellation) {
  // u u* = u* u = 1, so only the letter imbalance matters.
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : ft::all_words(n))
      EXPECT_EQ(m_poly(w), moment_oracle(std::abs(count_ones(w) - count_stars(w)))) << word_to_string(w);
}

TEST(Moments, MomentsAtZeroAreOne) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(moment_oracle(n).at_zero(), Rational(1));
}

TEST(Lambert, FunctionalEquation) {
  // W(y) e^{W(y)} = y.
  const int order = 12;
  std::vector<Rational> w(order + 1, 0);
  for (int n = 1; n <= order; ++n) w[static_cast<std::size_t>(n)] = lambert_coeff(n);
  const auto ew = series_exp(w, order);
  for (int n = 1; n <= order; ++n) {
    Rational c = 0;
    for (int k = 1; k <= n; ++k) c += w[static_cast<std::size_t>(k)] * ew[static_cast<std::size_t>(n - k)];
    EXPECT_EQ(c, Rational(n == 1 ? 1 : 0)) << n;
  }
}

TEST(Lambert, ExpNegSW) {
  std::mt19937_64 rng(ft::kSeed);
  const int order = 9;
  std::vector<Rational> w(order + 1, 0);
  for (int n = 1; n <= order; ++n) w[static_cast<std::size_t>(n)] = lambert_coeff(n);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational s = ft::small_rational(rng);
    std::vector<Rational> f(w);
    for (auto& c : f) c *= -s;
    const auto e = series_exp(f, order);
    for (int n = 1; n <= order; ++n) {
      EXPECT_EQ(exp_neg_sW_coeff(s, n), e[static_cast<std::size_t>(n)]);
      EXPECT_EQ(exp_neg_sW_poly(n).evaluate(s), e[static_cast<std::size_t>(n)]);
    }
  }
}

TEST(Diagonal, CumulantsFromMomentOracle) {
  // Invert the moment-cumulant relation over brute-force NC(n).
  const int nmax = 7;
  std::vector<QuasiPoly> kappa;
  for (int n = 1; n <= nmax; ++n) {
    QuasiPoly rest;
    for (const auto& lab : ft::brute_nc_labels(n)) {
      const auto bl = ft::blocks_of(lab);
      if (bl.size() == 1) continue;
      QuasiPoly prod(1);
      for (const auto& b : bl) prod *= kappa[b.size() - 1];
      rest += prod;
    }
    kappa.push_back(moment_oracle(n) - rest);
    EXPECT_EQ(diag_cumulant(n), kappa.back()) << n;
  }
  EXPECT_EQ(diag_cumulant(1), QuasiPoly::y_power(1, Poly{1}));
}

TEST(Numbers, FactorialBinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}
