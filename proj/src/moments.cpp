#include "fubm/moments.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "fubm/errors.hpp"

namespace fubm {

Word parse_word(std::string_view text) {
  Word w;
  const bool u_style = text.find('u') != std::string_view::npos || text.find('U') != std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')') continue;
    if (u_style) {
      if (c != 'u' && c != 'U') throw StructureError("bad word character '" + std::string(1, c) + "'");
      if (i + 1 < text.size() && text[i + 1] == '*') {
        w.push_back(Letter::Star);
        ++i;
      } else {
        w.push_back(Letter::One);
      }
    } else if (c == '1') {
      w.push_back(Letter::One);
    } else if (c == '*') {
      w.push_back(Letter::Star);
    } else {
      throw StructureError("bad word character '" + std::string(1, c) + "'");
    }
  }
  if (w.empty()) throw StructureError("empty word");
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (Letter a : w) s += a == Letter::One ? '1' : '*';
  return s;
}

int count_ones(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), Letter::One)); }
int count_stars(const Word& w) { return static_cast<int>(w.size()) - count_ones(w); }

Word constant_word(Letter a, int n) { return Word(static_cast<std::size_t>(n), a); }

Word ones_then_stars(int k, int l) {
  Word w(static_cast<std::size_t>(k), Letter::One);
  w.insert(w.end(), static_cast<std::size_t>(l), Letter::Star);
  return w;
}

Word alternating_even(int k) {
  Word w;
  for (int i = 0; i < k; ++i) {
    w.push_back(Letter::One);
    w.push_back(Letter::Star);
  }
  return w;
}

Word alternating_odd(int k) {
  Word w = alternating_even(k - 1);
  w.push_back(Letter::One);
  return w;
}

Word subword(const Word& w, const std::vector<int>& positions) {
  Word out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(w[static_cast<std::size_t>(p - 1)]);
  return out;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

namespace {

Rational int_pow(const Rational& base, int e) {
  Rational r = 1;
  if (e < 0) return 1 / int_pow(base, -e);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Poly biane_Q(int n) {
  if (n < 1) throw SizeError("biane_Q needs n >= 1");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  const Rational mn = -n;
  for (int j = 0; j < n; ++j)
    coeffs[static_cast<std::size_t>(j)] =
        -int_pow(mn, j - 1) / factorial(static_cast<unsigned>(j)) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(j + 1));
  return Poly(std::move(coeffs));
}

QuasiPoly m_poly(const Word& w) {
  const int d = std::abs(count_ones(w) - count_stars(w));
  if (d == 0) return QuasiPoly(1);
  return QuasiPoly::y_power(d, biane_Q(d));
}

Rational lambert_coeff(int n) {
  if (n < 1) throw SizeError("lambert_coeff needs n >= 1");
  return int_pow(Rational(-n), n - 1) / factorial(static_cast<unsigned>(n));
}

QuasiPoly diag_cumulant(int n) {
  if (n < 1) throw SizeError("diag_cumulant needs n >= 1");
  return QuasiPoly::y_power(n, Poly::monomial(lambert_coeff(n), n - 1));
}

Rational exp_neg_sW_coeff(const Rational& s, int n) { return exp_neg_sW_poly(n).evaluate(s); }

Poly exp_neg_sW_poly(int n) {
  if (n < 0) throw SizeError("exp_neg_sW_coeff needs n >= 0");
  if (n == 0) return Poly::constant(1);
  Poly p = Poly{0, 1} * Poly{Rational(n), 1}.pow(static_cast<unsigned>(n - 1));
  const Rational sign = n % 2 == 0 ? 1 : -1;
  return p * (sign / factorial(static_cast<unsigned>(n)));
}

}  // namespace fubm
