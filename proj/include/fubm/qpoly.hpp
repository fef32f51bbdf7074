#pragma once

// Exact arithmetic in Q[t] * { e^{ct} : c in Z/2 }.
//
// A QuasiPoly is stored as a map from exp2 = 2c to a univariate Poly in t.
// In the (x, y) picture used for cumulant polynomials, x = t and y = e^{-t/2},
// so the coefficient of y^m lives at exp2 = -m.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fubm/json_fwd.hpp"

namespace fubm {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = boost::multiprecision::mpfr_float;

/// Default working precision (bits) for numeric evaluation.
inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Sets the MPFR working precision for the lifetime of the object and
/// restores the previous one afterwards. Boost 1.74 keeps this setting
/// process-wide, so numeric evaluation should not race across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// num/den in lowest terms.
Rational ratio(long num, long den);
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);
Real to_real(const Rational& q);

/// Dense univariate polynomial with rational coefficients, ascending powers.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int power) const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool has_integer_coeffs() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  Rational evaluate(const Rational& x) const;
  Real evaluate(const Real& x) const;
  Poly pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Finite sum of Poly_c(t) e^{c t} over half-integer c. Canonical: no zero
/// Poly stored, so structural equality is mathematical equality.
class QuasiPoly {
 public:
  using TermMap = std::map<int, Poly>;

  QuasiPoly() = default;
  QuasiPoly(const Rational& c);  // NOLINT: constants promote implicitly
  static QuasiPoly term(int exp2, Poly p);
  /// p(t) y^m with y = e^{-t/2}.
  static QuasiPoly y_power(int m, Poly p);
  /// The monomial t.
  static QuasiPoly t();

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Poly attached to exp2 (zero Poly if absent).
  Poly at_exp2(int exp2) const;
  /// Coefficient of y^m in the (x, y) picture, i.e. the Poly at exp2 = -m.
  Poly grade(int m) const { return at_exp2(-m); }
  int min_exp2() const;
  int max_exp2() const;
  /// True if every stored exp2 is congruent to `parity` modulo 2.
  bool exp2_parity_is(int parity) const;

  QuasiPoly& operator+=(const QuasiPoly& other);
  QuasiPoly& operator-=(const QuasiPoly& other);
  QuasiPoly& operator*=(const Rational& c);
  QuasiPoly& operator*=(const QuasiPoly& other);
  friend QuasiPoly operator+(QuasiPoly a, const QuasiPoly& b) { return a += b; }
  friend QuasiPoly operator-(QuasiPoly a, const QuasiPoly& b) { return a -= b; }
  friend QuasiPoly operator*(QuasiPoly a, const Rational& c) { return a *= c; }
  friend QuasiPoly operator*(const Rational& c, QuasiPoly a) { return a *= c; }
  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
  QuasiPoly operator-() const;
  friend bool operator==(const QuasiPoly& a, const QuasiPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by e^{(exp2/2) t}.
  QuasiPoly shifted_exp(int exp2) const;
  QuasiPoly pow(unsigned e) const;

  QuasiPoly ddt() const;
  /// F with F' = f and F(0) = 0.
  QuasiPoly integrate_from_zero() const;
  /// Exact value at t = 0.
  Rational at_zero() const;
  /// Numeric value at t under the currently active precision.
  Real evaluate(const Real& t) const;

  /// A single term whose Poly is a nonzero constant (invertible in the ring).
  bool is_unit() const;
  QuasiPoly unit_inverse() const;

 private:
  void add_term(int exp2, const Poly& p);
  TermMap terms_;
};

/// Evaluates f at t with the given precision in bits. Returns a value whose
/// precision matches `bits`.
Real eval(const QuasiPoly& f, const Real& t, unsigned bits = kDefaultPrecisionBits);
Real eval(const QuasiPoly& f, std::string_view t, unsigned bits = kDefaultPrecisionBits);

// Emitters. The xy style prints powers of y = e^{-t/2} with x standing for t;
// the t style prints exp(c*t) factors.
std::string poly_to_string(const Poly& p, std::string_view var = "x");
std::string to_text_xy(const QuasiPoly& f);
std::string to_text_t(const QuasiPoly& f);
std::string to_latex_xy(const QuasiPoly& f);
std::string to_latex_t(const QuasiPoly& f);

Json to_json(const QuasiPoly& f);
QuasiPoly quasipoly_from_json(const Json& j);
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

}  // namespace fubm
