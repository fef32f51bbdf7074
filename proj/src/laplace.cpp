#include "fubm/laplace.hpp"

#include <string>

#include "fubm/errors.hpp"
#include "fubm/moments.hpp"
#include "fubm/quadrature.hpp"

namespace fubm {

namespace {

// prod (s + shift)^exp over the map, after merging equal shifts.
Poly expand_integrand(const std::map<int, int>& factors) {
  Poly p = Poly::constant(1);
  for (const auto& [shift, e] : factors) {
    if (e < 0)
      throw InternalError("Laplace integrand keeps (s+" + std::to_string(shift) + ")^" + std::to_string(e));
    p = p * Poly{Rational(shift), 1}.pow(static_cast<unsigned>(e));
  }
  return p;
}

// x^{k+l-1} int_0^oo e^{-xs} p(s) ds with s^m -> m! / x^{m+1}.
Poly laplace_rule(const Poly& integrand, int k, int l) {
  const int top = k + l - 2;
  std::vector<Rational> out(static_cast<std::size_t>(top) + 1);
  for (int m = 0; m <= integrand.degree(); ++m) {
    const Rational c = integrand.coeff(m);
    if (c == 0) continue;
    if (top - m < 0) throw InternalError("Laplace rule produced a negative power of x");
    out[static_cast<std::size_t>(top - m)] += c * factorial(static_cast<unsigned>(m));
  }
  Poly r(std::move(out));
  if (!r.has_integer_coeffs()) throw InternalError("U/V polynomial with non-integer coefficients");
  return r;
}

void check_kl(int k, int l) {
  if (k < 1 || l < 1) throw SizeError("k and l must be positive");
}

}  // namespace

Poly u_poly(int k, int l) {
  check_kl(k, l);
  std::map<int, int> f;
  f[1] += 2;
  f[k] += k - 2;
  f[l] += l - 2;
  return -laplace_rule(expand_integrand(f), k, l);
}

Poly v_poly(int k, int l) {
  check_kl(k, l);
  std::map<int, int> f;
  f[0] += 2;
  f[k - 1] += k - 2;
  f[l - 1] += l - 2;
  return laplace_rule(expand_integrand(f), k, l);
}

QuasiPoly z_from_laplace(int k, int l) {
  check_kl(k, l);
  const Rational pref = Rational((k + l) % 2 == 0 ? 1 : -1) /
                        (factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(l - 1)));
  QuasiPoly z = QuasiPoly::y_power(k + l, u_poly(k, l)) + QuasiPoly::y_power(k + l - 2, v_poly(k, l));
  return z * pref;
}

Poly v_k1_closed(int k) {
  if (k < 1) throw SizeError("k must be positive");
  if (k <= 2) return Poly::constant(1);
  std::vector<Rational> c(static_cast<std::size_t>(k) - 1);
  Rational pw = 1;
  for (int j = 0; j <= k - 2; ++j) {
    c[static_cast<std::size_t>(j)] =
        binomial(static_cast<unsigned>(k - 2), static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(k - 1 - j)) * pw;
    pw *= k - 1;
  }
  return Poly(std::move(c));
}

QuasiPoly suffix_star_cumulant(int k) {
  if (k < 1) throw SizeError("k must be positive");
  const Poly vk = v_poly(k, 1) * (1 / factorial(static_cast<unsigned>(k - 1)));
  const Poly vk1 = v_poly(k + 1, 1) * (1 / factorial(static_cast<unsigned>(k)));
  const QuasiPoly inner = QuasiPoly::term(0, vk) - QuasiPoly::y_power(2, vk1);
  const QuasiPoly neg_y = QuasiPoly::y_power(1, Poly::constant(-1));
  return neg_y.pow(static_cast<unsigned>(k - 1)) * inner;
}

TruncSeries2 f_bivariate(int order) {
  if (order < 1 || order > kMaxBivariateOrder)
    throw SizeError("bivariate order must lie in 1.." + std::to_string(kMaxBivariateOrder));
  TruncSeries2 f;
  f.order = order;
  for (int k = 1; k <= order; ++k)
    for (int l = 1; l <= order; ++l) f.coeffs[{k, l}] = z_from_laplace(k, l);
  return f;
}

FIdentityReport check_f_identity(int order) {
  const TruncSeries2 f = f_bivariate(order);
  std::vector<QuasiPoly> r(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) r[static_cast<std::size_t>(n)] = diag_cumulant(n);
  auto F = [&](int k, int l) -> const QuasiPoly& { return f.coeffs.at({k, l}); };

  FIdentityReport rep;
  for (int k = 1; k <= order; ++k) {
    for (int l = 1; l <= order; ++l) {
      QuasiPoly c = F(k, l) + r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(l)];
      for (int i = 1; i < k; ++i) c += r[static_cast<std::size_t>(i)] * F(k - i, l);
      for (int j = 1; j < l; ++j) c += r[static_cast<std::size_t>(j)] * F(k, l - j);
      ++rep.checked;
      if (k == 1 && l == 1)
        rep.coeff11 = c;
      else if (!c.is_zero())
        rep.nonzero.emplace_back(k, l);
    }
  }
  rep.ok = rep.coeff11 == QuasiPoly(1) && rep.nonzero.empty();
  return rep;
}

Real i_integral(int k, int l, const Real& t, unsigned bits) {
  check_kl(k, l);
  PrecisionScope scope(bits);
  const Real tt(t, Real::default_precision());
  auto f = [&](const Real& s) -> Real {
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    return exp(-tt * s) * s * s * pow(s + (k - 1), k - 2) * pow(s + (l - 1), l - 2);
  };
  const Real tol = pow(Real(2), -static_cast<int>(bits) + 8);
  return integrate(f, Real(0), Real(1), tol);
}

Real kappa_from_integral(int k, int l, const Real& t, unsigned bits) {
  PrecisionScope scope(bits);
  const Real tt(t, Real::default_precision());
  const Real sign = (k + l) % 2 == 0 ? 1 : -1;
  const Real denom = to_real(factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(l - 1)));
  return sign / denom * boost::multiprecision::pow(tt, k + l - 1) * boost::multiprecision::exp(-tt * (k + l - 2) / 2) *
         i_integral(k, l, tt, bits);
}

}  // namespace fubm
