#include "fubm/alternating.hpp"

#include "fubm/cumulants.hpp"
#include "fubm/errors.hpp"
#include "fubm/moments.hpp"

namespace fubm {

namespace {

void check_nmax(int n) {
  if (n < 1) throw SizeError("order must be positive");
}

void assert_even_nonpositive(const QuasiPoly& f, const char* what) {
  for (const auto& [e, p] : f.terms())
    if (e > 0 || e % 2 != 0) throw InternalError(std::string(what) + " left the e^{-t} subring");
}

TruncSeries1 make_series(int order) {
  TruncSeries1 s;
  s.order = order;
  s.coeffs.assign(static_cast<std::size_t>(order) + 1, QuasiPoly());
  return s;
}

}  // namespace

std::string to_string(XiMethod m) {
  switch (m) {
    case XiMethod::Recursion:
      return "recursion";
    case XiMethod::Mobius:
      return "mobius";
    case XiMethod::Inversion:
      return "inversion";
  }
  return "?";
}

XiSequence xi_by_recursion(int n_max) {
  check_nmax(n_max);
  XiSequence xs{XiMethod::Recursion, {}};
  xs.entries.push_back(QuasiPoly(1) - QuasiPoly::y_power(2, Poly::constant(1)));
  for (int n = 2; n <= n_max; ++n) {
    QuasiPoly s;
    for (int m = 1; m < n; ++m) s += xs.entries[m - 1] * xs.entries[n - m - 1];
    // xi' + n xi = -n s, xi(0) = 0, via the integrating factor e^{nt}.
    QuasiPoly g = (s * Rational(-n)).shifted_exp(2 * n);
    QuasiPoly xi = g.integrate_from_zero().shifted_exp(-2 * n);
    assert_even_nonpositive(xi, "xi_n");
    xs.entries.push_back(std::move(xi));
  }
  return xs;
}

XiSequence xi_by_mobius(int n_max) {
  check_nmax(n_max);
  if (2 * n_max > kMaxMobiusWord) throw SizeError("xi_by_mobius: n exceeds the Moebius word limit");
  XiSequence xs{XiMethod::Mobius, {}};
  for (int n = 1; n <= n_max; ++n) xs.entries.push_back(z_mobius(alternating_even(n)));
  return xs;
}

TruncSeries1 series_mul(const TruncSeries1& a, const TruncSeries1& b, int order) {
  TruncSeries1 c = make_series(order);
  for (int i = 0; i <= std::min(order, a.order); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j <= b.order; ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return c;
}

TruncSeries1 chi_expansion(int order) {
  check_nmax(order);
  const int n = order;
  // E = e^t e^{wt}
  TruncSeries1 e = make_series(n);
  for (int k = 0; k <= n; ++k)
    e.coeffs[k] = QuasiPoly::term(2, Poly::monomial(1 / factorial(static_cast<unsigned>(k)), k));
  TruncSeries1 pre = make_series(n);  // (1+w)^2 (-2w - w^2)
  const Rational pc[] = {0, -2, -5, -4, -1};
  for (int k = 0; k <= std::min(n, 4); ++k) pre.coeffs[k] = QuasiPoly(pc[k]);
  const TruncSeries1 num = series_mul(pre, e, n);

  TruncSeries1 den = make_series(n);  // (2 + w) + w E
  den.coeffs[0] = QuasiPoly(2);
  if (n >= 1) den.coeffs[1] = QuasiPoly(1);
  for (int k = 1; k <= n; ++k) den.coeffs[k] += e.coeffs[k - 1];
  const TruncSeries1 den2 = series_mul(den, den, n);
  if (!(den2.coeffs[0] == QuasiPoly(4))) throw InternalError("chi denominator has unexpected constant term");

  TruncSeries1 inv = make_series(n);
  inv.coeffs[0] = QuasiPoly(ratio(1, 4));
  for (int k = 1; k <= n; ++k) {
    QuasiPoly acc;
    for (int i = 1; i <= k; ++i) acc += den2.coeffs[i] * inv.coeffs[k - i];
    inv.coeffs[k] = acc * ratio(-1, 4);
  }
  return series_mul(num, inv, n);
}

TruncSeries1 compose(const TruncSeries1& a, const TruncSeries1& b) {
  if (!b.coeffs[0].is_zero()) throw InternalError("compose: inner series has a constant term");
  const int n = std::min(a.order, b.order);
  TruncSeries1 out = make_series(n);
  TruncSeries1 power = make_series(n);
  power.coeffs[0] = QuasiPoly(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) power = series_mul(power, b, n);
    if (a.coeffs[j].is_zero()) continue;
    for (int i = 0; i <= n; ++i) out.coeffs[i] += a.coeffs[j] * power.coeffs[i];
  }
  return out;
}

TruncSeries1 series_inverse(const TruncSeries1& s) {
  const int n = s.order;
  if (!s.coeffs[0].is_zero()) throw InternalError("series_inverse: nonzero constant term");
  if (!s.coeffs[1].is_unit()) throw InternalError("series_inverse: linear coefficient is not invertible");
  const QuasiPoly inv1 = s.coeffs[1].unit_inverse();
  TruncSeries1 l = make_series(n);
  for (int k = 1; k <= n; ++k) {
    // [z^k] sum_{j>=2} s_j L^j only sees lambda_1..lambda_{k-1}.
    TruncSeries1 power = l;
    QuasiPoly acc;
    for (int j = 2; j <= k; ++j) {
      power = series_mul(power, l, k);
      acc += s.coeffs[j] * power.coeffs[k];
    }
    l.coeffs[k] = ((k == 1 ? QuasiPoly(1) : QuasiPoly()) - acc) * inv1;
  }
  return l;
}

TruncSeries1 lambda_series(int order) {
  check_nmax(order);
  TruncSeries1 l = series_inverse(chi_expansion(order));
  for (int k = 1; k <= order; ++k) assert_even_nonpositive(l.coeffs[k], "lambda_n");
  return l;
}

XiSequence xi_by_inversion(int n_max) {
  const TruncSeries1 lam = lambda_series(n_max);
  XiSequence xs{XiMethod::Inversion, {}};
  for (int n = 1; n <= n_max; ++n) {
    QuasiPoly sq = lam.coeffs[n] * Rational(2);
    for (int m = 1; m < n; ++m) sq += lam.coeffs[m] * lam.coeffs[n - m];
    QuasiPoly xi = sq * ratio(1, 4);
    if (n == 1) xi += QuasiPoly(1);
    for (int m = 1; m < n; ++m) xi -= xs.entries[m - 1] * xs.entries[n - m - 1];
    xs.entries.push_back(std::move(xi));
  }
  return xs;
}

PdeReport pde_residual(int n_max, std::vector<std::string> t_grid, std::vector<std::string> z_grid, unsigned bits) {
  check_nmax(n_max);
  if (t_grid.empty()) t_grid = {"0", "0.5", "1", "2", "5"};
  if (z_grid.empty()) z_grid = {"1e-3", "-1e-3", "1e-4", "-1e-4"};
  const XiSequence xs = xi_by_recursion(n_max);

  PdeReport rep;
  const int top = 2 * n_max;
  // h[i] = coefficient of z^i in H, dz[i] in dH/dz.
  std::vector<QuasiPoly> h(static_cast<std::size_t>(n_max) + 1), dz(static_cast<std::size_t>(n_max));
  h[0] = QuasiPoly(ratio(1, 2));
  for (int n = 1; n <= n_max; ++n) h[n] = xs.entries[n - 1];
  for (int n = 1; n <= n_max; ++n) dz[n - 1] = h[n] * Rational(n);
  rep.coeffs.assign(static_cast<std::size_t>(top) + 1, QuasiPoly());
  for (int n = 0; n <= n_max; ++n) rep.coeffs[n] += h[n].ddt();
  for (int i = 0; i <= n_max; ++i)
    for (int j = 0; j < n_max; ++j) rep.coeffs[i + j + 1] += h[i] * dz[j] * Rational(2);
  rep.coeffs[1] -= QuasiPoly(1);
  for (int n = 1; n <= top; ++n)
    if (!rep.coeffs[n].is_zero()) {
      rep.first_nonzero_order = n;
      break;
    }
  rep.initial_condition = true;
  for (const auto& xi : xs.entries)
    if (xi.at_zero() != 0) rep.initial_condition = false;

  PrecisionScope scope(bits);
  std::vector<QuasiPoly> dt(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) dt[i] = h[i].ddt();
  Real worst = 0;
  for (const auto& ts : t_grid) {
    const Real t{ts};
    std::vector<Real> hv, dtv;
    for (std::size_t i = 0; i < h.size(); ++i) {
      hv.push_back(h[i].evaluate(t));
      dtv.push_back(dt[i].evaluate(t));
    }
    for (const auto& zs : z_grid) {
      const Real z{zs};
      Real H = 0, Ht = 0, Hz = 0, zprev = 0, zi = 1;
      for (int i = 0; i <= n_max; ++i) {
        H += hv[i] * zi;
        Ht += dtv[i] * zi;
        Hz += i * hv[i] * zprev;
        zprev = zi;
        zi *= z;
      }
      const Real res = boost::multiprecision::abs(Ht + 2 * z * H * Hz - z);
      if (res > worst) worst = res;
    }
  }
  rep.max_residual = worst;
  return rep;
}

}  // namespace fubm
