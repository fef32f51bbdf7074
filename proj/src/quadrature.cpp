#include "fubm/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include "fubm/errors.hpp"

namespace fubm {

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
std::pair<Real, Real> legendre(int m, const Real& x) {
  Real p0 = 1, p1 = x;
  for (int j = 2; j <= m; ++j) {
    Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  Real dp = m * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

}  // namespace

GaussRule gauss_legendre_rule(int m) {
  if (m < 1) throw SizeError("Gauss rule needs at least one node");
  GaussRule rule;
  const Real pi = boost::math::constants::pi<Real>();
  const Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(Real::default_precision() * 3.33));
  for (int i = 1; i <= m; ++i) {
    Real x = boost::multiprecision::cos(pi * (Real(i) - Real(1) / 4) / (Real(m) + Real(1) / 2));
    for (int it = 0; it < 200; ++it) {
      auto [p, dp] = legendre(m, x);
      Real dx = p / dp;
      x -= dx;
      if (boost::multiprecision::abs(dx) < eps) break;
    }
    auto [p, dp] = legendre(m, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

Real integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, const Real& tol) {
  const GaussRule rule = gauss_legendre_rule(32);
  auto composite = [&](int panels) -> Real {
    Real sum = 0;
    const Real h = (b - a) / panels;
    for (int j = 0; j < panels; ++j) {
      const Real lo = a + h * j;
      const Real mid = lo + h / 2;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + h / 2 * rule.nodes[i]);
    }
    return sum * h / 2;
  };
  Real prev = composite(1);
  for (int panels = 2; panels <= 256; panels *= 2) {
    Real cur = composite(panels);
    if (boost::multiprecision::abs(cur - prev) < tol) return cur;
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace fubm
