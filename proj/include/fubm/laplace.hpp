#pragma once

// Closed forms for cumulants of the words 1^k *^l: the U/V polynomials from
// symbolic Laplace transforms, the bivariate generating function identity,
// and the integral I_{k,l}(t).

#include <map>
#include <utility>
#include <vector>

#include "fubm/qpoly.hpp"

namespace fubm {

/// Coefficients (i, j), 1 <= i, j <= order.
struct TruncSeries2 {
  int order = 0;
  std::map<std::pair<int, int>, QuasiPoly> coeffs;
};

Poly u_poly(int k, int l);
Poly v_poly(int k, int l);
QuasiPoly z_from_laplace(int k, int l);
Poly v_k1_closed(int k);
/// kappa_{k+1}(u_t, ..., u_t, u_t^*).
QuasiPoly suffix_star_cumulant(int k);

inline constexpr int kMaxBivariateOrder = 8;

TruncSeries2 f_bivariate(int order);

struct FIdentityReport {
  bool ok = false;
  QuasiPoly coeff11;
  /// Coefficients of the cleared form other than (1,1) that are nonzero.
  std::vector<std::pair<int, int>> nonzero;
  int checked = 0;
};

/// Checks F (1 + R_u + R_{u*}) + R_u R_{u*} = zw coefficientwise for all
/// (k, l) with 1 <= k, l <= order.
FIdentityReport check_f_identity(int order);

/// I_{k,l}(t) = int_0^1 e^{-ts} s^2 (s+k-1)^{k-2} (s+l-1)^{l-2} ds by
/// Gauss-Legendre quadrature at `bits` precision, raw integrand (no
/// cancellation).
Real i_integral(int k, int l, const Real& t, unsigned bits);

/// Cumulant of 1^k *^l rebuilt from i_integral.
Real kappa_from_integral(int k, int l, const Real& t, unsigned bits);

}  // namespace fubm
