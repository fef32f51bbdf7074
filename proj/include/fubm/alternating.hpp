#pragma once

// The alternating cumulants xi_n(t) = kappa_{2n}(u_t, u_t^*, ..., u_t, u_t^*)
// by three routes (ODE recursion, Moebius sum, series inversion of chi_t),
// and the Burgers equation check for H(t, z) = 1/2 + sum xi_n z^n.

#include <string>
#include <vector>

#include "fubm/qpoly.hpp"

namespace fubm {

/// coeffs[n] is the coefficient of z^n (or w^n), 0 <= n <= order.
struct TruncSeries1 {
  int order = 0;
  std::vector<QuasiPoly> coeffs;
};

enum class XiMethod { Recursion, Mobius, Inversion };

std::string to_string(XiMethod m);

/// entries[n-1] = xi_n.
struct XiSequence {
  XiMethod method = XiMethod::Recursion;
  std::vector<QuasiPoly> entries;
};

XiSequence xi_by_recursion(int n_max);
/// Limited by the Moebius word length: n_max <= kMaxMobiusWord / 2.
XiSequence xi_by_mobius(int n_max);
XiSequence xi_by_inversion(int n_max);

/// chi_t(1 + w) through w^order.
TruncSeries1 chi_expansion(int order);
/// Compositional inverse of a series with zero constant term and unit linear
/// coefficient; returns L with s(L(z)) = z through z^order.
TruncSeries1 series_inverse(const TruncSeries1& s);
/// 1 + lambda_1 z + ... : coeffs[0] = 0, coeffs[n] = lambda_n.
TruncSeries1 lambda_series(int order);
/// a(b(z)) truncated at min order; b must have zero constant term.
TruncSeries1 compose(const TruncSeries1& a, const TruncSeries1& b);
TruncSeries1 series_mul(const TruncSeries1& a, const TruncSeries1& b, int order);

struct PdeReport {
  /// Coefficients of dH/dt + 2 z H dH/dz - z for the truncated H.
  std::vector<QuasiPoly> coeffs;
  /// Smallest n >= 1 with a nonzero coefficient (0 if none).
  int first_nonzero_order = 0;
  bool initial_condition = false;
  Real max_residual;
};

/// Default grids when the vectors are empty: t in {0, 0.5, 1, 2, 5},
/// z in {+-1e-3, +-1e-4}.
PdeReport pde_residual(int n_max, std::vector<std::string> t_grid = {}, std::vector<std::string> z_grid = {},
                       unsigned bits = kDefaultPrecisionBits);

}  // namespace fubm
