#pragma once

#include <functional>
#include <vector>

#include "fubm/qpoly.hpp"

namespace fubm {

struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

/// m-point Gauss-Legendre rule at the active precision. Nodes come from
/// Newton iteration on P_m.
GaussRule gauss_legendre_rule(int m);

/// Composite Gauss-Legendre on [a, b]. Panels double until two successive
/// estimates agree to `tol` (or a panel cap is hit). Uses the active precision.
Real integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, const Real& tol);

}  // namespace fubm
