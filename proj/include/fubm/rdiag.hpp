#pragma once

// R-diagonal elements a = uq: Haar limits and derivatives of cumulants at
// t = infinity, determining sequences alpha_k, infinitesimal determining
// sequences beta_k, and the partition sets NC_w(2n).

#include <vector>

#include "fubm/json_fwd.hpp"
#include "fubm/moments.hpp"
#include "fubm/ncpart.hpp"
#include "fubm/qpoly.hpp"

namespace fubm {

/// Free cumulants of a self-adjoint q: kappa(n) for 1 <= n <= max_order.
class Distribution {
 public:
  explicit Distribution(std::vector<Rational> cumulants);
  /// JSON array of "p/q" strings, index n-1 = kappa_n.
  static Distribution from_json(const Json& j);
  int max_order() const { return static_cast<int>(cumulants_.size()); }
  /// InsufficientDataError beyond max_order.
  const Rational& kappa(int n) const;
  const std::vector<Rational>& cumulants() const { return cumulants_; }

 private:
  std::vector<Rational> cumulants_;
};

Rational haar_limit(const Word& w);
Rational haar_derivative(const Word& w);
bool is_alternating(const Word& w);

/// Entry of a cumulant with products as entries: 1 stands for q, 2 for q^2.
using QPattern = std::vector<int>;

Rational mixed_q_cumulant(const Distribution& d, const QPattern& pattern);
std::vector<Rational> alpha_sequence(const Distribution& d, int k_max);
std::vector<Rational> beta_mobius(const Distribution& d, int k_max);

struct OmegaNC {
  Word word;
  std::vector<int> u_set;
  std::vector<int> q_set;
  /// Sorted lexicographically on blocks.
  std::vector<NCPartition> partitions;
};

/// Largest word length for the brute-force NC_w(2n) filter.
inline constexpr int kMaxOmegaWord = kMaxEnumeration / 2;

std::vector<int> u_indices(const Word& w);
std::vector<int> q_indices(const Word& w);
OmegaNC nc_omega(const Word& w);
/// Built from pairs (pi, sigma) without scanning NC(4k-2).
OmegaNC nc_omega_structured(int k);

/// Signed-Catalan product over the U-blocks of tau.
Rational term_u(const NCPartition& tau, const std::vector<int>& u_set);
/// q-cumulant product over the Q-blocks of tau.
Rational term_q(const Distribution& d, const NCPartition& tau, const std::vector<int>& q_set);
Rational beta_from_omega(const Distribution& d, const OmegaNC& omega);
Rational beta_enumeration(const Distribution& d, const Word& w);

}  // namespace fubm
