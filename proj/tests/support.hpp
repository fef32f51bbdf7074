#pragma once

// Test-side oracles and generators. Nothing here calls into the code under
// test beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "fubm/moments.hpp"
#include "fubm/ncpart.hpp"
#include "fubm/qpoly.hpp"

namespace fubm {

inline void PrintTo(const QuasiPoly& f, std::ostream* os) { *os << to_text_xy(f); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << poly_to_string(p); }

}  // namespace fubm

namespace fubm::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

/// Restricted growth strings of length n, i.e. every set partition.
inline std::vector<std::vector<int>> all_set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> mx(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(a);
    int i = n - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i <= 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[j - 1];
    }
  }
  return out;
}

inline bool crossing_labels(const std::vector<int>& lab) {
  const int n = static_cast<int>(lab.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (lab[a] == lab[c] && lab[b] == lab[d] && lab[a] != lab[b]) return true;
  return false;
}

inline std::vector<std::vector<int>> brute_nc_labels(int n) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_set_partitions(n))
    if (!crossing_labels(p)) out.push_back(std::move(p));
  return out;
}

inline std::vector<Block> blocks_of(const std::vector<int>& lab) {
  int m = 0;
  for (int x : lab) m = std::max(m, x + 1);
  std::vector<Block> b(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < lab.size(); ++i) b[static_cast<std::size_t>(lab[i])].push_back(static_cast<int>(i) + 1);
  return b;
}

/// p <= r in refinement order, both as label vectors.
inline bool refines(const std::vector<int>& p, const std::vector<int>& r) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j] && r[i] != r[j]) return false;
  return true;
}

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back((mask >> i) & 1u ? Letter::Star : Letter::One);
    out.push_back(w);
  }
  return out;
}

inline Integer catalan_oracle(int k) {
  Integer c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline Rational signed_catalan_oracle(int k) {
  return Rational(k % 2 ? -catalan_oracle(k) : catalan_oracle(k));
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Rational> c;
  for (int i = deg(rng); i >= 0; --i) c.push_back(small_rational(rng));
  return Poly(std::move(c));
}

inline QuasiPoly random_quasipoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), e(-6, 2);
  QuasiPoly f;
  for (int i = count(rng); i > 0; --i) f += QuasiPoly::term(e(rng), random_poly(rng));
  return f;
}

/// Free moments from free cumulants via a sum over brute-force NC(n).
inline std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& kappa, int n_max) {
  std::vector<Rational> m(static_cast<std::size_t>(n_max) + 1, 0);
  m[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lab : brute_nc_labels(n)) {
      Rational prod = 1;
      for (const auto& b : blocks_of(lab)) prod *= kappa[b.size() - 1];
      m[static_cast<std::size_t>(n)] += prod;
    }
  }
  return m;
}

/// Free cumulants from moments by peeling off the 1_n term recursively.
inline std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& m, int n_max) {
  std::vector<Rational> kappa;
  for (int n = 1; n <= n_max; ++n) {
    kappa.push_back(0);
    Rational rest = 0;
    for (const auto& lab : brute_nc_labels(n)) {
      const auto bl = blocks_of(lab);
      if (bl.size() == 1) continue;
      Rational prod = 1;
      for (const auto& b : bl) prod *= kappa[b.size() - 1];
      rest += prod;
    }
    kappa.back() = m[static_cast<std::size_t>(n)] - rest;
  }
  return kappa;
}

}  // namespace fubm::testing
