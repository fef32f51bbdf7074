#include "fubm/rdiag.hpp"

#include <algorithm>
#include <string>

#include "fubm/cumulants.hpp"
#include "fubm/errors.hpp"

namespace fubm {

namespace {

Rational signed_catalan(unsigned m) {
  Rational c(catalan(m));
  return m % 2 == 0 ? c : Rational(-c);
}

Word parity_word(const Block& b) {
  Word w;
  for (int e : b) w.push_back(e % 2 == 1 ? Letter::One : Letter::Star);
  return w;
}

bool contained_in(const Block& b, const std::vector<char>& mask) {
  return std::all_of(b.begin(), b.end(), [&](int e) { return mask[static_cast<std::size_t>(e)] != 0; });
}

NCPartition pair_partition(int n2) {
  std::vector<int> labels(static_cast<std::size_t>(n2));
  for (int i = 0; i < n2; ++i) labels[static_cast<std::size_t>(i)] = i / 2;
  return NCPartition::from_labels(labels);
}

std::vector<char> mask_of(const std::vector<int>& set, int n) {
  std::vector<char> m(static_cast<std::size_t>(n) + 1, 0);
  for (int e : set) m[static_cast<std::size_t>(e)] = 1;
  return m;
}

// Partition of {1..n} from blocks given as arbitrary labels.
NCPartition from_block_list(int n, const std::vector<Block>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int e : blocks[b]) labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
  if (std::count(labels.begin(), labels.end(), -1) != 0) throw InternalError("block list does not cover the ground set");
  return NCPartition::from_labels(labels);
}

}  // namespace

// ---------------------------------------------------------------- Distribution

Distribution::Distribution(std::vector<Rational> cumulants) : cumulants_(std::move(cumulants)) {
  if (cumulants_.empty()) throw SizeError("a distribution needs at least one cumulant");
}

Distribution Distribution::from_json(const Json& j) {
  if (!j.is_array()) throw StructureError("q-cumulants must be a JSON array of \"p/q\" strings");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_string())
      c.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer())
      c.emplace_back(v.get<long>());
    else
      throw StructureError("q-cumulant entries must be \"p/q\" strings");
  }
  return Distribution(std::move(c));
}

const Rational& Distribution::kappa(int n) const {
  if (n < 1) throw SizeError("cumulant order must be positive");
  if (n > max_order())
    throw InsufficientDataError("insufficient cumulant data: kappa_" + std::to_string(n) + " requested, only " +
                                std::to_string(max_order()) + " supplied");
  return cumulants_[static_cast<std::size_t>(n - 1)];
}

// ---------------------------------------------------------------- Haar side

bool is_alternating(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  if (n % 2 == 0) return is_even_alternating(w);
  // Odd: a rotation of (a, b, a, ..., b, a) with a != b.
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = w[(r + i) % n] != w[(r + i - 1) % n];
    if (ok) return true;
  }
  return false;
}

Rational haar_limit(const Word& w) {
  const Poly g = z_mobius(w).grade(0);
  if (g.degree() > 0) throw InternalError("grade 0 of Z is not constant");
  return g.coeff(0);
}

Rational haar_derivative(const Word& w) {
  const Poly g = z_mobius(w).grade(1);
  if (g.degree() > 0) throw InternalError("grade 1 of Z is not constant");
  return g.coeff(0);
}

// ---------------------------------------------------------------- q side

Rational mixed_q_cumulant(const Distribution& d, const QPattern& pattern) {
  if (pattern.empty()) throw SizeError("empty q pattern");
  std::vector<int> sigma_labels;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != 1 && pattern[i] != 2) throw StructureError("q pattern entries must be 1 or 2");
    for (int r = 0; r < pattern[i]; ++r) sigma_labels.push_back(static_cast<int>(i));
  }
  const int n = static_cast<int>(sigma_labels.size());
  if (n > kMaxEnumeration) throw SizeError("q pattern exceeds the enumeration limit");
  if (n > d.max_order())
    throw InsufficientDataError("insufficient cumulant data: the pattern needs kappa_" + std::to_string(n));
  const NCPartition sigma = NCPartition::from_labels(sigma_labels);
  const NCPartition top = NCPartition::one(n);
  Rational sum = 0;
  for (NCEnumerator e(n); !e.done(); e.next()) {
    const NCPartition pi = e.current();
    if (!(join(pi, sigma) == top)) continue;
    Rational prod = 1;
    for (const auto& b : pi.blocks()) {
      prod *= d.kappa(static_cast<int>(b.size()));
      if (prod == 0) break;
    }
    sum += prod;
  }
  return sum;
}

std::vector<Rational> alpha_sequence(const Distribution& d, int k_max) {
  if (k_max < 1 || k_max > kMaxEnumeration / 2) throw SizeError("k_max out of range");
  std::vector<Rational> kq2(static_cast<std::size_t>(k_max) + 1);
  for (int m = 1; m <= k_max; ++m) kq2[static_cast<std::size_t>(m)] = mixed_q_cumulant(d, QPattern(static_cast<std::size_t>(m), 2));
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) {
    Rational a = 0;
    for (NCEnumerator e(k); !e.done(); e.next()) {
      const NCPartition pi = e.current();
      Rational prod = moebius_to_one(pi);
      for (const auto& b : pi.blocks()) prod *= kq2[b.size()];
      a += prod;
    }
    out.push_back(a);
  }
  return out;
}

std::vector<Rational> beta_mobius(const Distribution& d, int k_max) {
  if (k_max < 1 || 2 * k_max - 1 > kMaxEnumeration) throw SizeError("k_max out of range");
  // plain[m] = kappa_m(q^2, ..., q^2); tail[m] = kappa_m(q^2, ..., q^2, q).
  std::vector<Rational> plain(static_cast<std::size_t>(k_max) + 1), tail(static_cast<std::size_t>(k_max) + 1);
  for (int m = 1; m <= k_max; ++m) {
    if (m < k_max) plain[m] = mixed_q_cumulant(d, QPattern(static_cast<std::size_t>(m), 2));
    QPattern p(static_cast<std::size_t>(m), 2);
    p.back() = 1;
    tail[m] = mixed_q_cumulant(d, p);
  }
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) {
    Rational b = 0;
    for (NCEnumerator e(k); !e.done(); e.next()) {
      const NCPartition pi = e.current();
      Rational prod = moebius_to_one(pi);
      for (const auto& blk : pi.blocks()) prod *= blk.back() == k ? tail[blk.size()] : plain[blk.size()];
      b += prod;
    }
    out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------- NC_w(2n)

std::vector<int> u_indices(const Word& w) {
  std::vector<int> u;
  for (std::size_t i = 1; i <= w.size(); ++i) u.push_back(w[i - 1] == Letter::One ? static_cast<int>(2 * i - 1) : static_cast<int>(2 * i));
  std::sort(u.begin(), u.end());
  return u;
}

std::vector<int> q_indices(const Word& w) {
  std::vector<int> q;
  for (std::size_t i = 1; i <= w.size(); ++i) q.push_back(w[i - 1] == Letter::One ? static_cast<int>(2 * i) : static_cast<int>(2 * i - 1));
  std::sort(q.begin(), q.end());
  return q;
}

OmegaNC nc_omega(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1 || n > kMaxOmegaWord) throw SizeError("nc_omega: word length must lie in 1.." + std::to_string(kMaxOmegaWord));
  OmegaNC out{w, u_indices(w), q_indices(w), {}};
  const int n2 = 2 * n;
  const std::vector<char> umask = mask_of(out.u_set, n2);
  const NCPartition pairs = pair_partition(n2);
  const NCPartition top = NCPartition::one(n2);

  std::vector<int> kind;  // per block: 0 unset, 1 U, 2 Q, 3 mixed
  for (NCEnumerator e(n2); !e.done(); e.next()) {
    const auto& labels = e.labels();
    // (ii) every block lies in U or in Q.
    kind.assign(labels.size(), 0);
    bool ok = true;
    for (int i = 0; i < n2 && ok; ++i) {
      const int k = umask[static_cast<std::size_t>(i + 1)] ? 1 : 2;
      int& slot = kind[static_cast<std::size_t>(labels[i])];
      if (slot == 0)
        slot = k;
      else if (slot != k)
        ok = false;
    }
    if (!ok) continue;
    const NCPartition tau = e.current();
    // (iii) exactly one odd U-block; (iv) it alternates up to rotation;
    // (v) even U-blocks alternate.
    int odd = 0;
    for (std::size_t b = 0; b < tau.size() && ok; ++b) {
      if (kind[b] != 1) continue;
      const Block& blk = tau.blocks()[b];
      if (blk.size() % 2 == 1) {
        ++odd;
        ok = odd == 1 && is_alternating(parity_word(blk));
      } else {
        ok = is_even_alternating(parity_word(blk));
      }
    }
    if (!ok || odd != 1) continue;
    // (i)
    if (!(join(tau, pairs) == top)) continue;
    out.partitions.push_back(tau);
  }
  std::sort(out.partitions.begin(), out.partitions.end());
  return out;
}

OmegaNC nc_omega_structured(int k) {
  if (k < 1 || 2 * k - 1 > kMaxEnumeration) throw SizeError("nc_omega_structured: k out of range");
  const Word w = alternating_odd(k);
  OmegaNC out{w, u_indices(w), q_indices(w), {}};
  const int n2 = 4 * k - 2;
  const GroundMap qmap(out.q_set);
  const int nq = qmap.n();

  auto u_fat = [](int i) -> Block { return i == 1 ? Block{1} : Block{4 * i - 4, 4 * i - 3}; };
  auto q_fat = [k](int j) -> Block { return j == k ? Block{4 * k - 2} : Block{4 * j - 2, 4 * j - 1}; };
  // Maps blocks of labels in Q to a partition of {1..nq}.
  auto on_q = [&](const std::vector<Block>& blocks) {
    std::vector<Block> rel;
    for (const auto& b : blocks) {
      Block r;
      for (int e : b) r.push_back(qmap.position(e));
      rel.push_back(std::move(r));
    }
    return from_block_list(nq, rel);
  };

  for (NCEnumerator e(k); !e.done(); e.next()) {
    const NCPartition pi = e.current();
    const NCPartition rho = kreweras(pi);

    std::vector<Block> pi_fat;
    for (const auto& b : pi.blocks()) {
      Block fat;
      for (int i : b)
        for (int x : u_fat(i)) fat.push_back(x);
      pi_fat.push_back(std::move(fat));
    }
    std::vector<Block> rho_fat, pairing;
    for (const auto& b : rho.blocks()) {
      Block fat;
      for (int j : b)
        for (int x : q_fat(j)) fat.push_back(x);
      rho_fat.push_back(std::move(fat));
      const std::size_t p = b.size();
      if (b.back() != k) {
        for (std::size_t i = 0; i + 1 < p; ++i) pairing.push_back({4 * b[i] - 1, 4 * b[i + 1] - 2});
        pairing.push_back({4 * b.front() - 2, 4 * b.back() - 1});
      } else {
        pairing.push_back({4 * b.front() - 2});
        for (std::size_t i = 0; i + 1 < p; ++i) pairing.push_back({4 * b[i] - 1, 4 * b[i + 1] - 2});
      }
    }
    NCPartition rho_q, pair_q;
    try {
      rho_q = on_q(rho_fat);
      pair_q = on_q(pairing);
    } catch (const StructureError&) {
      throw InternalError("fat-point construction produced a crossing partition");
    }

    for (NCEnumerator s(nq); !s.done(); s.next()) {
      const NCPartition sigma = s.current();
      if (!leq(sigma, rho_q) || !(join(sigma, pair_q) == rho_q)) continue;
      std::vector<Block> blocks = pi_fat;
      for (const auto& b : sigma.blocks()) {
        Block lifted;
        for (int x : b) lifted.push_back(qmap.label(x));
        blocks.push_back(std::move(lifted));
      }
      try {
        out.partitions.push_back(from_block_list(n2, blocks));
      } catch (const StructureError&) {
        throw InternalError("structured generator produced a crossing partition");
      }
    }
  }
  std::sort(out.partitions.begin(), out.partitions.end());
  return out;
}

Rational term_u(const NCPartition& tau, const std::vector<int>& u_set) {
  const std::vector<char> umask = mask_of(u_set, tau.n());
  Rational prod = 1;
  for (const auto& b : tau.blocks()) {
    if (!contained_in(b, umask)) continue;
    const unsigned r = static_cast<unsigned>(b.size());
    prod *= r % 2 == 1 ? signed_catalan((r - 1) / 2) : signed_catalan((r - 2) / 2);
  }
  return prod;
}

Rational term_q(const Distribution& d, const NCPartition& tau, const std::vector<int>& q_set) {
  const std::vector<char> qmask = mask_of(q_set, tau.n());
  Rational prod = 1;
  for (const auto& b : tau.blocks())
    if (contained_in(b, qmask)) prod *= d.kappa(static_cast<int>(b.size()));
  return prod;
}

Rational beta_from_omega(const Distribution& d, const OmegaNC& omega) {
  Rational sum = 0;
  for (const auto& tau : omega.partitions) sum += term_u(tau, omega.u_set) * term_q(d, tau, omega.q_set);
  return sum;
}

Rational beta_enumeration(const Distribution& d, const Word& w) { return beta_from_omega(d, nc_omega(w)); }

}  // namespace fubm
