#include "fubm/cumulants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "fubm/errors.hpp"
#include "fubm/ncpart.hpp"

namespace fubm {

namespace {

const Poly& cached_Q(int d) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, biane_Q(d)).first;
  return it->second;
}

std::mutex z_mu;
std::map<Word, QuasiPoly> z_cache;

Word rotated(const Word& w, std::size_t start) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(start + i) % w.size()];
  return out;
}

}  // namespace

QuasiPoly z_mobius(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1 || n > kMaxMobiusWord)
    throw SizeError("z_mobius: word length must lie in 1.." + std::to_string(kMaxMobiusWord));

  std::map<int, Poly> acc;
  std::vector<int> balance;
  for (NCEnumerator e(n); !e.done(); e.next()) {
    const NCPartition pi = e.current();
    balance.assign(pi.size(), 0);
    for (int i = 0; i < n; ++i) balance[static_cast<std::size_t>(pi.labels()[i])] += w[i] == Letter::One ? 1 : -1;
    int ypow = 0;
    Poly prod = Poly::constant(moebius_to_one(pi));
    for (int b : balance) {
      const int d = std::abs(b);
      if (d == 0) continue;
      ypow += d;
      prod = prod * cached_Q(d);
    }
    acc[-ypow] += prod;
  }
  QuasiPoly out;
  for (auto& [e, p] : acc) out += QuasiPoly::term(e, std::move(p));
  return out;
}

int switch_number(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != w[(i + 1) % w.size()]) ++s;
  return s;
}

Word canonical_word(const Word& w) {
  Word best = w;
  const Word rev(w.rbegin(), w.rend());
  for (const Word* base : {&w, &rev}) {
    for (bool swap : {false, true}) {
      Word v = *base;
      if (swap)
        for (auto& a : v) a = a == Letter::One ? Letter::Star : Letter::One;
      for (std::size_t r = 0; r < v.size(); ++r) best = std::min(best, rotated(v, r));
    }
  }
  return best;
}

bool is_even_alternating(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

Rational haar_cumulant(const Word& w) {
  if (!is_even_alternating(w)) return 0;
  const unsigned k = static_cast<unsigned>(w.size() / 2);
  Rational c(catalan(k - 1));
  return k % 2 == 1 ? c : Rational(-c);
}

void clear_z_cache() {
  std::lock_guard<std::mutex> lock(z_mu);
  z_cache.clear();
}

QuasiPoly z_recursive(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1) throw SizeError("empty word");
  const Word key = canonical_word(w);
  {
    std::lock_guard<std::mutex> lock(z_mu);
    auto it = z_cache.find(key);
    if (it != z_cache.end()) return it->second;
  }

  QuasiPoly value;
  if (count_ones(w) == 0 || count_stars(w) == 0) {
    value = diag_cumulant(n);
  } else if (n <= 2) {
    value = z_mobius(w);
  } else {
    std::size_t start = 0;
    while (!(w[start] == Letter::One && w[(start + w.size() - 1) % w.size()] == Letter::Star)) ++start;
    const Word v = rotated(w, start);
    for (int m = 1; m < n; ++m) {
      const Word prefix(v.begin(), v.begin() + m);
      const Word suffix(v.begin() + m, v.end());
      value -= z_recursive(prefix) * z_recursive(suffix);
    }
  }

  std::lock_guard<std::mutex> lock(z_mu);
  auto [it, inserted] = z_cache.emplace(key, value);
  if (!inserted && !(it->second == value)) throw InternalError("z_recursive cache collision with differing values");
  return value;
}

}  // namespace fubm
