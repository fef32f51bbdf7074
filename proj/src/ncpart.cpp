#include "fubm/ncpart.hpp"

#include <algorithm>
#include <numeric>

#include "fubm/errors.hpp"

namespace fubm {

namespace {

void check_size(int n) {
  if (n < 1) throw SizeError("partition size must be positive");
}

// Relabels so block ids follow first occurrence: 0, 1, 2, ...
std::vector<int> canonicalize(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& kv) { return kv.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<int>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

// Stack scan over canonical labels. Returns a crossing pair of block ids or
// {-1,-1}.
std::pair<int, int> find_crossing(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  const int nb = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<int> first(nb, -1), last(nb, -1);
  for (int i = 0; i < n; ++i) {
    if (first[labels[i]] < 0) first[labels[i]] = i;
    last[labels[i]] = i;
  }
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    const int b = labels[i];
    if (first[b] == i) {
      if (last[b] != i) stack.push_back(b);
      continue;
    }
    if (stack.back() != b) return {stack.back(), b};
    if (last[b] == i) stack.pop_back();
  }
  return {-1, -1};
}

std::vector<int> labels_from_blocks(int n, const std::vector<Block>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw StructureError("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw StructureError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      if (labels[static_cast<std::size_t>(e - 1)] >= 0) throw StructureError("element " + std::to_string(e) + " repeated");
      labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i)
    if (labels[static_cast<std::size_t>(i)] < 0) throw StructureError("element " + std::to_string(i + 1) + " missing");
  return labels;
}

int total_elements(const std::vector<Block>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return static_cast<int>(total);
}

}  // namespace

// ---------------------------------------------------------------- NCPartition

NCPartition::NCPartition(int n, std::vector<int> canonical_labels) : n_(n), labels_(std::move(canonical_labels)) {
  const int nb = n == 0 ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
  blocks_.resize(static_cast<std::size_t>(nb));
  for (int i = 0; i < n; ++i) blocks_[static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)])].push_back(i + 1);
}

NCPartition NCPartition::from_labels(const std::vector<int>& labels) {
  check_size(static_cast<int>(labels.size()));
  auto canon = canonicalize(labels);
  if (find_crossing(canon).first >= 0) throw StructureError("partition is crossing");
  return NCPartition(static_cast<int>(labels.size()), std::move(canon));
}

NCPartition NCPartition::from_blocks(int n, std::vector<Block> blocks) {
  check_size(n);
  return from_labels(labels_from_blocks(n, blocks));
}

NCPartition NCPartition::zero(int n) {
  check_size(n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return NCPartition(n, std::move(labels));
}

NCPartition NCPartition::one(int n) {
  check_size(n);
  return NCPartition(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

// ---------------------------------------------------------------- GroundMap

GroundMap::GroundMap(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i)
    if (labels_[i] <= labels_[i - 1]) throw StructureError("ground labels must be strictly increasing");
}

int GroundMap::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw StructureError("label " + std::to_string(label) + " not in ground set");
  return static_cast<int>(it - labels_.begin()) + 1;
}

// ---------------------------------------------------------------- lattice

Integer catalan(unsigned k) {
  Integer num, den;
  mpz_fac_ui(num.get_mpz_t(), 2 * k);
  Integer a, b;
  mpz_fac_ui(a.get_mpz_t(), k);
  mpz_fac_ui(b.get_mpz_t(), k + 1);
  den = a * b;
  return num / den;
}

bool is_noncrossing(const std::vector<Block>& blocks) {
  const int n = total_elements(blocks);
  check_size(n);
  return find_crossing(canonicalize(labels_from_blocks(n, blocks))).first < 0;
}

bool leq(const NCPartition& p, const NCPartition& r) {
  if (p.n() != r.n()) throw SizeError("partitions live on different ground sets");
  for (const auto& block : p.blocks()) {
    const int target = r.block_of(block.front());
    for (int e : block)
      if (r.block_of(e) != target) return false;
  }
  return true;
}

NCPartition join(const NCPartition& p, const NCPartition& r) {
  if (p.n() != r.n()) throw SizeError("partitions live on different ground sets");
  const int n = p.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* part : {&p, &r})
    for (const auto& block : part->blocks())
      for (int e : block) unite(block.front() - 1, e - 1);

  std::vector<int> labels(static_cast<std::size_t>(n));
  for (;;) {
    for (int i = 0; i < n; ++i) labels[i] = find(i);
    labels = canonicalize(labels);
    auto [a, b] = find_crossing(labels);
    if (a < 0) break;
    int ea = -1, eb = -1;
    for (int i = 0; i < n; ++i) {
      if (labels[i] == a && ea < 0) ea = i;
      if (labels[i] == b && eb < 0) eb = i;
    }
    unite(ea, eb);
  }
  return NCPartition::from_labels(labels);
}

NCPartition kreweras(const NCPartition& p) {
  const int n = p.n();
  // prev[i] = predecessor of i inside its block, cyclically.
  std::vector<int> prev(static_cast<std::size_t>(n + 1));
  for (const auto& block : p.blocks())
    for (std::size_t j = 0; j < block.size(); ++j) prev[block[j]] = block[(j + block.size() - 1) % block.size()];
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next_id = 0;
  for (int start = 1; start <= n; ++start) {
    if (labels[start - 1] >= 0) continue;
    int i = start;
    while (labels[i - 1] < 0) {
      labels[i - 1] = next_id;
      i = prev[i % n + 1];
    }
    ++next_id;
  }
  return NCPartition::from_labels(labels);
}

Rational moebius_from_zero(const NCPartition& r) {
  Integer acc = 1;
  for (const auto& block : r.blocks()) {
    const unsigned m = static_cast<unsigned>(block.size()) - 1;
    acc *= catalan(m);
    if (m % 2 == 1) acc = -acc;
  }
  return Rational(acc);
}

Rational moebius_to_one(const NCPartition& p) { return moebius_from_zero(kreweras(p)); }

Restricted restrict(const NCPartition& p, const std::vector<int>& subset) {
  if (subset.empty()) throw SizeError("restriction to the empty set");
  GroundMap ground(subset);
  std::vector<int> labels;
  labels.reserve(subset.size());
  for (int e : subset) {
    if (e < 1 || e > p.n()) throw StructureError("restriction subset leaves the ground set");
    labels.push_back(p.block_of(e));
  }
  return {NCPartition::from_labels(labels), std::move(ground)};
}

// ---------------------------------------------------------------- enumeration

NCEnumerator::NCEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumeration)
    throw SizeError("enumerate: n must lie in 1.." + std::to_string(kMaxEnumeration));
  stacks_.resize(static_cast<std::size_t>(n));
  choice_.assign(static_cast<std::size_t>(n), 0);
  labels_.assign(static_cast<std::size_t>(n), 0);
  nblocks_.assign(static_cast<std::size_t>(n) + 1, 0);
  fill_from(0);
}

void NCEnumerator::fill_from(int i) {
  for (; i < n_; ++i) {
    std::vector<int> stack = stacks_[i];
    const int c = choice_[i];
    const int s = static_cast<int>(stack.size());
    int nb = nblocks_[i];
    if (c < s) {
      labels_[i] = stack[c];
      stack.resize(static_cast<std::size_t>(c) + 1);
    } else {
      labels_[i] = nb;
      stack.push_back(nb++);
    }
    nblocks_[i + 1] = nb;
    if (i + 1 < n_) {
      stacks_[i + 1] = std::move(stack);
      choice_[i + 1] = 0;
    }
  }
}

void NCEnumerator::next() {
  if (done_) return;
  for (int i = n_ - 1; i >= 0; --i) {
    if (choice_[i] < static_cast<int>(stacks_[i].size())) {
      ++choice_[i];
      fill_from(i);
      return;
    }
  }
  done_ = true;
}

NCRange enumerate(int n) {
  if (n < 1 || n > kMaxEnumeration)
    throw SizeError("enumerate: n must lie in 1.." + std::to_string(kMaxEnumeration));
  return NCRange(n);
}

void for_each_nc(int n, const std::function<void(const NCPartition&)>& fn) {
  for (NCEnumerator e(n); !e.done(); e.next()) fn(e.current());
}

std::uint64_t count_nc(int n) {
  std::uint64_t count = 0;
  for (NCEnumerator e(n); !e.done(); e.next()) ++count;
  return count;
}

// ---------------------------------------------------------------- I/O

std::string to_string(const NCPartition& p) { return to_json(p).dump(); }

Json to_json(const NCPartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(b);
  return out;
}

NCPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw StructureError("partition must be a JSON array of blocks");
  std::vector<Block> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw StructureError("block must be a JSON array");
    Block block;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw StructureError("block entries must be integers");
      block.push_back(e.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  const int n = total_elements(blocks);
  return NCPartition::from_blocks(n, std::move(blocks));
}

}  // namespace fubm
