#pragma once

// Non-crossing partitions of {1,...,n}: enumeration, lattice operations,
// Kreweras complement and the two Moebius values needed downstream.

#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "fubm/json_fwd.hpp"
#include "fubm/qpoly.hpp"

namespace fubm {

/// Largest n accepted by enumerate(). C_16 = 35357670.
inline constexpr int kMaxEnumeration = 16;

using Block = std::vector<int>;

/// Immutable non-crossing partition in canonical form: blocks sorted by
/// minimum, elements sorted inside each block, elements are 1-based.
class NCPartition {
 public:
  NCPartition() = default;

  /// Validates that `blocks` partition {1..n} and are non-crossing.
  static NCPartition from_blocks(int n, std::vector<Block> blocks);
  /// labels[i] = block id of element i+1; ids are arbitrary integers.
  static NCPartition from_labels(const std::vector<int>& labels);
  static NCPartition zero(int n);
  static NCPartition one(int n);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// Index into blocks() of the block holding element i (1-based).
  int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const NCPartition& a, const NCPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const NCPartition& a, const NCPartition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.blocks_ < b.blocks_;
  }

 private:
  NCPartition(int n, std::vector<int> canonical_labels);
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> labels_;
};

/// Strictly increasing labels identifying a finite ordered set with {1..n}.
class GroundMap {
 public:
  GroundMap() = default;
  explicit GroundMap(std::vector<int> labels);
  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  /// Label of position i (1-based).
  int label(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  /// Position (1-based) of a label; StructureError if absent.
  int position(int label) const;

 private:
  std::vector<int> labels_;
};

struct Restricted {
  NCPartition partition;
  GroundMap ground;
};

Integer catalan(unsigned k);

/// StructureError unless blocks form a set partition of {1..n}.
bool is_noncrossing(const std::vector<Block>& blocks);
bool leq(const NCPartition& p, const NCPartition& r);
NCPartition join(const NCPartition& p, const NCPartition& r);
NCPartition kreweras(const NCPartition& p);
Rational moebius_from_zero(const NCPartition& r);
Rational moebius_to_one(const NCPartition& p);
Restricted restrict(const NCPartition& p, const std::vector<int>& subset);

/// Lazy enumeration of NC(n). A stack odometer: element i either opens a new
/// block or joins an open block, closing every block opened above it.
class NCEnumerator {
 public:
  explicit NCEnumerator(int n);
  bool done() const { return done_; }
  /// Canonical labels of the current partition.
  const std::vector<int>& labels() const { return labels_; }
  NCPartition current() const { return NCPartition::from_labels(labels_); }
  void next();

 private:
  void fill_from(int i);
  int n_;
  bool done_ = false;
  std::vector<std::vector<int>> stacks_;
  std::vector<int> choice_;
  std::vector<int> labels_;
  std::vector<int> nblocks_;
};

class NCRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = NCPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const NCPartition*;
    using reference = NCPartition;

    iterator() = default;
    explicit iterator(int n) : e_(std::make_shared<NCEnumerator>(n)) {}
    NCPartition operator*() const { return e_->current(); }
    iterator& operator++() {
      e_->next();
      return *this;
    }
    bool operator==(const iterator& o) const { return at_end() == o.at_end(); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    bool at_end() const { return !e_ || e_->done(); }
    std::shared_ptr<NCEnumerator> e_;
  };

  explicit NCRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return {}; }

 private:
  int n_;
};

/// SizeError for n < 1 or n > kMaxEnumeration.
NCRange enumerate(int n);
void for_each_nc(int n, const std::function<void(const NCPartition&)>& fn);
std::uint64_t count_nc(int n);

std::string to_string(const NCPartition& p);
Json to_json(const NCPartition& p);
/// Parses [[1,4,5],[2,3]]; n is the total element count.
NCPartition partition_from_json(const Json& j);

}  // namespace fubm
