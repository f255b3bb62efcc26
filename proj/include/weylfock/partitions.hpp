#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "weylfock/core.hpp"

namespace weylfock {

/// Partition: finite non-increasing sequence of positive integers.
/// The empty sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  Int weight() const;
  Int size() const { return static_cast<Int>(parts_.size()); }
  Int part(Int i) const;  // 1-based, 0 beyond the last part
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Int> parts_;
};

/// Beta-set: finite strictly increasing sequence of non-negative integers.
class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<Int> elements);

  const std::vector<Int>& elements() const { return elems_; }
  Int size() const { return static_cast<Int>(elems_.size()); }
  bool contains(Int x) const;
  bool empty() const { return elems_.empty(); }

  auto operator<=>(const BetaSet&) const = default;

 private:
  std::vector<Int> elems_;
};

/// Beta-set of lambda with the given number of elements,
/// {a_t, a_{t-1}+1, ..., a_1+t-1} padded by the size-shift rule.
BetaSet beta_set(const Partition& lambda, Int size);

/// Inverse of beta_set up to shift equivalence.
Partition partition_of(const BetaSet& beta);

/// d-shift: {0,...,d-1} union (beta + d).
BetaSet shift(const BetaSet& beta, Int d);

/// Maximal un-shift; the canonical representative contains no 0 (or is empty).
BetaSet reduce(const BetaSet& beta);

/// All pairs (x, x+d) with x in beta and x+d not in beta.
std::vector<std::pair<Int, Int>> d_hooks(const BetaSet& beta, Int d);

/// Delete x, insert x+d.
BetaSet add_hook(const BetaSet& beta, std::pair<Int, Int> hook);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

// --- Young diagram boxes -------------------------------------------------

/// A box of a Young diagram, rows and columns are 1-based.
struct Box {
  Int row = 0;
  Int col = 0;
  auto operator<=>(const Box&) const = default;
};

/// Content col - row (charge 0).
inline Int content(Box b) { return b.col - b.row; }

std::vector<Box> addable_boxes(const Partition& lambda);
std::vector<Box> removable_boxes(const Partition& lambda);
Partition add_box(const Partition& lambda, Box b);
Partition remove_box(const Partition& lambda, Box b);

/// All partitions of n in lexicographically sorted order.
std::vector<Partition> partitions_of(Int n);

/// All bipartitions (mu1, mu2) with |mu1| + |mu2| = n.
std::vector<std::pair<Partition, Partition>> bipartitions_of(Int n);

}  // namespace weylfock
