#include "weylfock/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace weylfock {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i]) throw domain_error("partition parts must be non-increasing");
  }
}

Int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Int Partition::part(Int i) const {
  if (i < 1) throw domain_error("part index is 1-based");
  if (i > size()) return 0;
  return parts_[static_cast<size_t>(i - 1)];
}

BetaSet::BetaSet(std::vector<Int> elements) : elems_(std::move(elements)) {
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 0) throw domain_error("beta-set elements must be non-negative");
    if (i > 0 && elems_[i - 1] >= elems_[i]) throw domain_error("beta-set must be strictly increasing");
  }
}

bool BetaSet::contains(Int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

BetaSet beta_set(const Partition& lambda, Int size) {
  if (size < lambda.size()) throw domain_error("beta_set: size below part count");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(size));
  // elements a_i + (size - i) for i = 1..size, a_i = 0 beyond the last part
  for (Int i = size; i >= 1; --i) out.push_back(lambda.part(i) + (size - i));
  return BetaSet(std::move(out));
}

Partition partition_of(const BetaSet& beta) {
  const Int s = beta.size();
  std::vector<Int> parts;
  for (Int j = 0; j < s; ++j) {
    Int a = beta.elements()[static_cast<size_t>(s - 1 - j)] - (s - 1 - j);
    if (a > 0) parts.push_back(a);
  }
  return Partition(std::move(parts));
}

BetaSet shift(const BetaSet& beta, Int d) {
  if (d < 0) throw domain_error("shift amount must be non-negative");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(d + beta.size()));
  for (Int i = 0; i < d; ++i) out.push_back(i);
  for (Int x : beta.elements()) out.push_back(x + d);
  return BetaSet(std::move(out));
}

BetaSet reduce(const BetaSet& beta) {
  std::vector<Int> cur = beta.elements();
  while (!cur.empty() && cur.front() == 0) {
    cur.erase(cur.begin());
    for (Int& x : cur) --x;
  }
  return BetaSet(std::move(cur));
}

std::vector<std::pair<Int, Int>> d_hooks(const BetaSet& beta, Int d) {
  if (d < 1) throw domain_error("hook length must be positive");
  std::vector<std::pair<Int, Int>> hooks;
  for (Int x : beta.elements())
    if (!beta.contains(x + d)) hooks.emplace_back(x, x + d);
  return hooks;
}

BetaSet add_hook(const BetaSet& beta, std::pair<Int, Int> hook) {
  auto [x, y] = hook;
  if (!beta.contains(x) || beta.contains(y)) throw domain_error("not a hook of this beta-set");
  std::vector<Int> out;
  out.reserve(beta.elements().size());
  for (Int e : beta.elements())
    if (e != x) out.push_back(e);
  out.insert(std::upper_bound(out.begin(), out.end(), y), y);
  return BetaSet(std::move(out));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return Partition{};
  std::vector<Int> parts(static_cast<size_t>(lambda.parts()[0]), 0);
  for (Int p : lambda.parts())
    for (Int j = 0; j < p; ++j) ++parts[static_cast<size_t>(j)];
  return Partition(std::move(parts));
}

std::vector<Box> addable_boxes(const Partition& lambda) {
  std::vector<Box> out;
  const Int rows = lambda.size();
  for (Int i = 1; i <= rows; ++i)
    if (i == 1 || lambda.part(i - 1) > lambda.part(i)) out.push_back({i, lambda.part(i) + 1});
  out.push_back({rows + 1, 1});
  return out;
}

std::vector<Box> removable_boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (Int i = 1; i <= lambda.size(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
  return out;
}

Partition add_box(const Partition& lambda, Box b) {
  std::vector<Int> parts = lambda.parts();
  if (b.row == lambda.size() + 1) {
    if (b.col != 1) throw domain_error("add_box: not addable");
    parts.push_back(1);
    return Partition(std::move(parts));
  }
  if (b.row < 1 || b.row > lambda.size() || b.col != lambda.part(b.row) + 1)
    throw domain_error("add_box: not addable");
  ++parts[static_cast<size_t>(b.row - 1)];
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& lambda, Box b) {
  if (b.row < 1 || b.row > lambda.size() || b.col != lambda.part(b.row))
    throw domain_error("remove_box: not removable");
  std::vector<Int> parts = lambda.parts();
  --parts[static_cast<size_t>(b.row - 1)];
  if (parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(Int n) {
  if (n < 0) throw domain_error("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int rest, Int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, Partition>> bipartitions_of(Int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (Int k = 0; k <= n; ++k)
    for (const auto& a : partitions_of(k))
      for (const auto& b : partitions_of(n - k)) out.emplace_back(a, b);
  return out;
}

}  // namespace weylfock
