#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "weylfock/core.hpp"

namespace weylfock {

/// A point of the spectrum I = q^Z ⊔ -q^Z: the root sign * q^exponent.
/// q is never evaluated numerically, so q^a = q^b iff a = b and signed
/// roots never collide across signs.
struct QIndex {
  int sign = 1;  // +1 or -1
  Int exp = 0;

  auto operator<=>(const QIndex&) const = default;
};

inline QIndex q_times(QIndex i, Int k) { return {i.sign, i.exp + k}; }
inline QIndex negated(QIndex i) { return {-i.sign, i.exp}; }

/// Negation of a root under the substitution u -> -u.
inline Int root_negate(Int r) { return -r; }
inline QIndex root_negate(QIndex r) { return negated(r); }

namespace detail {
// Multiset difference of two sorted vectors: common elements cancel.
template <class A>
void multiset_cancel(const std::vector<A>& zeros, const std::vector<A>& poles,
                     std::vector<A>& z_out, std::vector<A>& p_out) {
  size_t i = 0, j = 0;
  while (i < zeros.size() && j < poles.size()) {
    if (zeros[i] < poles[j]) z_out.push_back(zeros[i++]);
    else if (poles[j] < zeros[i]) p_out.push_back(poles[j++]);
    else { ++i; ++j; }
  }
  for (; i < zeros.size(); ++i) z_out.push_back(zeros[i]);
  for (; j < poles.size(); ++j) p_out.push_back(poles[j]);
}
}  // namespace detail

/// Cancel-reduced multiset ratio of roots over an exact alphabet
/// (Int contents or QIndex signed q-powers). This is the zero/pole
/// representation of the monic rational functions m/n; there is no
/// addition, only products and cancellation.
template <class A>
class RootRatio {
 public:
  RootRatio() = default;

  static RootRatio make(std::vector<A> zeros, std::vector<A> poles) {
    std::sort(zeros.begin(), zeros.end());
    std::sort(poles.begin(), poles.end());
    std::vector<A> z, p;
    detail::multiset_cancel(zeros, poles, z, p);
    return RootRatio(std::move(z), std::move(p));
  }

  const std::vector<A>& zeros() const { return zeros_; }
  const std::vector<A>& poles() const { return poles_; }

  bool is_polynomial() const { return poles_.empty(); }
  bool is_one() const { return zeros_.empty() && poles_.empty(); }

  RootRatio inverse() const { return RootRatio(poles_, zeros_); }

  friend RootRatio product(const RootRatio& a, const RootRatio& b) {
    std::vector<A> zeros = a.zeros_, poles = a.poles_;
    zeros.insert(zeros.end(), b.zeros_.begin(), b.zeros_.end());
    poles.insert(poles.end(), b.poles_.begin(), b.poles_.end());
    return make(std::move(zeros), std::move(poles));
  }

  /// u -> -u at root level; an involution.
  RootRatio negate_variable() const {
    std::vector<A> z = zeros_, p = poles_;
    for (A& r : z) r = root_negate(r);
    for (A& r : p) r = root_negate(r);
    std::sort(z.begin(), z.end());
    std::sort(p.begin(), p.end());
    return RootRatio(std::move(z), std::move(p));
  }

  auto operator<=>(const RootRatio&) const = default;

 private:
  RootRatio(std::vector<A> z, std::vector<A> p) : zeros_(std::move(z)), poles_(std::move(p)) {}

  std::vector<A> zeros_, poles_;  // sorted, disjoint as multisets
};

using ContentRatio = RootRatio<Int>;
using ResidueRatio = RootRatio<QIndex>;

}  // namespace weylfock
