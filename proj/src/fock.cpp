#include "weylfock/fock.hpp"

#include <algorithm>

namespace weylfock {

void validate(const ChargedMultipartition& v) {
  if (v.lambdas.empty()) throw domain_error("charged multipartition needs l >= 1 components");
  if (v.lambdas.size() != v.xis.size())
    throw domain_error("charged multipartition: component/charge count mismatch");
  for (const QIndex& xi : v.xis)
    if (xi.sign != 1 && xi.sign != -1) throw domain_error("charge signs must be +1 or -1");
}

QIndex box_residue(MultiBox box, const std::vector<QIndex>& xis) {
  if (box.comp < 1 || box.comp > static_cast<Int>(xis.size()))
    throw domain_error("box_residue: component out of range");
  const QIndex& xi = xis[static_cast<size_t>(box.comp - 1)];
  return {xi.sign, xi.exp + box.col - box.row};
}

namespace {

template <class Fn>
void for_each_addable(const ChargedMultipartition& v, Fn&& fn) {
  for (size_t p = 0; p < v.lambdas.size(); ++p)
    for (Box b : addable_boxes(v.lambdas[p]))
      fn(static_cast<Int>(p + 1), b, box_residue({b.row, b.col, static_cast<Int>(p + 1)}, v.xis));
}

template <class Fn>
void for_each_removable(const ChargedMultipartition& v, Fn&& fn) {
  for (size_t p = 0; p < v.lambdas.size(); ++p)
    for (Box b : removable_boxes(v.lambdas[p]))
      fn(static_cast<Int>(p + 1), b, box_residue({b.row, b.col, static_cast<Int>(p + 1)}, v.xis));
}

void accumulate(FockVector& acc, const ChargedMultipartition& v, Int c) {
  auto it = acc.find(v);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

}  // namespace

Int n_i(const ChargedMultipartition& v, QIndex i) {
  Int n = 0;
  for_each_addable(v, [&](Int, Box, QIndex res) { if (res == i) ++n; });
  for_each_removable(v, [&](Int, Box, QIndex res) { if (res == i) --n; });
  return n;
}

std::vector<QIndex> addable_residues(const ChargedMultipartition& v) {
  std::vector<QIndex> out;
  for_each_addable(v, [&](Int, Box, QIndex res) { out.push_back(res); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QIndex> removable_residues(const ChargedMultipartition& v) {
  std::vector<QIndex> out;
  for_each_removable(v, [&](Int, Box, QIndex res) { out.push_back(res); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FockVector f_apply(const ChargedMultipartition& v, QIndex i) {
  FockVector out;
  for_each_addable(v, [&](Int p, Box b, QIndex res) {
    if (res != i) return;
    ChargedMultipartition w = v;
    w.lambdas[static_cast<size_t>(p - 1)] = add_box(v.lambdas[static_cast<size_t>(p - 1)], b);
    accumulate(out, w, 1);
  });
  return out;
}

FockVector e_apply(const ChargedMultipartition& v, QIndex i) {
  FockVector out;
  for_each_removable(v, [&](Int p, Box b, QIndex res) {
    if (res != i) return;
    ChargedMultipartition w = v;
    w.lambdas[static_cast<size_t>(p - 1)] = remove_box(v.lambdas[static_cast<size_t>(p - 1)], b);
    accumulate(out, w, 1);
  });
  return out;
}

FockVector f_apply(const FockVector& v, QIndex i) {
  FockVector out;
  for (const auto& [basis, c] : v)
    for (const auto& [w, d] : f_apply(basis, i)) accumulate(out, w, c * d);
  return out;
}

FockVector e_apply(const FockVector& v, QIndex i) {
  FockVector out;
  for (const auto& [basis, c] : v)
    for (const auto& [w, d] : e_apply(basis, i)) accumulate(out, w, c * d);
  return out;
}

Weight weight(const ChargedMultipartition& v) {
  Weight wt;
  for_each_addable(v, [&](Int, Box, QIndex res) { ++wt[res]; });
  for_each_removable(v, [&](Int, Box, QIndex res) { --wt[res]; });
  for (auto it = wt.begin(); it != wt.end();)
    it = (it->second == 0) ? wt.erase(it) : std::next(it);
  return wt;
}

FockVector scale(const ChargedMultipartition& v, Int c) {
  FockVector out;
  if (c != 0) out.emplace(v, c);
  return out;
}

FockVector add(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [w, c] : b) accumulate(out, w, c);
  return out;
}

FockVector sub(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [w, c] : b) accumulate(out, w, -c);
  return out;
}

}  // namespace weylfock
