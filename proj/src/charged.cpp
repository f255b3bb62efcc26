#include "weylfock/charged.hpp"

#include <algorithm>
#include <numeric>

namespace weylfock {

Int InterlacingSequence::center() const {
  return std::accumulate(xs.begin(), xs.end(), Int{0}) -
         std::accumulate(ys.begin(), ys.end(), Int{0});
}

namespace {

void check_interlacing(const InterlacingSequence& seq) {
  if (seq.xs.empty()) throw domain_error("interlacing: xs must be non-empty");
  if (seq.ys.size() + 1 != seq.xs.size())
    throw domain_error("interlacing: ys must be one shorter than xs");
  for (size_t k = 0; k < seq.ys.size(); ++k) {
    if (!(seq.xs[k] < seq.ys[k] && seq.ys[k] < seq.xs[k + 1]))
      throw domain_error("interlacing violated");
  }
}

}  // namespace

InterlacingSequence to_interlacing(const ChargedPartition& cp) {
  InterlacingSequence seq;
  for (Box b : addable_boxes(cp.mu)) seq.xs.push_back(cp.charge + content(b));
  for (Box b : removable_boxes(cp.mu)) seq.ys.push_back(cp.charge + content(b));
  std::sort(seq.xs.begin(), seq.xs.end());
  std::sort(seq.ys.begin(), seq.ys.end());
  return seq;
}

ChargedPartition from_interlacing(const InterlacingSequence& seq) {
  check_interlacing(seq);
  const Int c = seq.center();
  // Occupied positions V = { c + mu_i - i : i >= 1 }: all t < x1 are
  // occupied and membership flips exactly at the marked contents
  // (addable t: occupied at t-1, free at t; removable t: the reverse).
  std::vector<Int> occupied_above;  // members of V that are >= x1, descending
  {
    bool occ = true;  // state v(t) while scanning t upward from x1
    size_t ix = 0, iy = 0;
    for (Int t = seq.xs.front(); t <= seq.xs.back(); ++t) {
      if (ix < seq.xs.size() && seq.xs[ix] == t) {
        occ = false;
        ++ix;
      } else if (iy < seq.ys.size() && seq.ys[iy] == t) {
        occ = true;
        ++iy;
      }
      if (occ) occupied_above.push_back(t);
    }
  }
  std::reverse(occupied_above.begin(), occupied_above.end());
  std::vector<Int> parts;
  Int i = 1;
  for (Int t : occupied_above) {
    Int p = t - c + i;
    if (p <= 0) throw domain_error("interlacing data does not come from a partition");
    parts.push_back(p);
    ++i;
  }
  ChargedPartition cp{Partition(std::move(parts)), c};
  if (to_interlacing(cp) != seq) throw domain_error("interlacing data does not come from a partition");
  return cp;
}

ContentRatio content_function(const ChargedPartition& cp) {
  std::vector<Int> zeros, poles;
  for (Box b : addable_boxes(cp.mu)) zeros.push_back(cp.charge + content(b));
  for (Box b : removable_boxes(cp.mu)) poles.push_back(cp.charge + content(b));
  return ContentRatio::make(std::move(zeros), std::move(poles));
}

ResidueRatio residue_function(const ChargedPartition& cp, int eps) {
  if (eps != 1 && eps != -1) throw domain_error("eps must be +1 or -1");
  std::vector<QIndex> zeros, poles;
  for (Box b : addable_boxes(cp.mu)) zeros.push_back({eps, cp.charge + content(b)});
  for (Box b : removable_boxes(cp.mu)) poles.push_back({eps, cp.charge + content(b)});
  return ResidueRatio::make(std::move(zeros), std::move(poles));
}

ChargedPartition invert_residue_function(const ResidueRatio& r, int eps) {
  if (eps != 1 && eps != -1) throw domain_error("eps must be +1 or -1");
  InterlacingSequence seq;
  for (QIndex z : r.zeros()) {
    if (z.sign != eps) throw domain_error("invert_residue_function: root of the wrong sign");
    seq.xs.push_back(z.exp);
  }
  for (QIndex p : r.poles()) {
    if (p.sign != eps) throw domain_error("invert_residue_function: root of the wrong sign");
    seq.ys.push_back(p.exp);
  }
  std::sort(seq.xs.begin(), seq.xs.end());
  std::sort(seq.ys.begin(), seq.ys.end());
  return from_interlacing(seq);
}

}  // namespace weylfock
