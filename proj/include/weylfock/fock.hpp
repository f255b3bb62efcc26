#pragma once

#include <map>
#include <vector>

#include "weylfock/partitions.hpp"
#include "weylfock/qarith.hpp"

namespace weylfock {

/// |lambda, xi>: an l-tuple of partitions with charges xi_p in I.
/// Only the generic case (q of infinite order) is supported; the quiver
/// is A_inf ⊔ A_inf and residues live in q^Z ⊔ -q^Z.
struct ChargedMultipartition {
  std::vector<Partition> lambdas;
  std::vector<QIndex> xis;

  auto operator<=>(const ChargedMultipartition&) const = default;
};

void validate(const ChargedMultipartition& v);

/// Formal integer combination of basis vectors (all over the same charges).
using FockVector = std::map<ChargedMultipartition, Int>;

/// Finite-support weight in fundamental-weight coordinates i -> N_i.
using Weight = std::map<QIndex, Int>;

/// A box of the multipartition diagram: (row, col) in component p (1-based).
struct MultiBox {
  Int row = 0;
  Int col = 0;
  Int comp = 1;
};

/// q-res(A) = q^(col-row) * xi_p = (sign of xi_p, s_p + col - row).
QIndex box_residue(MultiBox box, const std::vector<QIndex>& xis);

/// #addable i-nodes - #removable i-nodes.
Int n_i(const ChargedMultipartition& v, QIndex i);

/// All residues of addable nodes of v (with multiplicity collapsed).
std::vector<QIndex> addable_residues(const ChargedMultipartition& v);
std::vector<QIndex> removable_residues(const ChargedMultipartition& v);

/// Uglov action: sum over ways of adding (removing) one i-node, unit
/// coefficients.
FockVector f_apply(const ChargedMultipartition& v, QIndex i);
FockVector e_apply(const ChargedMultipartition& v, QIndex i);
FockVector f_apply(const FockVector& v, QIndex i);
FockVector e_apply(const FockVector& v, QIndex i);

/// wt(|lambda, xi>) = sum_i N_i Lambda_i with finite support.
Weight weight(const ChargedMultipartition& v);

FockVector scale(const ChargedMultipartition& v, Int c);
FockVector add(const FockVector& a, const FockVector& b);
FockVector sub(const FockVector& a, const FockVector& b);

}  // namespace weylfock
