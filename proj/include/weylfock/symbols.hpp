#pragma once

#include <compare>
#include <vector>

#include "weylfock/partitions.hpp"

namespace weylfock {

/// Ordered Lusztig symbol: a pair of strictly decreasing rows of
/// non-negative integers. Rows are stored decreasing, matching the paper's
/// display (beta-sets in the partitions module are stored increasing).
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::vector<Int> row_x, std::vector<Int> row_y);

  const std::vector<Int>& row_x() const { return x_; }
  const std::vector<Int>& row_y() const { return y_; }

  auto operator<=>(const Symbol&) const = default;

 private:
  std::vector<Int> x_, y_;
};

struct Bipartition {
  Partition first;
  Partition second;
  auto operator<=>(const Bipartition&) const = default;
};

struct SymbolInvariants {
  Int rank = 0;
  Int defect = 0;
};

/// rank = sum of entries - floor(((|X|+|Y|-1)/2)^2), defect = |X| - |Y|.
SymbolInvariants invariants(const Symbol& s);
Int rank(const Symbol& s);
Int defect(const Symbol& s);

/// Maximal simultaneous un-shift; canonical form has NOT (0 in X and 0 in Y).
Symbol reduce_symbol(const Symbol& s);

/// True iff the two symbols are simultaneous-shift equivalent.
bool equivalent(const Symbol& a, const Symbol& b);

/// Row swap; negates the defect, preserves the rank.
Symbol transpose(const Symbol& s);

/// rank = floor((defect/2)^2).
bool is_cuspidal(const Symbol& s);

/// X == Y on the reduced form.
bool is_degenerate(const Symbol& s);

/// Strip the staircase: mu1_j = a_j - (m1 - j), mu2 likewise.
Bipartition upsilon(const Symbol& s);

/// Rebuild the reduced symbol of the given defect from a bipartition.
Symbol upsilon_inverse(const Bipartition& b, Int defect);

/// Swap the two components of upsilon(s) keeping the defect.
Symbol upsilon_swap(const Symbol& s);

/// Membership families of Eq. (S); the test is a defect congruence mod 4.
enum class SymbolFamily { OplusEven, SpOrSOodd, OminusEven };

bool family_member(const Symbol& s, SymbolFamily fam);

/// Row of a symbol.
enum class SymbolRow { X, Y };

struct HookAddition {
  Symbol result;      // reduced
  SymbolRow row;
  Int content;        // charge-0 content of the box added through upsilon
  auto operator<=>(const HookAddition&) const = default;
};

/// All 1-hook additions (equivalently, boxes addable to the two partitions
/// of upsilon(s)); each result has rank+1 and the same defect.
std::vector<HookAddition> one_hook_additions(const Symbol& s);

/// All 1-hook removals; each result has rank-1 and the same defect.
std::vector<HookAddition> one_hook_removals(const Symbol& s);

/// Kinds of cuspidal symbol labellings.
enum class CuspidalKind {
  SpLike,          // Sp / SO_odd / O_odd: t in N, defect (-1)^t (2t+1), rank t^2+t
  EvenOrthogonal,  // O^+-/O^- even: t in Z, defect 2t, rank t^2
};

Symbol cuspidal_symbol(Int t, CuspidalKind kind);

/// Reads t back from the defect of a (core of a) symbol.
Int cuspidal_t_from_defect(Int defect, CuspidalKind kind);

/// All reduced symbols with the given rank and defect.
std::vector<Symbol> symbols_of(Int rank, Int defect);

}  // namespace weylfock
