#include "weylfock/symbols.hpp"

#include <algorithm>
#include <numeric>

namespace weylfock {

namespace {

void check_row(const std::vector<Int>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw domain_error("symbol entries must be non-negative");
    if (i > 0 && row[i - 1] <= row[i]) throw domain_error("symbol rows must be strictly decreasing");
  }
}

bool has_zero(const std::vector<Int>& row) { return !row.empty() && row.back() == 0; }

std::vector<Int> unshift_row(std::vector<Int> row) {
  row.pop_back();
  for (Int& e : row) --e;
  return row;
}

// Entries mu_j + (m - j) for j = 1..m, decreasing.
std::vector<Int> row_from_partition(const Partition& mu, Int m) {
  std::vector<Int> row;
  row.reserve(static_cast<size_t>(m));
  for (Int j = 1; j <= m; ++j) row.push_back(mu.part(j) + (m - j));
  return row;
}

}  // namespace

Symbol::Symbol(std::vector<Int> row_x, std::vector<Int> row_y)
    : x_(std::move(row_x)), y_(std::move(row_y)) {
  check_row(x_);
  check_row(y_);
}

SymbolInvariants invariants(const Symbol& s) {
  Int sum = std::accumulate(s.row_x().begin(), s.row_x().end(), Int{0}) +
            std::accumulate(s.row_y().begin(), s.row_y().end(), Int{0});
  Int m = static_cast<Int>(s.row_x().size() + s.row_y().size());
  Int corr = (m - 1) * (m - 1) / 4;  // floor(((m-1)/2)^2), also right for m = 0
  return {sum - corr, static_cast<Int>(s.row_x().size()) - static_cast<Int>(s.row_y().size())};
}

Int rank(const Symbol& s) { return invariants(s).rank; }
Int defect(const Symbol& s) { return invariants(s).defect; }

Symbol reduce_symbol(const Symbol& s) {
  std::vector<Int> x = s.row_x(), y = s.row_y();
  while (has_zero(x) && has_zero(y)) {
    x = unshift_row(std::move(x));
    y = unshift_row(std::move(y));
  }
  return Symbol(std::move(x), std::move(y));
}

bool equivalent(const Symbol& a, const Symbol& b) { return reduce_symbol(a) == reduce_symbol(b); }

Symbol transpose(const Symbol& s) { return Symbol(s.row_y(), s.row_x()); }

bool is_cuspidal(const Symbol& s) {
  auto [r, d] = invariants(s);
  return r == d * d / 4;
}

bool is_degenerate(const Symbol& s) {
  Symbol r = reduce_symbol(s);
  return r.row_x() == r.row_y();
}

Bipartition upsilon(const Symbol& s) {
  auto strip = [](const std::vector<Int>& row) {
    const Int m = static_cast<Int>(row.size());
    std::vector<Int> parts;
    for (Int j = 1; j <= m; ++j) {
      Int p = row[static_cast<size_t>(j - 1)] - (m - j);
      if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
  };
  return {strip(s.row_x()), strip(s.row_y())};
}

Symbol upsilon_inverse(const Bipartition& b, Int defect) {
  const Int l1 = b.first.size(), l2 = b.second.size();
  Int m2 = std::max({Int{0}, l2, l1 - defect});
  Int m1 = m2 + defect;
  return Symbol(row_from_partition(b.first, m1), row_from_partition(b.second, m2));
}

Symbol upsilon_swap(const Symbol& s) {
  Bipartition b = upsilon(s);
  return upsilon_inverse({b.second, b.first}, defect(s));
}

bool family_member(const Symbol& s, SymbolFamily fam) {
  Int d = defect(s);
  Int r = ((d % 4) + 4) % 4;
  switch (fam) {
    case SymbolFamily::OplusEven: return r == 0;
    case SymbolFamily::SpOrSOodd: return r == 1;
    case SymbolFamily::OminusEven: return r == 2;
  }
  return false;
}

std::vector<HookAddition> one_hook_additions(const Symbol& s) {
  const Symbol red = reduce_symbol(s);
  const Bipartition bp = upsilon(red);
  const Int d = defect(red);
  std::vector<HookAddition> out;
  for (Box b : addable_boxes(bp.first))
    out.push_back({upsilon_inverse({add_box(bp.first, b), bp.second}, d), SymbolRow::X, content(b)});
  for (Box b : addable_boxes(bp.second))
    out.push_back({upsilon_inverse({bp.first, add_box(bp.second, b)}, d), SymbolRow::Y, content(b)});
  return out;
}

std::vector<HookAddition> one_hook_removals(const Symbol& s) {
  const Symbol red = reduce_symbol(s);
  const Bipartition bp = upsilon(red);
  const Int d = defect(red);
  std::vector<HookAddition> out;
  for (Box b : removable_boxes(bp.first))
    out.push_back({upsilon_inverse({remove_box(bp.first, b), bp.second}, d), SymbolRow::X, content(b)});
  for (Box b : removable_boxes(bp.second))
    out.push_back({upsilon_inverse({bp.first, remove_box(bp.second, b)}, d), SymbolRow::Y, content(b)});
  return out;
}

Symbol cuspidal_symbol(Int t, CuspidalKind kind) {
  Int d;
  if (kind == CuspidalKind::SpLike) {
    if (t < 0) throw domain_error("cuspidal_symbol: t must be non-negative for the Sp-like kind");
    d = (t % 2 == 0) ? (2 * t + 1) : -(2 * t + 1);
  } else {
    d = 2 * t;
  }
  std::vector<Int> staircase(static_cast<size_t>(d < 0 ? -d : d));
  std::iota(staircase.rbegin(), staircase.rend(), Int{0});
  if (d >= 0) return Symbol(std::move(staircase), {});
  return Symbol({}, std::move(staircase));
}

Int cuspidal_t_from_defect(Int defect, CuspidalKind kind) {
  if (kind == CuspidalKind::SpLike) {
    Int a = defect < 0 ? -defect : defect;
    if (a % 2 == 0) throw domain_error("Sp-like defect must be odd");
    Int t = (a - 1) / 2;
    if ((t % 2 == 0) != (defect > 0)) throw domain_error("defect not of the form (-1)^t (2t+1)");
    return t;
  }
  if (defect % 2 != 0) throw domain_error("even-orthogonal defect must be even");
  return defect / 2;
}

std::vector<Symbol> symbols_of(Int rank, Int defect) {
  Int core = defect * defect / 4;
  std::vector<Symbol> out;
  if (rank < core) return out;
  for (const auto& [a, b] : bipartitions_of(rank - core))
    out.push_back(upsilon_inverse({a, b}, defect));
  return out;
}

}  // namespace weylfock
