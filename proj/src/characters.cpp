#include "weylfock/characters.hpp"

#include <algorithm>
#include <set>

namespace weylfock {

namespace {

CuspidalKind slot_kind(FamilyKind fam, Colour c) {
  switch (fam) {
    case FamilyKind::OddOrthogonal: return CuspidalKind::SpLike;
    case FamilyKind::Symplectic:
      return c == Colour::Plus ? CuspidalKind::SpLike : CuspidalKind::EvenOrthogonal;
    case FamilyKind::EvenOrthogonal: return CuspidalKind::EvenOrthogonal;
  }
  throw domain_error("bad family");
}

Int defect_from_t(Int t, CuspidalKind kind) {
  if (kind == CuspidalKind::SpLike) {
    if (t < 0) throw domain_error("Sp-like support value must be non-negative");
    return (t % 2 == 0) ? (2 * t + 1) : -(2 * t + 1);
  }
  return 2 * t;
}

bool slot_defect_ok(Int d, CuspidalKind kind) {
  if (kind == CuspidalKind::SpLike) return ((d % 4) + 4) % 4 == 1;
  return d % 2 == 0;
}

const Symbol& slot(const CharacterLabel& l, Colour c) {
  return c == Colour::Plus ? l.lambda_plus : l.lambda_minus;
}

Int star_weight(const std::vector<StarPart>& star) {
  Int w = 0;
  for (const StarPart& sp : star) w += sp.gamma.delta * sp.lam.weight();
  return w;
}

std::vector<StarPart> sorted_star(std::vector<StarPart> star) {
  std::sort(star.begin(), star.end());
  return star;
}

std::vector<StarPart> negate_star(const std::vector<StarPart>& star, const GlobalContext& ctx) {
  std::vector<StarPart> out;
  out.reserve(star.size());
  for (const StarPart& sp : star)
    out.push_back({negate_descriptor(sp.gamma, ctx.zeta_minus1()), sp.lam});
  return sorted_star(std::move(out));
}

int support_eps_of_label(const CharacterLabel& l, const GlobalContext& ctx) {
  return sign_pow(ctx.zeta_minus1(), rank(l.lambda_minus)) * l.eps;
}

}  // namespace

CharacterLabel canonical(const CharacterLabel& l) {
  CharacterLabel out = l;
  out.lambda_plus = reduce_symbol(l.lambda_plus);
  out.lambda_minus = reduce_symbol(l.lambda_minus);
  out.star = sorted_star(out.star);
  return out;
}

Int label_rank(const CharacterLabel& l) {
  return rank(l.lambda_plus) + rank(l.lambda_minus) + star_weight(l.star);
}

int even_group_type(const CharacterLabel& l) {
  auto slot_type = [](const Symbol& s) {
    Int d = defect(s);
    return (((d % 4) + 4) % 4 == 0) ? 1 : -1;
  };
  int type = slot_type(l.lambda_plus) * slot_type(l.lambda_minus);
  for (const StarPart& sp : l.star)
    if (sp.gamma.cls == GammaClass::F1) type *= sign_pow(-1, sp.lam.weight());
  return type;
}

ValidationReport validate_label(const CharacterLabel& l, const GlobalContext& ctx) {
  (void)ctx;
  ValidationReport rep;
  const FamilyKind fam = l.family.kind;
  if (!slot_defect_ok(defect(l.lambda_plus), slot_kind(fam, Colour::Plus)))
    rep.violations.push_back("lambda_plus defect outside the family symbol set");
  if (!slot_defect_ok(defect(l.lambda_minus), slot_kind(fam, Colour::Minus)))
    rep.violations.push_back("lambda_minus defect outside the family symbol set");
  if (fam == FamilyKind::OddOrthogonal) {
    if (l.eps != 1 && l.eps != -1) rep.violations.push_back("O_odd label needs eps = +-1");
  } else if (l.eps != 0) {
    rep.violations.push_back("eps slot is O_odd-only");
  }
  std::set<GammaDescriptor> keys;
  for (const StarPart& sp : l.star) {
    if (sp.lam.empty()) rep.violations.push_back("star partitions must be non-empty");
    if (sp.gamma.delta < 1) rep.violations.push_back("star reduced degree must be >= 1");
    if (sp.gamma.sigma != 1 && sp.gamma.sigma != -1)
      rep.violations.push_back("star sigma must be +-1");
    if (!keys.insert(sp.gamma).second) rep.violations.push_back("star keys must be pairwise distinct");
  }
  if (fam == FamilyKind::EvenOrthogonal) {
    if (l.family.type != 1 && l.family.type != -1)
      rep.violations.push_back("O_even family needs a group type +-1");
    else if (rep.ok() && even_group_type(l) != l.family.type)
      rep.violations.push_back("group type inconsistent with the label's type bookkeeping");
  } else if (l.family.type != 0) {
    rep.violations.push_back("group type slot is O_even-only");
  }
  return rep;
}

void require_valid(const CharacterLabel& l, const GlobalContext& ctx) {
  ValidationReport rep = validate_label(l, ctx);
  if (!rep.ok()) throw domain_error("invalid label: " + rep.violations.front());
}

CuspidalSupport cuspidal_support(const CharacterLabel& l, const GlobalContext& ctx) {
  require_valid(l, ctx);
  CuspidalSupport sup;
  sup.family = l.family;
  sup.t_plus = cuspidal_t_from_defect(defect(l.lambda_plus), slot_kind(l.family.kind, Colour::Plus));
  sup.t_minus = cuspidal_t_from_defect(defect(l.lambda_minus), slot_kind(l.family.kind, Colour::Minus));
  sup.star = sorted_star(l.star);
  if (l.family.kind == FamilyKind::OddOrthogonal) sup.eps = support_eps_of_label(l, ctx);
  return sup;
}

CharacterLabel cuspidal_label(const CuspidalSupport& sup, const GlobalContext& ctx) {
  CharacterLabel l;
  l.family = sup.family;
  l.lambda_plus = cuspidal_symbol(sup.t_plus, slot_kind(sup.family.kind, Colour::Plus));
  l.lambda_minus = cuspidal_symbol(sup.t_minus, slot_kind(sup.family.kind, Colour::Minus));
  l.star = sorted_star(sup.star);
  // rank(Lambda_-) of a cuspidal core is even, so the label eps equals the
  // support eps.
  l.eps = (sup.family.kind == FamilyKind::OddOrthogonal) ? sup.eps : 0;
  if (sup.family.kind == FamilyKind::EvenOrthogonal) l.family.type = even_group_type(l);
  require_valid(l, ctx);
  return l;
}

int eta_sp(const CuspidalSupport& sup) {
  int eta = sign_pow(-1, sup.t_plus + sup.t_minus);
  for (const StarPart& sp : sup.star)
    if (sp.gamma.cls == GammaClass::F1) eta *= sign_pow(-1, sp.lam.weight());
  return eta;
}

int eta_odd(const CuspidalSupport& sup, int colour) {
  int eta = sup.eps * sign_pow(-1, colour > 0 ? sup.t_plus : sup.t_minus);
  for (const StarPart& sp : sup.star)
    if (sp.gamma.sigma != 1) eta *= sign_pow(-1, sp.lam.weight());
  return eta;
}

Charges charges(const CuspidalSupport& sup) {
  auto eta_pair = [](int eta, Int t) {
    // (u - eta q^t)(u + eta q^(-1-t)): positive zero at t when eta = +1.
    return eta == 1 ? ChargePair{t, -1 - t} : ChargePair{-1 - t, t};
  };
  switch (sup.family.kind) {
    case FamilyKind::OddOrthogonal:
      return {eta_pair(eta_odd(sup, +1), sup.t_plus), eta_pair(eta_odd(sup, -1), sup.t_minus)};
    case FamilyKind::Symplectic:
      return {eta_pair(eta_sp(sup), sup.t_plus), ChargePair{sup.t_minus, -sup.t_minus}};
    case FamilyKind::EvenOrthogonal:
      return {ChargePair{sup.t_plus, -sup.t_plus}, ChargePair{sup.t_minus, -sup.t_minus}};
  }
  throw domain_error("bad family");
}

namespace {

ResidueRatio slot_weight_function(const Symbol& s, ChargePair ch) {
  Bipartition bp = upsilon(reduce_symbol(s));
  return product(residue_function({bp.first, ch.s1}, +1),
                 residue_function({bp.second, ch.s2}, -1));
}

}  // namespace

WeightFunctions weight_functions(const CharacterLabel& l, const GlobalContext& ctx) {
  Charges ch = charges(cuspidal_support(l, ctx));
  return {slot_weight_function(l.lambda_plus, ch.plus),
          slot_weight_function(l.lambda_minus, ch.minus)};
}

FockCoordinates fock_coordinates(const CharacterLabel& l, const GlobalContext& ctx) {
  Charges ch = charges(cuspidal_support(l, ctx));
  Bipartition bp = upsilon(reduce_symbol(l.lambda_plus));
  Bipartition bm = upsilon(reduce_symbol(l.lambda_minus));
  return {{{bp.first, bp.second}, {{1, ch.plus.s1}, {-1, ch.plus.s2}}},
          {{bm.first, bm.second}, {{1, ch.minus.s1}, {-1, ch.minus.s2}}}};
}

CharacterLabel label_from_fock(const FockCoordinates& coords, const CuspidalSupport& sup,
                               const GlobalContext& ctx) {
  validate(coords.plus);
  validate(coords.minus);
  if (coords.plus.lambdas.size() != 2 || coords.minus.lambdas.size() != 2)
    throw domain_error("label_from_fock: coordinates must be charged bipartitions");
  Charges ch = charges(sup);
  auto expect = [](const ChargedMultipartition& cmp, ChargePair p) {
    return cmp.xis[0] == QIndex{1, p.s1} && cmp.xis[1] == QIndex{-1, p.s2};
  };
  if (!expect(coords.plus, ch.plus) || !expect(coords.minus, ch.minus))
    throw domain_error("label_from_fock: charges inconsistent with the support");
  CharacterLabel l;
  l.family = sup.family;
  l.lambda_plus = upsilon_inverse({coords.plus.lambdas[0], coords.plus.lambdas[1]},
                                  defect_from_t(sup.t_plus, slot_kind(sup.family.kind, Colour::Plus)));
  l.lambda_minus = upsilon_inverse({coords.minus.lambdas[0], coords.minus.lambdas[1]},
                                   defect_from_t(sup.t_minus, slot_kind(sup.family.kind, Colour::Minus)));
  l.star = sorted_star(sup.star);
  if (sup.family.kind == FamilyKind::OddOrthogonal)
    l.eps = sign_pow(ctx.zeta_minus1(), rank(l.lambda_minus)) * sup.eps;
  if (sup.family.kind == FamilyKind::EvenOrthogonal) l.family.type = even_group_type(l);
  require_valid(l, ctx);
  return l;
}

namespace {

std::vector<CharacterLabel> apply_hooks(const CharacterLabel& l, Colour colour, QIndex i,
                                        const GlobalContext& ctx, bool adding) {
  CharacterLabel base = canonical(l);
  Charges ch = charges(cuspidal_support(base, ctx));
  ChargePair pair = colour == Colour::Plus ? ch.plus : ch.minus;
  const Symbol& target = slot(base, colour);
  auto moves = adding ? one_hook_additions(target) : one_hook_removals(target);
  std::vector<CharacterLabel> out;
  for (const HookAddition& mv : moves) {
    QIndex res = mv.row == SymbolRow::X ? QIndex{1, pair.s1 + mv.content}
                                        : QIndex{-1, pair.s2 + mv.content};
    if (res != i) continue;
    CharacterLabel nl = base;
    (colour == Colour::Plus ? nl.lambda_plus : nl.lambda_minus) = mv.result;
    if (base.family.kind == FamilyKind::OddOrthogonal && colour == Colour::Minus)
      nl.eps = ctx.zeta_minus1() * nl.eps;
    out.push_back(canonical(nl));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CharacterLabel> apply_f(const CharacterLabel& l, Colour colour, QIndex i,
                                    const GlobalContext& ctx) {
  return apply_hooks(l, colour, i, ctx, true);
}

std::vector<CharacterLabel> apply_e(const CharacterLabel& l, Colour colour, QIndex i,
                                    const GlobalContext& ctx) {
  return apply_hooks(l, colour, i, ctx, false);
}

bool twist_valid_for(Twist g, FamilyKind kind) {
  switch (kind) {
    case FamilyKind::OddOrthogonal: return g == Twist::Det || g == Twist::Sp;
    case FamilyKind::Symplectic: return g == Twist::Diag;
    case FamilyKind::EvenOrthogonal: return true;
  }
  return false;
}

CharacterLabel twist(const CharacterLabel& l, Twist g, const GlobalContext& ctx) {
  if (!twist_valid_for(g, l.family.kind)) throw domain_error("twist not defined for this family");
  CharacterLabel base = canonical(l);
  require_valid(base, ctx);
  CharacterLabel out = base;
  switch (l.family.kind) {
    case FamilyKind::OddOrthogonal:
      if (g == Twist::Det) {
        // The weight-function-normalized parametrization realizes det as
        // the charge swap: both upsilon components swap and eps flips.
        out.lambda_plus = upsilon_swap(base.lambda_plus);
        out.lambda_minus = upsilon_swap(base.lambda_minus);
        out.eps = -base.eps;
      } else {  // Sp twist
        out.lambda_plus = base.lambda_minus;
        out.lambda_minus = base.lambda_plus;
        out.star = negate_star(base.star, ctx);
        out.eps = sign_pow(ctx.zeta_minus1(), label_rank(base)) * base.eps;
      }
      break;
    case FamilyKind::Symplectic:
      out.lambda_minus = transpose(base.lambda_minus);
      break;
    case FamilyKind::EvenOrthogonal:
      if (g == Twist::Det) {
        out.lambda_plus = transpose(base.lambda_plus);
        out.lambda_minus = transpose(base.lambda_minus);
      } else if (g == Twist::Sp) {
        out.lambda_plus = base.lambda_minus;
        out.lambda_minus = base.lambda_plus;
        out.star = negate_star(base.star, ctx);
      } else {
        out.lambda_minus = transpose(base.lambda_minus);
      }
      break;
  }
  out = canonical(out);
  require_valid(out, ctx);
  return out;
}

std::vector<CharacterLabel> uniform_orbit(const CharacterLabel& l, const GlobalContext& ctx) {
  std::set<CharacterLabel> orbit;
  CharacterLabel base = canonical(l);
  orbit.insert(base);
  switch (l.family.kind) {
    case FamilyKind::OddOrthogonal:
      orbit.insert(twist(base, Twist::Det, ctx));
      break;
    case FamilyKind::Symplectic:
      orbit.insert(twist(base, Twist::Diag, ctx));
      break;
    case FamilyKind::EvenOrthogonal: {
      CharacterLabel d = twist(base, Twist::Diag, ctx);
      orbit.insert(d);
      orbit.insert(twist(base, Twist::Det, ctx));
      orbit.insert(twist(d, Twist::Det, ctx));
      break;
    }
  }
  return {orbit.begin(), orbit.end()};
}

bool invariants_equal(const CharacterLabel& l1, const CharacterLabel& l2,
                      const GlobalContext& ctx) {
  if (l1.family.kind != l2.family.kind) throw domain_error("invariants_equal: family mismatch");
  auto orbit = uniform_orbit(l1, ctx);
  if (!std::binary_search(orbit.begin(), orbit.end(), canonical(l2))) return false;
  WeightFunctions w1 = weight_functions(l1, ctx);
  WeightFunctions w2 = weight_functions(l2, ctx);
  return w1 == w2;
}

namespace {

// Support value and eta sign from one colour's charge pair; requires
// s1 + s2 = -1 (Sp-like slots) or s2 = -s1 (even slots).
std::pair<Int, int> support_from_pair(ChargePair p, CuspidalKind kind) {
  if (kind == CuspidalKind::SpLike) {
    if (p.s1 + p.s2 != -1) throw domain_error("charges inconsistent with any support");
    Int t = p.s1 >= 0 ? p.s1 : p.s2;
    return {t, p.s1 == t ? 1 : -1};
  }
  if (p.s2 != -p.s1) throw domain_error("charges inconsistent with any support");
  return {p.s1, 1};
}

}  // namespace

CharacterLabel label_from_weights(const ResidueRatio& o_plus, const ResidueRatio& o_minus,
                                  FamilyKind kind, const GlobalContext& ctx) {
  auto split = [](const ResidueRatio& r) {
    std::vector<QIndex> zp, pp, zm, pm;
    for (QIndex z : r.zeros()) (z.sign == 1 ? zp : zm).push_back(z);
    for (QIndex p : r.poles()) (p.sign == 1 ? pp : pm).push_back(p);
    ChargedPartition c1 = invert_residue_function(ResidueRatio::make(zp, pp), +1);
    ChargedPartition c2 = invert_residue_function(ResidueRatio::make(zm, pm), -1);
    return std::pair{c1, c2};
  };
  auto [p1, p2] = split(o_plus);
  auto [m1, m2] = split(o_minus);
  auto [tp, etap] = support_from_pair({p1.charge, p2.charge}, slot_kind(kind, Colour::Plus));
  auto [tm, etam] = support_from_pair({m1.charge, m2.charge}, slot_kind(kind, Colour::Minus));

  CharacterLabel l;
  l.lambda_plus = upsilon_inverse({p1.mu, p2.mu}, defect_from_t(tp, slot_kind(kind, Colour::Plus)));
  l.lambda_minus = upsilon_inverse({m1.mu, m2.mu}, defect_from_t(tm, slot_kind(kind, Colour::Minus)));
  switch (kind) {
    case FamilyKind::Symplectic: {
      if (tp < 0 || etap != sign_pow(-1, tp + tm))
        throw domain_error("charges inconsistent with any support");
      l.family = Family::symplectic();
      break;
    }
    case FamilyKind::OddOrthogonal: {
      if (tp < 0 || tm < 0) throw domain_error("charges inconsistent with any support");
      int eps_sup = etap * sign_pow(-1, tp);
      if (etam != eps_sup * sign_pow(-1, tm))
        throw domain_error("charges inconsistent with any support");
      l.family = Family::odd_orthogonal();
      l.eps = sign_pow(ctx.zeta_minus1(), rank(l.lambda_minus)) * eps_sup;
      break;
    }
    case FamilyKind::EvenOrthogonal: {
      l.family = Family::even_orthogonal(1);
      l.family.type = even_group_type(l);
      break;
    }
  }
  require_valid(l, ctx);
  if (weight_functions(l, ctx) != WeightFunctions{o_plus, o_minus})
    throw domain_error("weight functions do not come from a quadratic-unipotent label");
  return l;
}

namespace {

void enumerate_stars(const std::vector<GammaDescriptor>& universe, size_t idx, Int budget,
                     std::vector<StarPart>& cur, std::vector<std::vector<StarPart>>& out) {
  out.push_back(cur);
  for (size_t k = idx; k < universe.size(); ++k) {
    const GammaDescriptor& g = universe[k];
    for (Int w = 1; g.delta * w <= budget; ++w) {
      for (const Partition& lam : partitions_of(w)) {
        cur.push_back({g, lam});
        enumerate_stars(universe, k + 1, budget - g.delta * w, cur, out);
        cur.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<CharacterLabel> enumerate_labels(const Family& family, Int n,
                                             const EnumerateOptions& opts,
                                             const GlobalContext& ctx) {
  if (n < 0) throw domain_error("enumerate_labels: n must be non-negative");
  std::vector<std::vector<StarPart>> stars;
  if (opts.quadratic_unipotent || opts.star_bound <= 0) {
    stars.push_back({});
  } else {
    std::vector<GammaDescriptor> universe;
    for (Int delta = 1; delta <= opts.star_bound; ++delta)
      for (GammaClass cls : {GammaClass::F1, GammaClass::F2})
        for (int sg : {1, -1}) universe.push_back({cls, delta, sg});
    std::vector<StarPart> cur;
    enumerate_stars(universe, 0, std::min(n, opts.star_bound), cur, stars);
  }

  const CuspidalKind kp = slot_kind(family.kind, Colour::Plus);
  const CuspidalKind km = slot_kind(family.kind, Colour::Minus);
  std::vector<CharacterLabel> out;
  for (const auto& star : stars) {
    const Int m = n - star_weight(star);
    if (m < 0) continue;
    for (Int tp = (kp == CuspidalKind::SpLike ? 0 : -m);; ++tp) {
      Int core_p = (kp == CuspidalKind::SpLike) ? tp * tp + tp : tp * tp;
      if (kp == CuspidalKind::SpLike && core_p > m) break;
      if (kp != CuspidalKind::SpLike && tp > m) break;
      if (core_p > m) continue;
      for (Int rp = core_p; rp <= m; ++rp) {
        for (const Symbol& sp_sym : symbols_of(rp, defect_from_t(tp, kp))) {
          Int rm = m - rp;
          for (Int tm = (km == CuspidalKind::SpLike ? 0 : -rm);; ++tm) {
            Int core_m = (km == CuspidalKind::SpLike) ? tm * tm + tm : tm * tm;
            if (km == CuspidalKind::SpLike && core_m > rm) break;
            if (km != CuspidalKind::SpLike && tm > rm) break;
            if (core_m > rm) continue;
            for (const Symbol& sm_sym : symbols_of(rm, defect_from_t(tm, km))) {
              CharacterLabel l;
              l.family = family;
              l.lambda_plus = sp_sym;
              l.lambda_minus = sm_sym;
              l.star = sorted_star(star);
              if (family.kind == FamilyKind::OddOrthogonal) {
                for (int e : {1, -1}) {
                  l.eps = e;
                  require_valid(l, ctx);
                  out.push_back(canonical(l));
                }
              } else if (family.kind == FamilyKind::EvenOrthogonal) {
                l.family.type = family.type;
                if (even_group_type(l) != family.type) continue;
                require_valid(l, ctx);
                out.push_back(canonical(l));
              } else {
                require_valid(l, ctx);
                out.push_back(canonical(l));
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace weylfock
