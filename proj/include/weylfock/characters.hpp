#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylfock/charged.hpp"
#include "weylfock/fock.hpp"
#include "weylfock/semisimple.hpp"
#include "weylfock/symbols.hpp"

namespace weylfock {

enum class FamilyKind { OddOrthogonal, Symplectic, EvenOrthogonal };

/// Family of groups a label belongs to; even orthogonal groups carry
/// their type alongside the rank.
struct Family {
  FamilyKind kind = FamilyKind::Symplectic;
  int type = 0;  // O_even only: +1 or -1

  static Family odd_orthogonal() { return {FamilyKind::OddOrthogonal, 0}; }
  static Family symplectic() { return {FamilyKind::Symplectic, 0}; }
  static Family even_orthogonal(int type) { return {FamilyKind::EvenOrthogonal, type}; }

  auto operator<=>(const Family&) const = default;
};

struct StarPart {
  GammaDescriptor gamma;
  Partition lam;
  auto operator<=>(const StarPart&) const = default;
};

/// (Lambda_+, Lambda_-, lambda_star, eps) parametrizing an irreducible
/// character through the Lusztig parametrization normalized by the
/// colored weight functions.
struct CharacterLabel {
  Family family;
  Symbol lambda_plus;
  Symbol lambda_minus;
  std::vector<StarPart> star;
  int eps = 0;  // O_odd only: +1 or -1

  auto operator<=>(const CharacterLabel&) const = default;
};

/// Highest-weight data: defects of the cuspidal cores plus the star part.
struct CuspidalSupport {
  Family family;
  Int t_plus = 0;
  Int t_minus = 0;
  std::vector<StarPart> star;
  int eps = 0;  // O_odd only

  auto operator<=>(const CuspidalSupport&) const = default;
};

/// Reduce symbols and sort the star part; equality of labels is equality
/// of canonical forms.
CharacterLabel canonical(const CharacterLabel& l);

/// n = rank(Lambda_+) + rank(Lambda_-) + sum delta_Gamma |lambda_Gamma|.
Int label_rank(const CharacterLabel& l);

/// Group type of an even-orthogonal label, from the defect classes of the
/// two symbols and the F1 star multiplicities.
int even_group_type(const CharacterLabel& l);

ValidationReport validate_label(const CharacterLabel& l, const GlobalContext& ctx);

/// Throwing validate.
void require_valid(const CharacterLabel& l, const GlobalContext& ctx);

CuspidalSupport cuspidal_support(const CharacterLabel& l, const GlobalContext& ctx);

/// The unique label which is both F+- and F--cuspidal with this support.
CharacterLabel cuspidal_label(const CuspidalSupport& sup, const GlobalContext& ctx);

// --- eta signs and charges ------------------------------------------------

/// Sp: eta = (-1)^(t_+ + t_-) * prod_{Gamma in F1} (-1)^|lambda_Gamma|.
int eta_sp(const CuspidalSupport& sup);
/// O_odd: eta^{+-} = eps * (-1)^(t_{+-}) * prod_{sigma(Gamma) != 1} (-1)^|lambda_Gamma|.
int eta_odd(const CuspidalSupport& sup, int colour);

struct ChargePair {
  Int s1 = 0;  // charge of the positive-signed component
  Int s2 = 0;  // charge of the negative-signed component
  auto operator<=>(const ChargePair&) const = default;
};

struct Charges {
  ChargePair plus;
  ChargePair minus;
};

/// Fock charges solving the closed cuspidal forms
/// (u - q^s1)(u + q^s2) per family, branching on the eta signs.
Charges charges(const CuspidalSupport& sup);

// --- weight functions and Fock coordinates --------------------------------

struct WeightFunctions {
  ResidueRatio o_plus;
  ResidueRatio o_minus;
  auto operator<=>(const WeightFunctions&) const = default;
};

/// O^+ = O^(q,+)_{|mu1+, s1+>} * O^(q,-)_{|mu2+, s2+>}, O^- likewise,
/// with (mu1, mu2) = upsilon(Lambda) and charges from the support.
WeightFunctions weight_functions(const CharacterLabel& l, const GlobalContext& ctx);

struct FockCoordinates {
  ChargedMultipartition plus;
  ChargedMultipartition minus;
};

FockCoordinates fock_coordinates(const CharacterLabel& l, const GlobalContext& ctx);

CharacterLabel label_from_fock(const FockCoordinates& coords, const CuspidalSupport& sup,
                               const GlobalContext& ctx);

// --- branching -------------------------------------------------------------

enum class Colour { Plus, Minus };

/// Add a 1-hook of residue i to the colour slot. For O_odd and the minus
/// colour the eps slot of every output is multiplied by zeta(-1).
std::vector<CharacterLabel> apply_f(const CharacterLabel& l, Colour colour, QIndex i,
                                    const GlobalContext& ctx);
std::vector<CharacterLabel> apply_e(const CharacterLabel& l, Colour colour, QIndex i,
                                    const GlobalContext& ctx);

// --- twists and invariants --------------------------------------------------

enum class Twist { Det, Sp, Diag };

/// Label rewriting of the det / sp / diag symmetries under the weight-
/// function-normalized parametrization. det and diag are involutions.
CharacterLabel twist(const CharacterLabel& l, Twist g, const GlobalContext& ctx);

bool twist_valid_for(Twist g, FamilyKind kind);

/// {l, det l} (O_odd), {l, diag l} (Sp), the four-element orbit (O_even);
/// sorted canonical forms without duplicates.
std::vector<CharacterLabel> uniform_orbit(const CharacterLabel& l, const GlobalContext& ctx);

/// Theorem-C equality test: same uniform orbit and equal weight functions.
bool invariants_equal(const CharacterLabel& l1, const CharacterLabel& l2,
                      const GlobalContext& ctx);

/// Inverse of weight_functions on the quadratic-unipotent regime.
CharacterLabel label_from_weights(const ResidueRatio& o_plus, const ResidueRatio& o_minus,
                                  FamilyKind kind, const GlobalContext& ctx);

// --- enumeration -------------------------------------------------------------

struct EnumerateOptions {
  bool quadratic_unipotent = true;
  Int star_bound = 0;  // max total sum delta_Gamma |lambda_Gamma| when stars allowed
};

/// Every valid label of rank n exactly once, in canonical sorted order.
/// For family O_even the requested group type filters the output.
std::vector<CharacterLabel> enumerate_labels(const Family& family, Int n,
                                             const EnumerateOptions& opts,
                                             const GlobalContext& ctx);

}  // namespace weylfock
