#pragma once

#include <string>
#include <vector>

#include "weylfock/ffield.hpp"

namespace weylfock {

enum class SpaceKind { Symplectic, Orthogonal };

/// One F1/F2 elementary divisor of a semisimple class, as a descriptor
/// plus its multiplicity and (orthogonal case) subspace type.
struct StarBlock {
  GammaDescriptor gamma;
  Int mult = 1;
  int eta = 1;  // type of V_Gamma; +1 for symplectic ambient spaces
  auto operator<=>(const StarBlock&) const = default;
};

/// Multiplicity/type data of a semisimple conjugacy class of G(V).
struct SemisimpleClass {
  SpaceKind kind = SpaceKind::Orthogonal;
  Int dim = 0;
  int type = 1;            // eta(V); +1 by convention when symplectic
  Int m_x_minus_1 = 0;     // multiplicity of x-1
  Int m_x_plus_1 = 0;      // multiplicity of x+1
  int eta_x_minus_1 = 1;   // types of the eigenspaces, orthogonal case
  int eta_x_plus_1 = 1;
  std::vector<StarBlock> blocks;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks dim V = sum d_Gamma m_Gamma, the type product relation, and
/// eta_Gamma = epsilon_Gamma^(m_Gamma) on the F1/F2 blocks. Reports
/// every violated relation.
ValidationReport validate(const SemisimpleClass& sc, const GlobalContext& ctx);

enum class FactorFamily { SpOdd /*Sp_{2n}*/, SOOdd /*SO_{2n+1}*/, OEven /*O^eps_{2n}*/ };

struct CentralizerFactor {
  FactorFamily family = FactorFamily::SpOdd;
  Int n = 0;
  int eps = 0;  // type, 0 when not applicable
};

struct StarFactor {
  GammaDescriptor gamma;
  Int gl_rank = 0;       // m_Gamma
  int twisted_sign = 1;  // epsilon_Gamma: GL_m(q^delta) vs GU_m(q^delta)
  Int delta = 1;
};

struct CentralizerShape {
  CentralizerFactor plus;
  CentralizerFactor minus;
  std::vector<StarFactor> star;
};

/// Ambient group family the class centralizes inside (the dual side of
/// the character-label families).
enum class AmbientFamily { OddOrthogonal, Symplectic, EvenOrthogonal };

/// C(s) = G^(+) x G^(-) x G^(star) per the +- equation; the symplectic
/// ambient case carries the dual-group twist on the plus factor.
CentralizerShape centralizer(const SemisimpleClass& sc, AmbientFamily ambient,
                             const GlobalContext& ctx);

/// Spinor character value on s (orthogonal ambient, m_{x+1} even):
/// zeta(-1)^(dim V_{x+1}/2) * prod over sigma(Gamma) != 1 of (-1)^(m_Gamma),
/// negated when eta_{x+1}(s) = -1.
int spinor_value(const SemisimpleClass& sc, const GlobalContext& ctx);

}  // namespace weylfock
