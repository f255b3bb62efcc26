#include "weylfock/semisimple.hpp"

namespace weylfock {

ValidationReport validate(const SemisimpleClass& sc, const GlobalContext& ctx) {
  ValidationReport rep;
  Int dim = sc.m_x_minus_1 + sc.m_x_plus_1;
  for (const StarBlock& b : sc.blocks) {
    if (b.mult <= 0) rep.violations.push_back("block multiplicity must be positive");
    if (b.gamma.delta < 1) rep.violations.push_back("block reduced degree must be >= 1");
    dim += b.gamma.degree() * b.mult;
  }
  if (dim != sc.dim)
    rep.violations.push_back("dimension relation violated: sum d_Gamma m_Gamma != dim V");
  if (sc.kind == SpaceKind::Symplectic) {
    if (sc.dim % 2 != 0) rep.violations.push_back("symplectic space must have even dimension");
    if (sc.eta_x_minus_1 != 1 || sc.eta_x_plus_1 != 1)
      rep.violations.push_back("symplectic classes carry trivial type functions");
    for (const StarBlock& b : sc.blocks)
      if (b.eta != 1) rep.violations.push_back("symplectic classes carry trivial type functions");
    return rep;
  }
  // Orthogonal: eta(V) = zeta(-1)^(m_{x-1} m_{x+1}) * prod eta_Gamma and
  // eta_Gamma = epsilon_Gamma^(m_Gamma) on F1/F2.
  int prod = sign_pow(ctx.zeta_minus1(), sc.m_x_minus_1 * sc.m_x_plus_1);
  prod *= (sc.m_x_minus_1 > 0 ? sc.eta_x_minus_1 : 1);
  prod *= (sc.m_x_plus_1 > 0 ? sc.eta_x_plus_1 : 1);
  for (const StarBlock& b : sc.blocks) {
    if (b.eta != sign_pow(b.gamma.epsilon(), b.mult)) {
      rep.violations.push_back("type relation violated: eta_Gamma != epsilon_Gamma^m_Gamma");
    }
    prod *= b.eta;
  }
  if (sc.m_x_minus_1 == 0 && sc.eta_x_minus_1 != 1)
    rep.violations.push_back("empty eigenspace must have type +1");
  if (sc.m_x_plus_1 == 0 && sc.eta_x_plus_1 != 1)
    rep.violations.push_back("empty eigenspace must have type +1");
  if (rep.ok() && prod != sc.type)
    rep.violations.push_back("type relation violated: eta(V) product mismatch");
  return rep;
}

CentralizerShape centralizer(const SemisimpleClass& sc, AmbientFamily ambient,
                             const GlobalContext& ctx) {
  ValidationReport rep = validate(sc, ctx);
  if (!rep.ok()) throw domain_error("centralizer: invalid class: " + rep.violations.front());
  CentralizerShape shape;
  shape.plus.n = sc.m_x_minus_1 / 2;
  shape.minus.n = sc.m_x_plus_1 / 2;
  switch (ambient) {
    case AmbientFamily::OddOrthogonal:
      // s in Sp_{2n}: both eigenspace factors are symplectic.
      if (sc.kind != SpaceKind::Symplectic)
        throw domain_error("centralizer: odd-orthogonal ambient expects a symplectic class");
      shape.plus.family = FactorFamily::SpOdd;
      shape.minus.family = FactorFamily::SpOdd;
      break;
    case AmbientFamily::Symplectic:
      // s in SO_{2n+1}: G^(+) = SO_{2n^+ + 1} (dual twist lives on this
      // factor), G^(-) = O^{eps}_{2n^-}.
      if (sc.kind != SpaceKind::Orthogonal || sc.dim % 2 == 0)
        throw domain_error("centralizer: symplectic ambient expects an odd orthogonal class");
      if (sc.m_x_plus_1 % 2 != 0)
        throw domain_error("centralizer: m_{x+1} must be even for s in the special orthogonal group");
      shape.plus.family = FactorFamily::SOOdd;
      shape.minus.family = FactorFamily::OEven;
      shape.minus.eps = sc.eta_x_plus_1;
      break;
    case AmbientFamily::EvenOrthogonal:
      if (sc.kind != SpaceKind::Orthogonal || sc.dim % 2 != 0)
        throw domain_error("centralizer: even-orthogonal ambient expects an even orthogonal class");
      if (sc.m_x_minus_1 % 2 != 0 || sc.m_x_plus_1 % 2 != 0)
        throw domain_error("centralizer: even orthogonal eigenspace multiplicities must be even");
      shape.plus.family = FactorFamily::OEven;
      shape.plus.eps = sc.eta_x_minus_1;
      shape.minus.family = FactorFamily::OEven;
      shape.minus.eps = sc.eta_x_plus_1;
      break;
  }
  for (const StarBlock& b : sc.blocks)
    shape.star.push_back({b.gamma, b.mult, b.gamma.epsilon(), b.gamma.delta});
  return shape;
}

int spinor_value(const SemisimpleClass& sc, const GlobalContext& ctx) {
  if (sc.kind != SpaceKind::Orthogonal)
    throw domain_error("spinor_value: ambient space must be orthogonal");
  if (sc.m_x_plus_1 % 2 != 0)
    throw domain_error("spinor_value: m_{x+1} must be even (s in the special orthogonal group)");
  int value = sign_pow(ctx.zeta_minus1(), sc.m_x_plus_1 / 2);
  for (const StarBlock& b : sc.blocks)
    if (b.gamma.sigma != 1) value *= sign_pow(-1, b.mult);
  if (sc.m_x_plus_1 > 0 && sc.eta_x_plus_1 == -1) value = -value;
  return value;
}

}  // namespace weylfock
