#pragma once

#include <compare>
#include <vector>

#include "weylfock/core.hpp"

namespace weylfock {

/// Self-duality class of a monic irreducible over F_q (x excluded).
enum class GammaClass { F0, F1, F2 };

/// Abstract stand-in for an elementary divisor Gamma in F1 ∪ F2.
/// Everything downstream of the classification depends on Gamma only
/// through (class, reduced degree, sigma).
struct GammaDescriptor {
  GammaClass cls = GammaClass::F1;
  Int delta = 1;   // reduced degree, >= 1
  int sigma = 1;   // +1 or -1

  int epsilon() const { return cls == GammaClass::F1 ? -1 : 1; }
  Int degree() const { return 2 * delta; }
  auto operator<=>(const GammaDescriptor&) const = default;
};

/// -Gamma at descriptor level: sigma picks up epsilon * zeta(-1)^delta.
GammaDescriptor negate_descriptor(const GammaDescriptor& g, int zeta_minus1);

/// The field F_q, q an odd prime power, realized as Z/p[x]/(m) with
/// precomputed operation tables. Elements are codes 0..q-1 (base-p digits
/// of the coefficient vector).
class FqContext {
 public:
  explicit FqContext(Int q);

  Int q() const { return q_; }
  Int p() const { return p_; }
  Int ext_degree() const { return e_; }
  int zeta_minus1() const { return (q_ % 4 == 1) ? 1 : -1; }

  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int inv(int a) const;
  int pow(int a, Int e) const;
  /// Canonical image of an integer via Z -> F_p ⊂ F_q.
  int from_int(Int n) const;

  /// All q field elements, 0 first.
  std::vector<int> elements() const;

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b); }

  Int q_ = 0, p_ = 0, e_ = 1;
  std::vector<int> add_, mul_, neg_;
};

/// Polynomial over F_q, coefficients low-to-high (element codes),
/// no trailing zeros; the empty vector is the zero polynomial.
struct FqPoly {
  std::vector<int> c;

  Int degree() const { return static_cast<Int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  auto operator<=>(const FqPoly&) const = default;
};

FqPoly poly_trim(FqPoly f);
FqPoly poly_x();
FqPoly poly_constant(int a);
/// x - a.
FqPoly poly_linear(const FqContext& F, int a);
FqPoly poly_add(const FqContext& F, const FqPoly& f, const FqPoly& g);
FqPoly poly_sub(const FqContext& F, const FqPoly& f, const FqPoly& g);
FqPoly poly_mul(const FqContext& F, const FqPoly& f, const FqPoly& g);
/// Remainder of f modulo the monic polynomial m.
FqPoly poly_mod(const FqContext& F, FqPoly f, const FqPoly& m);
FqPoly poly_powmod(const FqContext& F, FqPoly base, Int e, const FqPoly& m);
FqPoly poly_gcd(const FqContext& F, FqPoly a, FqPoly b);
FqPoly poly_make_monic(const FqContext& F, FqPoly f);
bool is_monic(const FqContext& F, const FqPoly& f);
int poly_eval(const FqContext& F, const FqPoly& f, int a);

/// Rabin irreducibility test.
bool is_irreducible(const FqContext& F, const FqPoly& f);

/// All monic irreducibles of degree d (including x for d = 1).
std::vector<FqPoly> irreducibles(const FqContext& F, Int d);

/// Monic polynomial whose roots are the inverses of the roots of f.
/// Involutive; rejects f = x (and anything with root 0).
FqPoly dual(const FqContext& F, const FqPoly& f);

/// (-f)(x) = (-1)^deg f(-x): the monic polynomial with negated roots.
FqPoly negate_class(const FqContext& F, const FqPoly& f);

struct Classification {
  GammaClass cls = GammaClass::F0;
  Int delta = 0;       // reduced degree of the F-element
  int epsilon = 0;     // -1 on F1, +1 on F2, 0 on F0
  FqPoly partner;      // the dual factor, F2 only
};

/// Classify a monic irreducible != x into F0 / F1 / F2-with-partner.
/// For an F2 factor Gamma, the F-element is the product Gamma * Gamma^*
/// and delta = deg Gamma.
Classification classify(const FqContext& F, const FqPoly& gamma);

/// sigma on F1 ∪ F2, computed as a power of x modulo gamma:
/// F1 (deg = 2*delta): +1 iff alpha^((q^delta + 1)/2) = 1, i.e. alpha is a
///   square in the norm-one subgroup of F_{q^(2 delta)};
/// F2 factor (deg = delta): +1 iff alpha^((q^delta - 1)/2) = 1, i.e. alpha
///   is a square in F_{q^delta}.
int sigma(const FqContext& F, const FqPoly& gamma);

/// Abstract descriptor of a concrete F1/F2 divisor.
GammaDescriptor describe(const FqContext& F, const FqPoly& gamma);

/// Necklace count (1/d) sum_{e | d} mu(e) q^(d/e); test oracle lives in
/// the suites, this is the library-side count.
Int irreducible_count(Int q, Int d);

}  // namespace weylfock
