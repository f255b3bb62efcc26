#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylfock {

using Int = long long;

/// Thrown when an operation precondition is violated.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Shared parameters for everything whose signs depend on q.
/// q enters the combinatorics only through q mod 4 (via the Legendre
/// symbol value zeta(-1)), except in the finite-field engine which works
/// with q itself.
struct GlobalContext {
  Int q = 3;

  explicit GlobalContext(Int q_) : q(q_) {
    if (q < 3 || q % 2 == 0) throw domain_error("q must be an odd prime power >= 3");
  }

  /// zeta(-1) = (-1)^((q-1)/2).
  int zeta_minus1() const { return (q % 4 == 1) ? 1 : -1; }
};

inline int sign_pow(int s, Int k) { return (k % 2 == 0) ? 1 : s; }

}  // namespace weylfock
