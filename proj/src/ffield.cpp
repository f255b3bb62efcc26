#include "weylfock/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace weylfock {

GammaDescriptor negate_descriptor(const GammaDescriptor& g, int zeta_minus1) {
  GammaDescriptor out = g;
  out.sigma = g.sigma * g.epsilon() * sign_pow(zeta_minus1, g.delta);
  return out;
}

namespace {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, or throws.
std::pair<Int, Int> prime_power(Int q) {
  for (Int p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    Int e = 0, m = q;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1 || !is_prime(p)) throw domain_error("q is not a prime power");
    return {p, e};
  }
  if (!is_prime(q)) throw domain_error("q is not a prime power");
  return {q, 1};
}

// Coefficient vectors as base-p digit codes.
std::vector<int> decode(Int code, Int p, Int e) {
  std::vector<int> d(static_cast<size_t>(e));
  for (Int i = 0; i < e; ++i) { d[static_cast<size_t>(i)] = static_cast<int>(code % p); code /= p; }
  return d;
}

Int encode(const std::vector<int>& digits, Int p) {
  Int code = 0;
  for (size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

// Multiply in Z/p[x] mod m (monic of degree e).
std::vector<int> mulmod_digits(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& m, Int p) {
  const size_t e = m.size() - 1;
  std::vector<int> prod(2 * e - 1, 0);
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < e; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<Int>(a[i]) * b[j]) % p);
  for (size_t k = prod.size(); k-- > e;) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (size_t i = 0; i < e; ++i) {
      Int v = prod[k - e + i] - static_cast<Int>(c) * m[i];
      prod[k - e + i] = static_cast<int>(((v % p) + p) % p);
    }
  }
  prod.resize(e);
  return prod;
}

// Irreducibility over Z/p by trial multiplication: no degree-e monic m is
// needed beyond small e, so brute force on roots/products is fine here.
bool irreducible_digits(const std::vector<int>& m, Int p) {
  const Int e = static_cast<Int>(m.size()) - 1;
  if (e == 1) return true;
  // No roots.
  for (Int r = 0; r < p; ++r) {
    Int acc = 0;
    for (size_t i = m.size(); i-- > 0;) acc = (acc * r + m[i]) % p;
    if (acc == 0) return false;
  }
  if (e <= 3) return true;
  // Trial division by monic polynomials of degree 2..e/2.
  for (Int d = 2; 2 * d <= e; ++d) {
    Int count = 1;
    for (Int i = 0; i < d; ++i) count *= p;
    for (Int code = 0; code < count; ++code) {
      std::vector<int> div = decode(code, p, d);
      div.push_back(1);
      // long division remainder
      std::vector<Int> rem(m.begin(), m.end());
      for (size_t k = rem.size(); k-- > static_cast<size_t>(d);) {
        Int c = rem[k] % p;
        if (c == 0) continue;
        rem[k] = 0;
        for (Int i = 0; i < d; ++i)
          rem[k - static_cast<size_t>(d) + static_cast<size_t>(i)] =
              ((rem[k - static_cast<size_t>(d) + static_cast<size_t>(i)] - c * div[static_cast<size_t>(i)]) % p + p) % p;
      }
      bool zero = true;
      for (size_t i = 0; i < static_cast<size_t>(d); ++i)
        if (rem[i] % p != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FqContext::FqContext(Int q) : q_(q) {
  if (q < 3 || q % 2 == 0) throw domain_error("q must be an odd prime power >= 3");
  auto [p, e] = prime_power(q);
  p_ = p;
  e_ = e;
  // Modulus for the extension: first monic irreducible of degree e.
  std::vector<int> mod;
  if (e == 1) {
    mod = {0, 1};
  } else {
    Int count = 1;
    for (Int i = 0; i < e; ++i) count *= p;
    for (Int code = 0; code < count; ++code) {
      std::vector<int> m = decode(code, p, e);
      m.push_back(1);
      if (irreducible_digits(m, p)) { mod = m; break; }
    }
  }
  const size_t n = static_cast<size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  for (Int a = 0; a < q; ++a) {
    auto da = decode(a, p, e);
    std::vector<int> dn(da.size());
    for (size_t i = 0; i < da.size(); ++i) dn[i] = static_cast<int>((p - da[i]) % p);
    neg_[static_cast<size_t>(a)] = static_cast<int>(encode(dn, p));
    for (Int b = 0; b < q; ++b) {
      auto db = decode(b, p, e);
      std::vector<int> ds(da.size());
      for (size_t i = 0; i < da.size(); ++i) ds[i] = static_cast<int>((da[i] + db[i]) % p);
      add_[idx(static_cast<int>(a), static_cast<int>(b))] = static_cast<int>(encode(ds, p));
      mul_[idx(static_cast<int>(a), static_cast<int>(b))] =
          static_cast<int>(encode(mulmod_digits(da, db, mod, p), p));
    }
  }
}

int FqContext::inv(int a) const {
  if (a == 0) throw domain_error("division by zero in F_q");
  return pow(a, q_ - 2);
}

int FqContext::pow(int a, Int e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FqContext::from_int(Int n) const {
  Int r = ((n % p_) + p_) % p_;
  return static_cast<int>(r);
}

std::vector<int> FqContext::elements() const {
  std::vector<int> out(static_cast<size_t>(q_));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

FqPoly poly_trim(FqPoly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

FqPoly poly_x() { return FqPoly{{0, 1}}; }
FqPoly poly_constant(int a) { return poly_trim(FqPoly{{a}}); }
FqPoly poly_linear(const FqContext& F, int a) { return FqPoly{{F.neg(a), 1}}; }

FqPoly poly_add(const FqContext& F, const FqPoly& f, const FqPoly& g) {
  FqPoly out;
  out.c.resize(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) {
    int a = i < f.c.size() ? f.c[i] : 0;
    int b = i < g.c.size() ? g.c[i] : 0;
    out.c[i] = F.add(a, b);
  }
  return poly_trim(std::move(out));
}

FqPoly poly_sub(const FqContext& F, const FqPoly& f, const FqPoly& g) {
  FqPoly ng = g;
  for (int& x : ng.c) x = F.neg(x);
  return poly_add(F, f, ng);
}

FqPoly poly_mul(const FqContext& F, const FqPoly& f, const FqPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  FqPoly out;
  out.c.assign(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i)
    for (size_t j = 0; j < g.c.size(); ++j)
      out.c[i + j] = F.add(out.c[i + j], F.mul(f.c[i], g.c[j]));
  return poly_trim(std::move(out));
}

FqPoly poly_mod(const FqContext& F, FqPoly f, const FqPoly& m) {
  if (!is_monic(F, m)) throw domain_error("poly_mod: modulus must be monic");
  const Int dm = m.degree();
  while (f.degree() >= dm) {
    int c = f.c.back();
    size_t shiftpos = f.c.size() - 1 - static_cast<size_t>(dm);
    for (size_t i = 0; i < m.c.size(); ++i)
      f.c[shiftpos + i] = F.sub(f.c[shiftpos + i], F.mul(c, m.c[i]));
    f = poly_trim(std::move(f));
  }
  return f;
}

FqPoly poly_powmod(const FqContext& F, FqPoly base, Int e, const FqPoly& m) {
  if (e < 0) throw domain_error("poly_powmod: exponent must be non-negative");
  FqPoly result = poly_constant(1);
  base = poly_mod(F, std::move(base), m);
  while (e > 0) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), m);
    base = poly_mod(F, poly_mul(F, base, base), m);
    e >>= 1;
  }
  return result;
}

FqPoly poly_make_monic(const FqContext& F, FqPoly f) {
  if (f.is_zero()) return f;
  int lead = f.c.back();
  if (lead == 1) return f;
  int il = F.inv(lead);
  for (int& x : f.c) x = F.mul(x, il);
  return f;
}

bool is_monic(const FqContext& F, const FqPoly& f) {
  (void)F;
  return !f.is_zero() && f.c.back() == 1;
}

FqPoly poly_gcd(const FqContext& F, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = poly_mod(F, std::move(a), poly_make_monic(F, b));
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, std::move(a));
}

int poly_eval(const FqContext& F, const FqPoly& f, int a) {
  int acc = 0;
  for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, a), f.c[i]);
  return acc;
}

bool is_irreducible(const FqContext& F, const FqPoly& f) {
  const Int d = f.degree();
  if (d < 1 || !is_monic(F, f)) return false;
  if (d == 1) return true;
  // x^(q^d) = x mod f, and gcd(x^(q^(d/r)) - x, f) = 1 for primes r | d.
  auto qpow = [&](Int k) {
    Int e = 1;
    for (Int i = 0; i < k; ++i) e *= F.q();
    return e;
  };
  FqPoly xq = poly_powmod(F, poly_x(), qpow(d), f);
  if (poly_sub(F, xq, poly_x()) != FqPoly{}) return false;
  for (Int r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(r)) continue;
    FqPoly g = poly_sub(F, poly_powmod(F, poly_x(), qpow(d / r), f), poly_x());
    FqPoly gc = poly_gcd(F, f, g);
    if (gc.degree() != 0) return false;
  }
  return true;
}

std::vector<FqPoly> irreducibles(const FqContext& F, Int d) {
  if (d < 1) throw domain_error("irreducibles: degree must be positive");
  Int count = 1;
  for (Int i = 0; i < d; ++i) count *= F.q();
  std::vector<FqPoly> out;
  for (Int code = 0; code < count; ++code) {
    FqPoly f;
    Int c = code;
    for (Int i = 0; i < d; ++i) { f.c.push_back(static_cast<int>(c % F.q())); c /= F.q(); }
    f.c.push_back(1);
    if (is_irreducible(F, f)) out.push_back(std::move(f));
  }
  return out;
}

FqPoly dual(const FqContext& F, const FqPoly& f) {
  if (f.is_zero() || f.c.front() == 0) throw domain_error("dual: polynomial has root 0");
  FqPoly rev;
  rev.c.assign(f.c.rbegin(), f.c.rend());
  return poly_make_monic(F, std::move(rev));
}

FqPoly negate_class(const FqContext& F, const FqPoly& f) {
  if (f.is_zero()) return f;
  FqPoly out = f;
  const size_t d = f.c.size() - 1;
  for (size_t i = 0; i < f.c.size(); ++i)
    if ((d - i) % 2 == 1) out.c[i] = F.neg(out.c[i]);
  return out;
}

Classification classify(const FqContext& F, const FqPoly& gamma) {
  if (!is_irreducible(F, gamma)) throw domain_error("classify: input must be monic irreducible");
  if (gamma == poly_x()) throw domain_error("classify: x is excluded from the F-classes");
  const FqPoly xm1 = poly_linear(F, 1);
  const FqPoly xp1 = poly_linear(F, F.neg(1));
  if (gamma == xm1 || gamma == xp1) return {GammaClass::F0, 1, 0, {}};
  FqPoly g_star = dual(F, gamma);
  if (g_star == gamma) {
    if (gamma.degree() % 2 != 0) throw domain_error("classify: self-dual irreducible of odd degree");
    return {GammaClass::F1, gamma.degree() / 2, -1, {}};
  }
  return {GammaClass::F2, gamma.degree(), 1, std::move(g_star)};
}

int sigma(const FqContext& F, const FqPoly& gamma) {
  Classification cl = classify(F, gamma);
  if (cl.cls == GammaClass::F0) throw domain_error("sigma is defined on F1 ∪ F2 only");
  Int qd = 1;
  for (Int i = 0; i < cl.delta; ++i) qd *= F.q();
  const Int e = (cl.cls == GammaClass::F1) ? (qd + 1) / 2 : (qd - 1) / 2;
  FqPoly power = poly_powmod(F, poly_x(), e, gamma);
  return power == poly_constant(1) ? 1 : -1;
}

GammaDescriptor describe(const FqContext& F, const FqPoly& gamma) {
  Classification cl = classify(F, gamma);
  if (cl.cls == GammaClass::F0) throw domain_error("describe: F0 has no descriptor");
  return {cl.cls, cl.delta, sigma(F, gamma)};
}

Int irreducible_count(Int q, Int d) {
  // (1/d) * sum over squarefree e | d of mu(e) q^(d/e)
  auto mobius = [](Int n) {
    int m = 1;
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  Int total = 0;
  for (Int e = 1; e <= d; ++e) {
    if (d % e) continue;
    Int term = mobius(e);
    if (term == 0) continue;
    Int qe = 1;
    for (Int i = 0; i < d / e; ++i) qe *= q;
    total += term * qe;
  }
  return total / d;
}

}  // namespace weylfock
