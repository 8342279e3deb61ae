#ifndef MULTIDER_MONOMIAL_HPP
#define MULTIDER_MONOMIAL_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>

namespace multider {

// Rings stay small (one variable per graph vertex); a fixed-width exponent
// array keeps monomials allocation-free in the Groebner inner loops.
inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<int16_t, kMaxVars> e{};
  int16_t n = 0;    // number of ring variables
  int16_t deg = 0;  // cached total degree

  static Monomial one(int nvars) {
    assert(nvars >= 0 && nvars <= kMaxVars);
    Monomial m;
    m.n = static_cast<int16_t>(nvars);
    return m;
  }

  // x_i^power, i zero-based
  static Monomial var(int i, int nvars, int power = 1) {
    Monomial m = one(nvars);
    assert(i >= 0 && i < nvars && power >= 0);
    m.e[i] = static_cast<int16_t>(power);
    m.deg = static_cast<int16_t>(power);
    return m;
  }

  bool is_one() const { return deg == 0; }
  int exponent(int i) const { return e[i]; }
};

inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.n == b.n && a.deg == b.deg && a.e == b.e;
}
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

inline Monomial mul(const Monomial& a, const Monomial& b) {
  assert(a.n == b.n);
  Monomial r = a;
  for (int i = 0; i < a.n; ++i) r.e[i] = static_cast<int16_t>(a.e[i] + b.e[i]);
  r.deg = static_cast<int16_t>(a.deg + b.deg);
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, caller guarantees divisibility
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  assert(divides(a, b));
  Monomial r = b;
  for (int i = 0; i < b.n; ++i) r.e[i] = static_cast<int16_t>(b.e[i] - a.e[i]);
  r.deg = static_cast<int16_t>(b.deg - a.deg);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.n == b.n);
  Monomial r = Monomial::one(a.n);
  int d = 0;
  for (int i = 0; i < a.n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<int16_t>(d);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  assert(a.n == b.n);
  Monomial r = Monomial::one(a.n);
  int d = 0;
  for (int i = 0; i < a.n; ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<int16_t>(d);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

// Fixed order-independent comparison used for canonical polynomial storage
// (degree, then exponents right to left). Returns <0, 0, >0.
inline int canonical_compare(const Monomial& a, const Monomial& b) {
  assert(a.n == b.n);
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = a.n - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m);

}  // namespace multider

#endif
