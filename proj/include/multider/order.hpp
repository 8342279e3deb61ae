#ifndef MULTIDER_ORDER_HPP
#define MULTIDER_ORDER_HPP

#include <cassert>
#include <string>
#include <vector>

#include "multider/monomial.hpp"

namespace multider {

enum class OrderKind { grevlex, lex };

// Global monomial order with an optional variable permutation: perm[k] is
// the variable sitting at priority position k. Empty perm means identity.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<int> perm;

  static MonomialOrder grevlex() { return MonomialOrder{}; }
  static MonomialOrder lex() { return MonomialOrder{OrderKind::lex, {}}; }

  int position(int k, int n) const {
    return perm.empty() ? k : perm[static_cast<size_t>(k)];
  }

  // <0 if a < b, 0 if equal, >0 if a > b
  int compare(const Monomial& a, const Monomial& b) const {
    assert(a.n == b.n);
    const int n = a.n;
    if (kind == OrderKind::grevlex) {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      // larger iff the last nonzero entry of a-b (in priority order) is negative
      for (int k = n - 1; k >= 0; --k) {
        const int p = position(k, n);
        const int d = a.e[p] - b.e[p];
        if (d != 0) return d > 0 ? -1 : 1;
      }
      return 0;
    }
    for (int k = 0; k < n; ++k) {
      const int p = position(k, n);
      const int d = a.e[p] - b.e[p];
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const { return kind == OrderKind::grevlex ? "grevlex" : "lex"; }
};

}  // namespace multider

#endif
