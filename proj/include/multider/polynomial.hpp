#ifndef MULTIDER_POLYNOMIAL_HPP
#define MULTIDER_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multider/monomial.hpp"
#include "multider/rational.hpp"

namespace multider {

/**
 * Sparse multivariate polynomial over the exact rationals.
 *
 * Terms are kept sorted descending under the fixed canonical comparison
 * (order-independent), with no zero coefficients, so equality is plain
 * vector equality and printing is deterministic.
 */
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(const Rational& c, int nvars);
  static Polynomial variable(int i, int nvars);  // x_i, zero-based
  static Polynomial monomial(const Monomial& m, const Rational& c);
  // builds from arbitrary (monomial, coeff) pairs, merging duplicates
  static Polynomial from_terms(std::vector<Term> terms, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial
  int total_degree() const;
  bool is_homogeneous() const;
  // degree if homogeneous and nonzero
  std::optional<int> homogeneous_degree() const;

  bool is_constant() const;
  // leading coefficient under the canonical storage order
  const Rational& constant_value() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;

  std::string to_string() const;

 private:
  void normalize();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// (x_i - x_j)^m, zero-based variable indices
Polynomial linear_difference_power(int i, int j, unsigned m, int nvars);

}  // namespace multider

#endif
