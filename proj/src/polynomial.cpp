#include "multider/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace multider {

std::string monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.n; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  return os.str();
}

Polynomial Polynomial::constant(const Rational& c, int nvars) {
  Polynomial p(nvars);
  if (!multider::is_zero(c)) p.terms_.emplace_back(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int i, int nvars) {
  Polynomial p(nvars);
  p.terms_.emplace_back(Monomial::var(i, nvars), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.n);
  if (!multider::is_zero(c)) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, int nvars) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return canonical_compare(a.first, b.first) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && multider::is_zero(out.back().second)) out.pop_back();
  }
  terms_ = std::move(out);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.deg;
  for (const auto& t : terms_)
    if (t.first.deg != d) return false;
  return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return static_cast<int>(terms_.front().first.deg);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

const Rational& Polynomial::constant_value() const {
  assert(!terms_.empty());
  return terms_.front().second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  // merge two sorted term lists
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = canonical_compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!multider::is_zero(s)) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (is_zero()) return *this;
  if (o.is_zero()) {
    terms_.clear();
    nvars_ = o.nvars_ ? o.nvars_ : nvars_;
    return *this;
  }
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.emplace_back(mul(a.first, b.first), a.second * b.second);
  *this = from_terms(std::move(prod), nvars_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (multider::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(Rational(1), nvars_);
  Polynomial base(*this);
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << monomial_to_string(m);
    }
    first = false;
  }
  return os.str();
}

Polynomial linear_difference_power(int i, int j, unsigned m, int nvars) {
  Polynomial base = Polynomial::variable(i, nvars) - Polynomial::variable(j, nvars);
  return base.pow(m);
}

}  // namespace multider
