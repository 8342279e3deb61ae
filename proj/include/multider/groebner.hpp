#ifndef MULTIDER_GROEBNER_HPP
#define MULTIDER_GROEBNER_HPP

#include <memory>
#include <utility>
#include <vector>

#include "multider/order.hpp"
#include "multider/polynomial.hpp"

namespace multider {

// Term of a free-module element: monomial times basis vector e_comp.
struct ModTerm {
  Monomial mono;
  int32_t comp = 0;
};

inline bool operator==(const ModTerm& a, const ModTerm& b) {
  return a.comp == b.comp && a.mono == b.mono;
}

/**
 * Position-over-term module order on S^r: e_0 > e_1 > ..., ties broken by
 * the base monomial order. Because lower components dominate outright, the
 * same order serves as the elimination order used for syzygy and kernel
 * computations (vectors whose leading term lies in a high component block
 * have no support in the lower block at all).
 */
struct ModuleOrder {
  MonomialOrder base;

  int compare(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return base.compare(a.mono, b.mono);
  }
  bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }
};

// Element of a free module, terms sorted strictly descending under the
// active ModuleOrder, no zero coefficients.
struct VecPoly {
  std::vector<std::pair<ModTerm, Rational>> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead_term() const { return terms.front().first; }
  const Rational& lead_coeff() const { return terms.front().second; }
};

// ----- construction / conversion -----

VecPoly vecpoly_from_terms(std::vector<std::pair<ModTerm, Rational>> raw, const ModuleOrder& ord);
// embeds a ring polynomial into component `comp`
VecPoly vecpoly_from_polynomial(const Polynomial& p, int comp, const ModuleOrder& ord);
// splits a module element into per-component polynomials (rank entries)
std::vector<Polynomial> vecpoly_to_polynomials(const VecPoly& v, int rank, int nvars);

// ----- arithmetic -----

VecPoly vp_add(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord);
// a + c * x^m * b
VecPoly vp_add_scaled(const VecPoly& a, const Rational& c, const Monomial& m, const VecPoly& b,
                      const ModuleOrder& ord);
VecPoly vp_scale(VecPoly a, const Rational& c);
void vp_make_monic(VecPoly& a);
// deterministic total order on vectors (leading terms first, then
// coefficients); used to canonicalize batch results
int vp_compare(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord);

// S-vector of two elements with leading terms in the same component
VecPoly s_vector(const VecPoly& f, const VecPoly& g, const ModuleOrder& ord);

// Full normal form: every term of the result is irreducible against basis.
VecPoly normal_form(const VecPoly& f, const std::vector<VecPoly>& basis, const ModuleOrder& ord);

struct Division {
  VecPoly remainder;
  std::vector<Polynomial> quotients;  // f = sum quotients[k] * basis[k] + remainder
};
Division divide(const VecPoly& f, const std::vector<VecPoly>& basis, const ModuleOrder& ord,
                int nvars);

// ----- Groebner bases -----

struct GroebnerOptions {
  bool parallel = true;  // OpenMP batch reduction of same-degree S-pairs
  // degree shift per component, used only to batch homogeneous S-pairs by
  // their twisted degree; safe to leave empty
  std::vector<int> comp_twists;
};

/**
 * Reduced Groebner basis of the submodule generated by `gens`.
 *
 * Output is canonical: monic, fully interreduced, sorted ascending by
 * leading term, hence independent of generator order, batching and thread
 * count. Empty input yields the empty basis.
 */
std::vector<VecPoly> groebner_basis(std::vector<VecPoly> gens, const ModuleOrder& ord,
                                    const GroebnerOptions& opts = {});

// every S-vector of the set reduces to zero (Buchberger criterion)
bool is_groebner_basis(const std::vector<VecPoly>& basis, const ModuleOrder& ord);

// Incremental wrapper: membership queries against a basis that grows one
// generator at a time (used by minimal-generator extraction). The pair
// queue persists across insertions, so each add only saturates new pairs.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const ModuleOrder& ord);
  ~IncrementalBasis();
  IncrementalBasis(IncrementalBasis&&) noexcept;

  // reduces v against the current basis; returns true (and extends the
  // basis) when v is not already a member
  bool add_if_new(const VecPoly& v);
  bool contains(const VecPoly& v) const;
  const std::vector<VecPoly>& basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ----- public polynomial-level API -----

// Groebner basis of an ideal given by ring polynomials
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);

// Groebner basis of a submodule of S^rank given by coordinate vectors
std::vector<std::vector<Polynomial>> groebner_basis_module(
    const std::vector<std::vector<Polynomial>>& gens, const MonomialOrder& order);

bool ideal_contains(const std::vector<Polynomial>& groebner, const Polynomial& f,
                    const MonomialOrder& order);

}  // namespace multider

#endif
