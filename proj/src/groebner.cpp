#include "multider/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multider {

namespace {

int twisted_degree(const ModTerm& t, const std::vector<int>& twists) {
  int d = t.mono.deg;
  if (static_cast<size_t>(t.comp) < twists.size()) d += twists[static_cast<size_t>(t.comp)];
  return d;
}

// single nonzero component, or -1
int sole_component(const VecPoly& v) {
  int c = v.terms.front().first.comp;
  for (const auto& t : v.terms)
    if (t.first.comp != c) return -1;
  return c;
}

}  // namespace

VecPoly vecpoly_from_terms(std::vector<std::pair<ModTerm, Rational>> raw, const ModuleOrder& ord) {
  std::sort(raw.begin(), raw.end(),
            [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
  VecPoly v;
  v.terms.reserve(raw.size());
  for (auto& t : raw) {
    if (!v.terms.empty() && v.terms.back().first == t.first)
      v.terms.back().second += t.second;
    else
      v.terms.push_back(std::move(t));
    if (!v.terms.empty() && is_zero(v.terms.back().second)) v.terms.pop_back();
  }
  return v;
}

VecPoly vecpoly_from_polynomial(const Polynomial& p, int comp, const ModuleOrder& ord) {
  std::vector<std::pair<ModTerm, Rational>> raw;
  raw.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) raw.push_back({{m, comp}, c});
  return vecpoly_from_terms(std::move(raw), ord);
}

std::vector<Polynomial> vecpoly_to_polynomials(const VecPoly& v, int rank, int nvars) {
  std::vector<std::vector<Polynomial::Term>> buckets(static_cast<size_t>(rank));
  for (const auto& [t, c] : v.terms) {
    assert(t.comp >= 0 && t.comp < rank);
    buckets[static_cast<size_t>(t.comp)].emplace_back(t.mono, c);
  }
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(rank));
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b), nvars));
  return out;
}

VecPoly vp_add(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord) {
  VecPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    const int c = ord.compare(a.terms[i].first, b.terms[j].first);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Rational s = a.terms[i].second + b.terms[j].second;
      if (!is_zero(s)) r.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

VecPoly vp_add_scaled(const VecPoly& a, const Rational& c, const Monomial& m, const VecPoly& b,
                      const ModuleOrder& ord) {
  VecPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    ModTerm bt{mul(m, b.terms[j].first.mono), b.terms[j].first.comp};
    const int cmp = ord.compare(a.terms[i].first, bt);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      Rational s = c * b.terms[j].second;
      if (!is_zero(s)) r.terms.emplace_back(bt, std::move(s));
      ++j;
    } else {
      Rational s = a.terms[i].second + c * b.terms[j].second;
      if (!is_zero(s)) r.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) {
    ModTerm bt{mul(m, b.terms[j].first.mono), b.terms[j].first.comp};
    Rational s = c * b.terms[j].second;
    if (!is_zero(s)) r.terms.emplace_back(bt, std::move(s));
  }
  return r;
}

VecPoly vp_scale(VecPoly a, const Rational& c) {
  if (is_zero(c)) return VecPoly{};
  for (auto& t : a.terms) t.second *= c;
  return a;
}

void vp_make_monic(VecPoly& a) {
  if (a.is_zero() || is_one(a.lead_coeff())) return;
  const Rational inv = 1 / a.lead_coeff();
  for (auto& t : a.terms) t.second *= inv;
}

int vp_compare(const VecPoly& a, const VecPoly& b, const ModuleOrder& ord) {
  const size_t k = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < k; ++i) {
    const int c = ord.compare(a.terms[i].first, b.terms[i].first);
    if (c != 0) return c;
    const int s = cmp(a.terms[i].second, b.terms[i].second);
    if (s != 0) return s;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

VecPoly s_vector(const VecPoly& f, const VecPoly& g, const ModuleOrder& ord) {
  assert(!f.is_zero() && !g.is_zero());
  assert(f.lead_term().comp == g.lead_term().comp);
  const Monomial l = lcm(f.lead_term().mono, g.lead_term().mono);
  const Monomial mf = quotient(l, f.lead_term().mono);
  const Monomial mg = quotient(l, g.lead_term().mono);
  // (1/lc f) x^mf f - (1/lc g) x^mg g
  VecPoly sf = vp_add_scaled(VecPoly{}, 1 / f.lead_coeff(), mf, f, ord);
  return vp_add_scaled(sf, -(1 / g.lead_coeff()), mg, g, ord);
}

namespace {

// index of a basis element whose leading term divides t, or -1
int find_reducer(const ModTerm& t, const std::vector<VecPoly>& basis) {
  for (size_t k = 0; k < basis.size(); ++k) {
    const ModTerm& lt = basis[k].lead_term();
    if (lt.comp == t.comp && divides(lt.mono, t.mono)) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

VecPoly normal_form(const VecPoly& f, const std::vector<VecPoly>& basis, const ModuleOrder& ord) {
  if (basis.empty()) return f;
  VecPoly h = f;
  VecPoly rem;
  while (!h.is_zero()) {
    const int k = find_reducer(h.lead_term(), basis);
    if (k < 0) {
      rem.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
      continue;
    }
    const VecPoly& g = basis[static_cast<size_t>(k)];
    const Monomial q = quotient(h.lead_term().mono, g.lead_term().mono);
    const Rational c = -(h.lead_coeff() / g.lead_coeff());
    h = vp_add_scaled(h, c, q, g, ord);
  }
  return rem;
}

Division divide(const VecPoly& f, const std::vector<VecPoly>& basis, const ModuleOrder& ord,
                int nvars) {
  Division d;
  d.quotients.assign(basis.size(), Polynomial::zero(nvars));
  VecPoly h = f;
  while (!h.is_zero()) {
    const int k = find_reducer(h.lead_term(), basis);
    if (k < 0) {
      d.remainder.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
      continue;
    }
    const VecPoly& g = basis[static_cast<size_t>(k)];
    const Monomial q = quotient(h.lead_term().mono, g.lead_term().mono);
    const Rational c = h.lead_coeff() / g.lead_coeff();
    d.quotients[static_cast<size_t>(k)] += Polynomial::monomial(q, c);
    h = vp_add_scaled(h, -c, q, g, ord);
  }
  return d;
}

namespace {

struct CriticalPair {
  int i, j;      // basis indices, i < j
  Monomial lcm;  // lcm of leading monomials (components equal)
  int deg;       // twisted degree of the pair
};

struct PairQueue {
  std::vector<CriticalPair> pairs;
};

// Gebauer-Moeller update: push pairs of `t` against all previous basis
// elements, pruning with the chain criteria. All criteria are restricted to
// leading terms in the same component, which keeps them valid for modules;
// the coprimality criterion additionally requires both elements to be
// supported in a single common component (it is a ring-level argument).
void update_pairs(PairQueue& q, const std::vector<VecPoly>& basis, int t,
                  const std::vector<int>& twists) {
  const ModTerm& lt = basis[static_cast<size_t>(t)].lead_term();

  struct Cand {
    int i;
    Monomial l;
    bool alive;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < t; ++i) {
    const ModTerm& li = basis[static_cast<size_t>(i)].lead_term();
    if (li.comp != lt.comp) continue;
    cands.push_back({i, lcm(li.mono, lt.mono), true});
  }

  // criterion B: prune old pairs strictly refined by t
  std::vector<CriticalPair> kept;
  kept.reserve(q.pairs.size());
  for (auto& p : q.pairs) {
    const ModTerm& lp = basis[static_cast<size_t>(p.i)].lead_term();
    bool drop = false;
    if (lp.comp == lt.comp && divides(lt.mono, p.lcm)) {
      const Monomial lit = lcm(basis[static_cast<size_t>(p.i)].lead_term().mono, lt.mono);
      const Monomial ljt = lcm(basis[static_cast<size_t>(p.j)].lead_term().mono, lt.mono);
      if (lit != p.lcm && ljt != p.lcm) drop = true;
    }
    if (!drop) kept.push_back(std::move(p));
  }
  q.pairs = std::move(kept);

  // criterion M: drop candidates whose lcm is a proper multiple of another
  for (auto& a : cands) {
    for (const auto& b : cands) {
      if (a.i == b.i || !b.alive) continue;
      if (b.l != a.l && divides(b.l, a.l)) {
        a.alive = false;
        break;
      }
    }
  }
  // criterion F: among equal lcms keep the smallest index
  for (auto& a : cands) {
    if (!a.alive) continue;
    for (auto& b : cands) {
      if (b.i <= a.i || !b.alive) continue;
      if (a.l == b.l) b.alive = false;
    }
  }
  // coprimality (ring-level elements only)
  const int ct = sole_component(basis[static_cast<size_t>(t)]);
  for (auto& a : cands) {
    if (!a.alive || ct < 0) continue;
    const auto& fi = basis[static_cast<size_t>(a.i)];
    if (sole_component(fi) == ct && coprime(fi.lead_term().mono, lt.mono)) a.alive = false;
  }

  for (const auto& a : cands) {
    if (!a.alive) continue;
    CriticalPair p;
    p.i = a.i;
    p.j = t;
    p.lcm = a.l;
    p.deg = twisted_degree({a.l, lt.comp}, twists);
    q.pairs.push_back(std::move(p));
  }
}

bool pair_before(const CriticalPair& a, const CriticalPair& b, const ModuleOrder& ord) {
  if (a.deg != b.deg) return a.deg < b.deg;
  const int c = ord.base.compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// drop elements with redundant leading terms, then tail-reduce; output
// sorted ascending — the unique reduced basis
void reduce_final(std::vector<VecPoly>& basis, const ModuleOrder& ord) {
  std::sort(basis.begin(), basis.end(),
            [&](const VecPoly& a, const VecPoly& b) { return vp_compare(a, b, ord) < 0; });
  std::vector<VecPoly> minimal;
  for (auto& g : basis) {
    const ModTerm& lt = g.lead_term();
    bool redundant = false;
    for (const auto& h : minimal) {
      const ModTerm& lh = h.lead_term();
      if (lh.comp == lt.comp && divides(lh.mono, lt.mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<VecPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others, ord);
    vp_make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const VecPoly& a, const VecPoly& b) { return vp_compare(a, b, ord) < 0; });
  basis = std::move(minimal);
}

}  // namespace

std::vector<VecPoly> groebner_basis(std::vector<VecPoly> gens, const ModuleOrder& ord,
                                    const GroebnerOptions& opts) {
  std::vector<VecPoly> basis;
  PairQueue queue;

  auto insert = [&](VecPoly v) {
    vp_make_monic(v);
    basis.push_back(std::move(v));
    update_pairs(queue, basis, static_cast<int>(basis.size()) - 1, opts.comp_twists);
  };

  // deterministic start: seed generators in canonical order
  std::sort(gens.begin(), gens.end(),
            [&](const VecPoly& a, const VecPoly& b) { return vp_compare(a, b, ord) < 0; });
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    VecPoly r = normal_form(g, basis, ord);
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!queue.pairs.empty()) {
    // batch: all pairs of minimal twisted degree
    int dmin = queue.pairs.front().deg;
    for (const auto& p : queue.pairs) dmin = std::min(dmin, p.deg);
    std::vector<CriticalPair> batch;
    std::vector<CriticalPair> rest;
    for (auto& p : queue.pairs)
      (p.deg == dmin ? batch : rest).push_back(std::move(p));
    queue.pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(),
              [&](const CriticalPair& a, const CriticalPair& b) { return pair_before(a, b, ord); });

    // reduce the whole batch against the frozen basis; each reduction is
    // independent, so this is the data-parallel kernel
    std::vector<VecPoly> reduced(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && batch.size() > 1)
#endif
    for (long long bi = 0; bi < static_cast<long long>(batch.size()); ++bi) {
      const auto& p = batch[static_cast<size_t>(bi)];
      VecPoly s = s_vector(basis[static_cast<size_t>(p.i)], basis[static_cast<size_t>(p.j)], ord);
      reduced[static_cast<size_t>(bi)] = normal_form(s, basis, ord);
    }

    std::vector<VecPoly> survivors;
    for (auto& r : reduced)
      if (!r.is_zero()) survivors.push_back(std::move(r));
    std::sort(survivors.begin(), survivors.end(),
              [&](const VecPoly& a, const VecPoly& b) { return vp_compare(a, b, ord) < 0; });

    // sequential merge: later survivors may reduce against earlier ones
    for (auto& r : survivors) {
      VecPoly r2 = normal_form(r, basis, ord);
      if (!r2.is_zero()) insert(std::move(r2));
    }
  }

  reduce_final(basis, ord);
  return basis;
}

bool is_groebner_basis(const std::vector<VecPoly>& basis, const ModuleOrder& ord) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].lead_term().comp != basis[j].lead_term().comp) continue;
      VecPoly s = s_vector(basis[i], basis[j], ord);
      if (!normal_form(s, basis, ord).is_zero()) return false;
    }
  return true;
}

struct IncrementalBasis::Impl {
  ModuleOrder ord;
  std::vector<VecPoly> basis;
  PairQueue queue;

  explicit Impl(const ModuleOrder& o) : ord(o) {}

  void insert(VecPoly v) {
    vp_make_monic(v);
    basis.push_back(std::move(v));
    update_pairs(queue, basis, static_cast<int>(basis.size()) - 1, {});
  }

  void saturate() {
    while (!queue.pairs.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < queue.pairs.size(); ++k)
        if (pair_before(queue.pairs[k], queue.pairs[best], ord)) best = k;
      CriticalPair p = queue.pairs[best];
      queue.pairs.erase(queue.pairs.begin() + static_cast<long>(best));
      VecPoly s = s_vector(basis[static_cast<size_t>(p.i)], basis[static_cast<size_t>(p.j)], ord);
      VecPoly r = normal_form(s, basis, ord);
      if (!r.is_zero()) insert(std::move(r));
    }
  }
};

IncrementalBasis::IncrementalBasis(const ModuleOrder& ord) : impl_(new Impl(ord)) {}
IncrementalBasis::~IncrementalBasis() = default;
IncrementalBasis::IncrementalBasis(IncrementalBasis&&) noexcept = default;

bool IncrementalBasis::add_if_new(const VecPoly& v) {
  VecPoly r = normal_form(v, impl_->basis, impl_->ord);
  if (r.is_zero()) return false;
  impl_->insert(std::move(r));
  impl_->saturate();
  return true;
}

bool IncrementalBasis::contains(const VecPoly& v) const {
  return normal_form(v, impl_->basis, impl_->ord).is_zero();
}

const std::vector<VecPoly>& IncrementalBasis::basis() const { return impl_->basis; }

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  const ModuleOrder ord{order};
  int nvars = 0;
  std::vector<VecPoly> vs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    nvars = g.nvars();
    vs.push_back(vecpoly_from_polynomial(g, 0, ord));
  }
  auto basis = groebner_basis(std::move(vs), ord);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(vecpoly_to_polynomials(b, 1, nvars)[0]);
  return out;
}

std::vector<std::vector<Polynomial>> groebner_basis_module(
    const std::vector<std::vector<Polynomial>>& gens, const MonomialOrder& order) {
  const ModuleOrder ord{order};
  size_t rank = 0;
  int nvars = 0;
  std::vector<VecPoly> vs;
  for (const auto& g : gens) {
    if (rank == 0) rank = g.size();
    if (g.size() != rank) throw std::invalid_argument("module generators of unequal rank");
    std::vector<std::pair<ModTerm, Rational>> raw;
    for (size_t c = 0; c < g.size(); ++c) {
      if (!g[c].is_zero()) nvars = g[c].nvars();
      for (const auto& [m, q] : g[c].terms()) raw.push_back({{m, static_cast<int32_t>(c)}, q});
    }
    VecPoly v = vecpoly_from_terms(std::move(raw), ord);
    if (!v.is_zero()) vs.push_back(std::move(v));
  }
  auto basis = groebner_basis(std::move(vs), ord);
  std::vector<std::vector<Polynomial>> out;
  out.reserve(basis.size());
  for (const auto& b : basis)
    out.push_back(vecpoly_to_polynomials(b, static_cast<int>(rank), nvars));
  return out;
}

bool ideal_contains(const std::vector<Polynomial>& groebner, const Polynomial& f,
                    const MonomialOrder& order) {
  const ModuleOrder ord{order};
  std::vector<VecPoly> basis;
  basis.reserve(groebner.size());
  for (const auto& g : groebner)
    if (!g.is_zero()) basis.push_back(vecpoly_from_polynomial(g, 0, ord));
  if (f.is_zero()) return true;
  return normal_form(vecpoly_from_polynomial(f, 0, ord), basis, ord).is_zero();
}

}  // namespace multider
