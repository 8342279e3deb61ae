#include "multider/reference.hpp"

#include <algorithm>
#include <deque>

namespace multider {

std::vector<VecPoly> buchberger_naive(std::vector<VecPoly> gens, const ModuleOrder& ord) {
  std::vector<VecPoly> g;
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    vp_make_monic(f);
    g.push_back(std::move(f));
  }
  std::deque<std::pair<int, int>> queue;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (g[i].lead_term().comp == g[j].lead_term().comp)
        queue.emplace_back(static_cast<int>(i), static_cast<int>(j));

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    VecPoly s = s_vector(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)], ord);
    VecPoly r = normal_form(s, g, ord);
    if (r.is_zero()) continue;
    vp_make_monic(r);
    const int t = static_cast<int>(g.size());
    for (int k = 0; k < t; ++k)
      if (g[static_cast<size_t>(k)].lead_term().comp == r.lead_term().comp)
        queue.emplace_back(k, t);
    g.push_back(std::move(r));
  }
  return g;
}

std::vector<ModTerm> initial_module(const std::vector<VecPoly>& basis, const ModuleOrder& ord) {
  std::vector<ModTerm> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis)
    if (!b.is_zero()) leads.push_back(b.lead_term());
  std::sort(leads.begin(), leads.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) < 0; });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  // keep only minimal generators of the leading-term module
  std::vector<ModTerm> minimal;
  for (const auto& t : leads) {
    bool redundant = false;
    for (const auto& s : leads) {
      if (s == t) continue;
      if (s.comp == t.comp && divides(s.mono, t.mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(t);
  }
  return minimal;
}

}  // namespace multider
