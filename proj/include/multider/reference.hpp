#ifndef MULTIDER_REFERENCE_HPP
#define MULTIDER_REFERENCE_HPP

#include <vector>

#include "multider/groebner.hpp"

namespace multider {

/**
 * Textbook serial Buchberger: FIFO queue over all critical pairs, no pair
 * pruning, no batching, no interreduction. Kept as the reference
 * implementation the optimized engine is checked against (initial modules
 * of both outputs must agree) and as the serial baseline for the benchmark.
 * Output is a Groebner basis but generally redundant and not reduced.
 */
std::vector<VecPoly> buchberger_naive(std::vector<VecPoly> gens, const ModuleOrder& ord);

// minimal set of leading terms of a basis, canonically sorted; two bases
// generate the same initial module iff these agree
std::vector<ModTerm> initial_module(const std::vector<VecPoly>& basis, const ModuleOrder& ord);

}  // namespace multider

#endif
