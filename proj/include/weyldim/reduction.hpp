#ifndef WEYLDIM_REDUCTION_HPP
#define WEYLDIM_REDUCTION_HPP

#include <vector>

#include "weyldim/terms.hpp"

namespace weyldim {

inline constexpr long kDefaultStepBudget = 200000;

struct ReductionResult {
  ModuleElement remainder;
  std::vector<WeylElement> quotients;  // one per element of G
  long steps = 0;
  std::vector<Term> trace;  // the term cancelled at each step
};

// Definition 4.2 predicate: no term of f is a multiple theta*u_g with
// ord_d(theta v_g) <= ord_d v_f; the zero element is reduced by convention.
bool is_reduced(const ModuleElement& f, const std::vector<ModuleElement>& g);

// Single (x,d)-reduction step of f by g at the term w of f.
ModuleElement reduce_step(const ModuleElement& f, const ModuleElement& g,
                          const Term& w);

// Full (x,d)-normal form with quotient tracking. Deterministic: cancels the
// <_x-greatest eligible term, by the g with the <_x-greatest x-leader
// (smallest index on ties). f = remainder + sum quotients[i] * g[i].
ReductionResult normal_form(const ModuleElement& f,
                            const std::vector<ModuleElement>& g,
                            long step_budget = kDefaultStepBudget);

// Ordinary single-order division (no ord_d side condition): every term
// divisible by the order-leader of some g gets cancelled. Canonical when g is
// a Groebner basis for that order.
ReductionResult normal_form_single(const ModuleElement& f,
                                   const std::vector<ModuleElement>& g,
                                   TermOrder order,
                                   long step_budget = kDefaultStepBudget);

}  // namespace weyldim

#endif
