#include "weyldim/reduction.hpp"

#include <algorithm>

namespace weyldim {

namespace {

// ord_d((w / u_g) v_g), all quantities term-level
int delta_cost(const Term& w, const Leaders& g) {
  return (w.ordd - g.u.ordd) + g.v.ordd;
}

std::vector<Leaders> basis_leaders(const std::vector<ModuleElement>& g,
                                   const char* where) {
  std::vector<Leaders> out;
  out.reserve(g.size());
  for (const auto& e : g) {
    if (e.is_zero()) throw ZeroElementError(std::string(where) + ": zero basis element");
    out.push_back(leaders(e));
  }
  return out;
}

}  // namespace

bool is_reduced(const ModuleElement& f, const std::vector<ModuleElement>& g) {
  if (f.is_zero()) return true;
  auto ls = basis_leaders(g, "is_reduced");
  const int vf_ordd = leaders(f).v.ordd;
  for (const auto& [w, c] : f.terms()) {
    for (const auto& l : ls) {
      if (term_divides(l.u, w) && delta_cost(w, l) <= vf_ordd) return false;
    }
  }
  return true;
}

ModuleElement reduce_step(const ModuleElement& f, const ModuleElement& g,
                          const Term& w) {
  if (g.is_zero()) throw ZeroElementError("reduce_step: zero divisor");
  Rat a = f.coeff(w);
  if (a == 0)
    throw PreconditionError("reduce_step: term w does not appear in f");
  Leaders lg = leaders(g);
  if (!term_divides(lg.u, w))
    throw PreconditionError("reduce_step: u_g does not divide w");
  if (f.is_zero() || delta_cost(w, lg) > leaders(f).v.ordd)
    throw PreconditionError(
        "reduce_step: ord_d((w/u_g) v_g) <= ord_d v_f violated");
  WeylMonomial theta = term_quotient(w, lg.u);
  return f - act(scalar_mul(a / lg.lc_x, WeylElement(theta, Rat(1))), g);
}

ReductionResult normal_form(const ModuleElement& f,
                            const std::vector<ModuleElement>& g,
                            long step_budget) {
  auto ls = basis_leaders(g, "normal_form");
  ReductionResult res;
  res.remainder = f;
  res.quotients.assign(g.size(), WeylElement(f.n()));

  while (!res.remainder.is_zero()) {
    const int vf_ordd = leaders(res.remainder).v.ordd;
    // the <_x-greatest eligible term; map iterates ascending, so walk back
    const Term* z = nullptr;
    Rat cz;
    for (auto it = res.remainder.terms().rbegin();
         it != res.remainder.terms().rend(); ++it) {
      for (const auto& l : ls) {
        if (term_divides(l.u, it->first) &&
            delta_cost(it->first, l) <= vf_ordd) {
          z = &it->first;
          cz = it->second;
          break;
        }
      }
      if (z) break;
    }
    if (!z) break;  // (x,d)-reduced

    // the g with the <_x-greatest x-leader among eligible divisors,
    // smallest index on ties
    int k = -1;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
      const auto& l = ls[static_cast<std::size_t>(i)];
      if (!term_divides(l.u, *z) || delta_cost(*z, l) > vf_ordd) continue;
      if (k < 0 || cmp_term_x(ls[static_cast<std::size_t>(k)].u, l.u) < 0) k = i;
    }

    const auto& lk = ls[static_cast<std::size_t>(k)];
    WeylMonomial theta = term_quotient(*z, lk.u);
    WeylElement cofactor =
        scalar_mul(cz / lk.lc_x, WeylElement(theta, Rat(1)));
    res.trace.push_back(*z);
    res.quotients[static_cast<std::size_t>(k)] =
        res.quotients[static_cast<std::size_t>(k)] + cofactor;
    res.remainder =
        res.remainder - act(cofactor, g[static_cast<std::size_t>(k)]);
    if (++res.steps > step_budget)
      throw StepBudgetExceeded("normal_form: step budget exceeded");
  }
  return res;
}

ReductionResult normal_form_single(const ModuleElement& f,
                                   const std::vector<ModuleElement>& g,
                                   TermOrder order, long step_budget) {
  std::vector<Term> lead;
  std::vector<Rat> lc;
  lead.reserve(g.size());
  for (const auto& e : g) {
    if (e.is_zero())
      throw ZeroElementError("normal_form_single: zero basis element");
    lead.push_back(leader(e, order));
    lc.push_back(e.coeff(lead.back()));
  }

  ReductionResult res;
  res.remainder = f;
  res.quotients.assign(g.size(), WeylElement(f.n()));

  while (!res.remainder.is_zero()) {
    const Term* z = nullptr;
    Rat cz;
    int k = -1;
    for (const auto& [w, c] : res.remainder.terms()) {
      int ki = -1;
      for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        if (term_divides(lead[static_cast<std::size_t>(i)], w)) {
          ki = i;
          break;
        }
      }
      if (ki < 0) continue;
      if (!z || cmp_term(order, *z, w) < 0) {
        z = &w;
        cz = c;
        k = ki;
      }
    }
    if (!z) break;

    WeylMonomial theta = term_quotient(*z, lead[static_cast<std::size_t>(k)]);
    WeylElement cofactor = scalar_mul(cz / lc[static_cast<std::size_t>(k)],
                                      WeylElement(theta, Rat(1)));
    res.trace.push_back(*z);
    res.quotients[static_cast<std::size_t>(k)] =
        res.quotients[static_cast<std::size_t>(k)] + cofactor;
    res.remainder =
        res.remainder - act(cofactor, g[static_cast<std::size_t>(k)]);
    if (++res.steps > step_budget)
      throw StepBudgetExceeded("normal_form_single: step budget exceeded");
  }
  return res;
}

}  // namespace weyldim
