#include "weyldim/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace weyldim {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::below(long k) {
  return k <= 0 ? 0 : static_cast<long>(next() % static_cast<std::uint64_t>(k));
}

std::string certificate_name(Certificate c) {
  switch (c) {
    case Certificate::partial:
      return "partial";
    case Certificate::delta_gb:
      return "delta_gb";
    case Certificate::xd_gb:
      return "xd_gb";
    case Certificate::bernstein_gb:
      return "bernstein_gb";
  }
  return "?";
}

std::vector<ModuleElement> GroebnerBasis::elems() const {
  std::vector<ModuleElement> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.elem);
  return out;
}

ModuleElement s_poly(const ModuleElement& f, const ModuleElement& g,
                     TermOrder order) {
  if (f.is_zero() || g.is_zero())
    throw ZeroElementError("s_poly: zero input");
  check_same_ambient(f, g, "s_poly");
  Term uf = leader(f, order);
  Term ug = leader(g, order);
  auto l = lcm_terms(uf, ug);
  if (!l) return ModuleElement(f.n(), f.m());
  WeylElement thf(term_quotient(*l, uf), Rat(1) / f.coeff(uf));
  WeylElement thg(term_quotient(*l, ug), Rat(1) / g.coeff(ug));
  return act(thf, f) - act(thg, g);
}

ModuleElement s_poly_x(const ModuleElement& f, const ModuleElement& g) {
  return s_poly(f, g, TermOrder::X);
}

ModuleElement s_poly_d(const ModuleElement& f, const ModuleElement& g) {
  return s_poly(f, g, TermOrder::Delta);
}

namespace {

// combo update mirroring an element update e' = e - sum Q_k b_k
std::vector<WeylElement> combo_after_reduction(
    const std::vector<WeylElement>& combo_e,
    const std::vector<WeylElement>& quotients,
    const std::vector<BasisElement>& basis) {
  std::vector<WeylElement> out(combo_e);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (quotients[k].is_zero()) continue;
    for (std::size_t t = 0; t < out.size(); ++t) {
      out[t] = out[t] - quotients[k] * basis[k].combo[t];
    }
  }
  return out;
}

BasisElement make_monic(ModuleElement e, std::vector<WeylElement> combo,
                        TermOrder order) {
  Rat lc = leading_coeff(e, order);
  Rat inv = Rat(1) / lc;
  if (lc != 1) {
    e = scalar_mul(inv, e);
    for (auto& c : combo) c = scalar_mul(inv, c);
  }
  return BasisElement{std::move(e), std::move(combo)};
}

// normal selection: process pairs by increasing lcm in the working order,
// pair indices break ties
struct QueueEntry {
  Term lcm;
  std::size_t i;
  std::size_t j;
};

struct QueueCmp {
  TermOrder order;
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (int c = cmp_term(order, a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::optional<QueueEntry> make_pair_entry(
    const std::vector<BasisElement>& basis, std::size_t i, std::size_t j,
    TermOrder order) {
  auto l = lcm_terms(leader(basis[i].elem, order), leader(basis[j].elem, order));
  if (!l) return std::nullopt;  // different generators, Def 4.9 zero case
  return QueueEntry{*l, i, j};
}

// Buchberger loop over an existing tracked basis, in place.
void buchberger_core(std::vector<BasisElement>& basis, TermOrder order,
                     long step_budget) {
  std::set<QueueEntry, QueueCmp> queue{QueueCmp{order}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (auto e = make_pair_entry(basis, i, j, order)) queue.insert(*e);

  long processed = 0;
  std::vector<ModuleElement> plain;
  for (const auto& b : basis) plain.push_back(b.elem);

  while (!queue.empty()) {
    auto [lcm_term, i, j] = *queue.begin();
    queue.erase(queue.begin());
    if (++processed > step_budget)
      throw StepBudgetExceeded("buchberger: pair budget exceeded");

    ModuleElement s = s_poly(basis[i].elem, basis[j].elem, order);
    if (s.is_zero()) continue;

    // combo of the S-polynomial
    Term ui = leader(basis[i].elem, order);
    Term uj = leader(basis[j].elem, order);
    auto l = lcm_terms(ui, uj);
    WeylElement thi(term_quotient(*l, ui), Rat(1) / basis[i].elem.coeff(ui));
    WeylElement thj(term_quotient(*l, uj), Rat(1) / basis[j].elem.coeff(uj));
    std::vector<WeylElement> combo_s;
    for (std::size_t t = 0; t < basis[i].combo.size(); ++t) {
      combo_s.push_back(thi * basis[i].combo[t] - thj * basis[j].combo[t]);
    }

    ReductionResult nf = normal_form_single(s, plain, order, step_budget);
    if (nf.remainder.is_zero()) continue;

    BasisElement fresh = make_monic(
        nf.remainder, combo_after_reduction(combo_s, nf.quotients, basis),
        order);
    std::size_t idx = basis.size();
    basis.push_back(std::move(fresh));
    plain.push_back(basis.back().elem);
    for (std::size_t k = 0; k < idx; ++k)
      if (auto e = make_pair_entry(basis, k, idx, order)) queue.insert(*e);
  }
}

std::vector<BasisElement> initial_basis(const std::vector<ModuleElement>& gens,
                                        TermOrder order, int n,
                                        const char* where) {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    std::vector<WeylElement> combo(gens.size(), WeylElement(n));
    combo[i] = WeylElement::one(n);
    basis.push_back(make_monic(gens[i], std::move(combo), order));
  }
  if (basis.empty())
    throw ZeroElementError(std::string(where) + ": all generators are zero");
  return basis;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens,
                         TermOrder order, long step_budget) {
  if (order == TermOrder::X)
    throw PreconditionError("buchberger: single-order run expects <_d or the Bernstein order");
  GroebnerBasis out;
  out.generators = gens;
  std::vector<BasisElement> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      out.n = g.n();
      out.m = g.m();
    }
  }
  basis = initial_basis(gens, order, out.n, "buchberger");
  buchberger_core(basis, order, step_budget);
  out.order = order;
  out.cert = order == TermOrder::Delta ? Certificate::delta_gb
                                       : Certificate::bernstein_gb;
  out.elements = std::move(basis);
  return out;
}

GroebnerBasis xd_complete(const std::vector<ModuleElement>& gens,
                          long step_budget) {
  GroebnerBasis out;
  out.generators = gens;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      out.n = g.n();
      out.m = g.m();
    }
  }
  std::vector<BasisElement> basis =
      initial_basis(gens, TermOrder::Delta, out.n, "xd_complete");

  long rounds = 0;
  while (true) {
    if (++rounds > step_budget)
      throw StepBudgetExceeded("xd_complete: round budget exceeded");
    buchberger_core(basis, TermOrder::Delta, step_budget);

    std::vector<ModuleElement> plain;
    for (const auto& b : basis) plain.push_back(b.elem);

    std::vector<BasisElement> fresh;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        Term ui = leaders(basis[i].elem).u;
        Term uj = leaders(basis[j].elem).u;
        auto l = lcm_terms(ui, uj);
        if (!l) continue;
        ModuleElement s = s_poly_x(basis[i].elem, basis[j].elem);
        if (s.is_zero()) continue;
        std::vector<WeylElement> combo_s;
        WeylElement thi(term_quotient(*l, ui),
                        Rat(1) / basis[i].elem.coeff(ui));
        WeylElement thj(term_quotient(*l, uj),
                        Rat(1) / basis[j].elem.coeff(uj));
        for (std::size_t t = 0; t < basis[i].combo.size(); ++t)
          combo_s.push_back(thi * basis[i].combo[t] -
                            thj * basis[j].combo[t]);
        ReductionResult nf = normal_form(s, plain, step_budget);
        if (nf.remainder.is_zero()) continue;
        fresh.push_back(make_monic(
            nf.remainder, combo_after_reduction(combo_s, nf.quotients, basis),
            TermOrder::X));
      }
    }
    if (fresh.empty()) break;

    // deterministic adjoin order, duplicates dropped
    std::sort(fresh.begin(), fresh.end(),
              [](const BasisElement& a, const BasisElement& b) {
                return cmp_term_x(leaders(a.elem).u, leaders(b.elem).u) < 0;
              });
    for (auto& f : fresh) {
      bool dup = false;
      for (const auto& b : basis)
        if (b.elem == f.elem) {
          dup = true;
          break;
        }
      if (!dup) basis.push_back(std::move(f));
    }
  }

  out.cert = Certificate::xd_gb;
  out.order = TermOrder::X;
  out.elements = std::move(basis);
  return out;
}

CertifyReport certify_xd(const GroebnerBasis& g, int num_probes,
                         std::uint64_t seed) {
  if (g.cert != Certificate::xd_gb)
    throw UncertifiedBasisError("certify_xd: basis is not xd-certified");
  CertifyReport rep;
  Rng rng(seed);
  std::vector<ModuleElement> plain = g.elems();
  std::vector<ExtendedTerm> rhos;
  for (const auto& e : plain) rhos.push_back(rho(e));

  for (int p = 0; p < num_probes; ++p) {
    ModuleElement probe(g.n, g.m);
    for (const auto& e : plain) {
      WeylElement d(g.n);
      long nterms = rng.below(3);  // 0..2 terms
      for (long t = 0; t < nterms; ++t) {
        MultiIndex a(g.n), b(g.n);
        for (int i = 0; i < g.n; ++i) {
          a[i] = static_cast<int>(rng.below(3));
          b[i] = static_cast<int>(rng.below(3));
        }
        long c = rng.below(5) - 2;
        if (c == 0) c = 1;
        d.add_term(WeylMonomial{a, b}, Rat(c));
      }
      if (!d.is_zero()) probe = probe + act(d, e);
    }
    if (probe.is_zero()) {
      ++rep.probes_skipped;
      continue;
    }
    ++rep.probes_run;
    ProbeOutcome oc;
    oc.probe = probe;
    oc.nf_zero = normal_form(probe, plain).remainder.is_zero();
    ExtendedTerm rp = rho(probe);
    oc.rho_divisible = false;
    for (const auto& rg : rhos)
      if (ext_divides(rg, rp)) {
        oc.rho_divisible = true;
        break;
      }
    if (!oc.nf_zero || !oc.rho_divisible) {
      rep.ok = false;
      rep.failures.push_back(std::move(oc));
    }
  }
  return rep;
}

}  // namespace weyldim
