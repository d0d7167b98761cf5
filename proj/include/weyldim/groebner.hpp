#ifndef WEYLDIM_GROEBNER_HPP
#define WEYLDIM_GROEBNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weyldim/reduction.hpp"
#include "weyldim/terms.hpp"

namespace weyldim {

// S-polynomial with respect to the leaders of the given order; the zero
// element when the leaders sit on different free generators (lcm = 0).
ModuleElement s_poly(const ModuleElement& f, const ModuleElement& g,
                     TermOrder order);
ModuleElement s_poly_x(const ModuleElement& f, const ModuleElement& g);
ModuleElement s_poly_d(const ModuleElement& f, const ModuleElement& g);

enum class Certificate { partial, delta_gb, xd_gb, bernstein_gb };

std::string certificate_name(Certificate c);

struct BasisElement {
  ModuleElement elem;
  // explicit representation of elem as an A_n(K)-combination of the original
  // generators, re-verifiable by expansion
  std::vector<WeylElement> combo;
};

struct GroebnerBasis {
  int n = 0;
  int m = 0;
  Certificate cert = Certificate::partial;
  TermOrder order = TermOrder::Delta;  // single order used for delta/bernstein
  std::vector<BasisElement> elements;
  std::vector<ModuleElement> generators;  // the input presentation

  std::vector<ModuleElement> elems() const;
  std::size_t size() const { return elements.size(); }
};

// Classical single-order Buchberger completion (order Delta or Bernstein).
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens,
                         TermOrder order,
                         long step_budget = kDefaultStepBudget);

// (x,d)-completion: alternate <_d Buchberger closure with adjoining the
// (x,d)-normal forms of all x-S-polynomials until both closures hold.
GroebnerBasis xd_complete(const std::vector<ModuleElement>& gens,
                          long step_budget = kDefaultStepBudget);

struct ProbeOutcome {
  ModuleElement probe;
  bool nf_zero = false;
  bool rho_divisible = false;  // vacuously true for the zero probe
};

struct CertifyReport {
  bool ok = true;
  int probes_run = 0;
  int probes_skipped = 0;
  std::vector<ProbeOutcome> failures;
};

// Membership probes: random combinations sum D_i g_i must reduce to zero and
// their rho must be divisible by some basis rho.
CertifyReport certify_xd(const GroebnerBasis& g, int num_probes,
                         std::uint64_t seed);

// Deterministic 64-bit generator (splitmix) so seeded runs are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // uniform in [0, k)
  long below(long k);

 private:
  std::uint64_t state_;
};

}  // namespace weyldim

#endif
