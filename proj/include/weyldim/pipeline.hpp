#ifndef WEYLDIM_PIPELINE_HPP
#define WEYLDIM_PIPELINE_HPP

#include "weyldim/oracle.hpp"
#include "weyldim/presentation.hpp"

namespace weyldim {

struct PipelineOptions {
  bool with_bernstein = false;
  int window = 4;
  long step_budget = kDefaultStepBudget;
  std::uint64_t seed = 0x5eed5eedull;
  int probes = 20;
};

// xd-certified basis of the relation submodule; empty basis for a free
// presentation.
GroebnerBasis complete_presentation(const Presentation& p,
                                    long step_budget = kDefaultStepBudget);

// parse -> complete -> phi/psi/invariants, stability scanned over
// [0, B + window - 1]^2.
CharPolyReport compute_report(const Presentation& p,
                              const PipelineOptions& opts = {});

struct VerifyResult {
  int limit = 0;  // grid is [0, limit]^2
  int window_lo = 0;
  NumPoly2 phi;
  DimGrid oracle;
  std::vector<std::vector<long>> enumeration;
  bool enum_matches_oracle = true;
  std::optional<std::pair<int, int>> enum_mismatch;
  bool phi_matches_window = true;
  std::optional<std::pair<int, int>> phi_mismatch;
  std::optional<std::pair<int, int>> stability_point;
  // enumeration and oracle agree but the closed formula does not: the
  // existential/universal reading of the divisor condition genuinely differs
  // on this input
  bool quantifier_diagnostic = false;

  bool ok() const { return enum_matches_oracle && phi_matches_window; }
};

VerifyResult verify_presentation(const Presentation& p,
                                 const PipelineOptions& opts = {},
                                 const NumPoly2* phi_override = nullptr);

}  // namespace weyldim

#endif
