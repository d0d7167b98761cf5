#include "weyldim/pipeline.hpp"

#include <algorithm>

namespace weyldim {

GroebnerBasis complete_presentation(const Presentation& p, long step_budget) {
  bool any = false;
  for (const auto& r : p.relations)
    if (!r.is_zero()) any = true;
  if (!any) {
    // free module: the empty basis is vacuously an (x,d)-Groebner basis
    GroebnerBasis g;
    g.n = p.n;
    g.m = p.m;
    g.cert = Certificate::xd_gb;
    g.order = TermOrder::X;
    return g;
  }
  return xd_complete(p.relations, step_budget);
}

CharPolyReport compute_report(const Presentation& p,
                              const PipelineOptions& opts) {
  GroebnerBasis g = complete_presentation(p, opts.step_budget);
  CharPolyReport rep = char_polynomial(g, p.n, p.m);
  if (opts.with_bernstein)
    rep.psi = bernstein_polynomial(p.relations, p.n, p.m, opts.step_budget);
  int limit = stability_bound(g) + std::max(1, opts.window) - 1;
  rep.stability_point = find_stability_point(g, rep.phi, limit);
  return rep;
}

VerifyResult verify_presentation(const Presentation& p,
                                 const PipelineOptions& opts,
                                 const NumPoly2* phi_override) {
  GroebnerBasis g = complete_presentation(p, opts.step_budget);
  CharPolyReport rep = char_polynomial(g, p.n, p.m);

  VerifyResult res;
  res.phi = phi_override ? *phi_override : rep.phi;
  const int b = stability_bound(g);
  res.window_lo = b;
  res.limit = b + std::max(1, opts.window) - 1;

  GroebnerBasis delta = p.relations.empty()
                            ? GroebnerBasis{p.n, p.m, Certificate::delta_gb,
                                            TermOrder::Delta, {}, {}}
                            : buchberger(p.relations, TermOrder::Delta,
                                         opts.step_budget);
  DimOracle oracle(p.n, p.m, delta);
  res.oracle = oracle.grid(res.limit, res.limit);

  res.enumeration.assign(
      static_cast<std::size_t>(res.limit) + 1,
      std::vector<long>(static_cast<std::size_t>(res.limit) + 1, 0));
  for (int r = 0; r <= res.limit; ++r)
    for (int s = 0; s <= res.limit; ++s)
      res.enumeration[static_cast<std::size_t>(r)]
                     [static_cast<std::size_t>(s)] =
          static_cast<long>(enumerate_U_rs(g, r, s).size());

  // Theorem-5.3 counting is exact at every point, so enumeration and the
  // rank oracle must agree on the whole grid
  for (int r = 0; r <= res.limit && res.enum_matches_oracle; ++r)
    for (int s = 0; s <= res.limit; ++s)
      if (res.enumeration[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(s)] !=
          res.oracle.at(r, s)) {
        res.enum_matches_oracle = false;
        res.enum_mismatch = {r, s};
        break;
      }

  // the closed formula only promises agreement for large (r, s)
  for (int r = b; r <= res.limit && res.phi_matches_window; ++r)
    for (int s = b; s <= res.limit; ++s)
      if (res.phi.eval(r, s) !=
          res.enumeration[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(s)]) {
        res.phi_matches_window = false;
        res.phi_mismatch = {r, s};
        break;
      }

  res.stability_point = find_stability_point(g, res.phi, res.limit);
  res.quantifier_diagnostic =
      res.enum_matches_oracle && !res.phi_matches_window;
  return res;
}

}  // namespace weyldim
