#include "weyldim/dimpoly.hpp"

#include <algorithm>
#include <functional>

namespace weyldim {

namespace {

constexpr int kMaxGroupSize = 22;

struct LeaderData {
  Term u;
  Term v;
  int a;  // ord_x u
  int b;  // ord_d u
  int c;  // ord_d v
};

// basis leaders grouped by the free generator the x-leader sits on
std::vector<std::vector<LeaderData>> group_by_generator(
    const GroebnerBasis& g, int m) {
  std::vector<std::vector<LeaderData>> groups(static_cast<std::size_t>(m));
  for (const auto& be : g.elements) {
    Leaders l = leaders(be.elem);
    groups[static_cast<std::size_t>(l.u.gen - 1)].push_back(
        LeaderData{l.u, l.v, l.u.ordx, l.u.ordd, l.v.ordd});
  }
  return groups;
}

void require_xd(const GroebnerBasis& g, const char* where) {
  if (g.cert != Certificate::xd_gb)
    throw UncertifiedBasisError(std::string(where) +
                                ": basis is not xd-certified (got " +
                                certificate_name(g.cert) + ")");
}

}  // namespace

int stability_bound(const GroebnerBasis& g) {
  int b = 0;
  for (const auto& be : g.elements) {
    Leaders l = leaders(be.elem);
    b = std::max(b, l.u.ordx + l.v.ordd);
  }
  return b;
}

CharPolyReport char_polynomial(const GroebnerBasis& g, int n, int m) {
  require_xd(g, "char_polynomial");
  CharPolyReport rep;
  rep.n = n;
  rep.m = m;

  auto groups = group_by_generator(g, m);

  NumPoly2 omega, omega_bar;
  for (const auto& grp : groups) {
    // omega: lattice points under the x-leader staircase of this generator
    ExponentSet a;
    a.m = n;
    a.n = n;
    for (const auto& ld : grp) {
      std::vector<int> pt(ld.u.mono.alpha.exps());
      const auto& beta = ld.u.mono.beta.exps();
      pt.insert(pt.end(), beta.begin(), beta.end());
      a.points.push_back(std::move(pt));
    }
    omega = omega + omega_A(a);

    // omega_bar: inclusion-exclusion over nonempty subsets of the group
    const int p = static_cast<int>(grp.size());
    if (p > kMaxGroupSize)
      throw StepBudgetExceeded("char_polynomial: generator group too large");
    RatMat acc;
    for (unsigned long mask = 1; mask < (1ul << p); ++mask) {
      std::optional<Term> l;
      int min_cost = -1;
      for (int i = 0; i < p; ++i) {
        if (!(mask & (1ul << i))) continue;
        const auto& ld = grp[static_cast<std::size_t>(i)];
        if (!l)
          l = ld.u;
        else
          l = lcm_terms(*l, ld.u);
      }
      const int a_sigma = l->ordx;
      const int b_sigma = l->ordd;
      for (int i = 0; i < p; ++i) {
        if (!(mask & (1ul << i))) continue;
        const auto& ld = grp[static_cast<std::size_t>(i)];
        int cost = ld.c + b_sigma - ld.b;
        if (min_cost < 0 || cost < min_cost) min_cost = cost;
      }
      int sign = __builtin_popcountl(mask) % 2 == 1 ? 1 : -1;
      UPoly band = upoly_add(binom_upoly(n, b_sigma),
                             upoly_scale(Rat(-1), binom_upoly(n, min_cost)));
      acc = mat_add(
          acc, mat_scale(Rat(sign), mat_outer(binom_upoly(n, a_sigma), band)));
    }
    if (!acc.empty()) omega_bar = omega_bar + NumPoly2::from_monomial(acc);
  }

  rep.omega = omega;
  rep.omega_bar = omega_bar;
  rep.phi = omega + omega_bar;
  if (rep.phi.deg_t1() > n || rep.phi.deg_t2() > n)
    throw InternalCheckError("char_polynomial: degree bound of phi violated");
  rep.invariants = extract_invariants(rep.phi, n);
  for (const auto& be : g.elements) {
    Leaders l = leaders(be.elem);
    rep.basis_summary.push_back(LeaderInfo{be.elem, l.u, l.v});
  }
  return rep;
}

std::vector<Term> enumerate_U_rs(const GroebnerBasis& g, int r, int s) {
  require_xd(g, "enumerate_U_rs");
  const int n = g.n, m = g.m;
  std::vector<LeaderData> lds;
  for (const auto& be : g.elements) {
    Leaders l = leaders(be.elem);
    lds.push_back(LeaderData{l.u, l.v, l.u.ordx, l.u.ordd, l.v.ordd});
  }

  std::vector<Term> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> xs, ds;
  std::function<void(std::vector<std::vector<int>>&, int, int)> gen =
      [&](std::vector<std::vector<int>>& sink, int pos, int left) {
        if (pos == n) {
          sink.push_back(cur);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          cur[static_cast<std::size_t>(pos)] = e;
          gen(sink, pos + 1, left - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
      };
  gen(xs, 0, r);
  gen(ds, 0, s);

  for (int j = 1; j <= m; ++j) {
    for (const auto& a : xs) {
      for (const auto& b : ds) {
        Term w(WeylMonomial{MultiIndex(a), MultiIndex(b)}, j);
        // keep w unless some divisor decomposition is affordable at level s
        bool keep = true;
        for (const auto& ld : lds) {
          if (!term_divides(ld.u, w)) continue;
          if ((w.ordd - ld.b) + ld.c <= s) {
            keep = false;
            break;
          }
        }
        if (keep) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return cmp_term_x(a, b) < 0; });
  return out;
}

NumPoly1 bernstein_polynomial(const std::vector<ModuleElement>& gens, int n,
                              int m, long step_budget) {
  std::vector<std::vector<std::vector<int>>> groups(
      static_cast<std::size_t>(m));
  bool any = false;
  for (const auto& g : gens)
    if (!g.is_zero()) any = true;
  if (any) {
    GroebnerBasis b = buchberger(gens, TermOrder::Bernstein, step_budget);
    for (const auto& be : b.elements) {
      Term lt = leader(be.elem, TermOrder::Bernstein);
      std::vector<int> pt(lt.mono.alpha.exps());
      const auto& beta = lt.mono.beta.exps();
      pt.insert(pt.end(), beta.begin(), beta.end());
      groups[static_cast<std::size_t>(lt.gen - 1)].push_back(std::move(pt));
    }
  }
  NumPoly1 psi;
  for (const auto& pts : groups) psi = psi + kolchin_univariate(pts, 2 * n);
  return psi;
}

InvariantSet extract_invariants(const NumPoly2& phi, int n) {
  InvariantSet inv;
  if (phi.is_zero()) {
    inv.zero = true;
    return inv;
  }
  inv.total_degree = phi.total_degree();
  inv.a_nn = phi.coeff(n, n);
  bool have = false;
  for (int i = 0; i <= phi.deg_t1(); ++i) {
    for (int j = 0; j <= phi.deg_t2(); ++j) {
      if (phi.coeff(i, j) == 0) continue;
      std::pair<int, int> ij{i, j};
      if (!have) {
        inv.mu = inv.nu = ij;
        have = true;
        continue;
      }
      // lexicographic: i first; reverse lexicographic: j first
      if (ij.first > inv.mu.first ||
          (ij.first == inv.mu.first && ij.second > inv.mu.second))
        inv.mu = ij;
      if (ij.second > inv.nu.second ||
          (ij.second == inv.nu.second && ij.first > inv.nu.first))
        inv.nu = ij;
    }
  }
  inv.a_mu = phi.coeff(inv.mu.first, inv.mu.second);
  inv.a_nu = phi.coeff(inv.nu.first, inv.nu.second);
  for (int i = phi.deg_t1(); i >= 0; --i) {
    int j = inv.total_degree - i;
    if (j < 0 || j > phi.deg_t2()) continue;
    Int c = phi.coeff(i, j);
    if (c != 0) inv.top_degree_coeffs.emplace_back(i, j, c);
  }
  inv.bernstein_class_member = inv.total_degree == n;
  return inv;
}

std::optional<std::pair<int, int>> find_stability_point(const GroebnerBasis& g,
                                                        const NumPoly2& phi,
                                                        int limit) {
  std::vector<std::vector<bool>> agree(
      static_cast<std::size_t>(limit) + 1,
      std::vector<bool>(static_cast<std::size_t>(limit) + 1, false));
  for (int r = 0; r <= limit; ++r)
    for (int s = 0; s <= limit; ++s)
      agree[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          phi.eval(r, s) ==
          static_cast<long>(enumerate_U_rs(g, r, s).size());
  for (int d = 0; d <= limit; ++d) {
    bool ok = true;
    for (int r = d; r <= limit && ok; ++r)
      for (int s = d; s <= limit && ok; ++s)
        ok = agree[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
    if (ok) return std::make_pair(d, d);
  }
  return std::nullopt;
}

}  // namespace weyldim
