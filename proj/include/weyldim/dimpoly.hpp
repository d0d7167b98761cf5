#ifndef WEYLDIM_DIMPOLY_HPP
#define WEYLDIM_DIMPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "weyldim/groebner.hpp"
#include "weyldim/numpoly.hpp"

namespace weyldim {

// Generator-independent data read off the characteristic polynomial
// (binomial-basis coefficients a_ij, Lambda = {(i,j) : a_ij != 0}).
struct InvariantSet {
  bool zero = false;  // distinguished set for phi = 0
  int total_degree = 0;
  Int a_nn;
  std::pair<int, int> mu{0, 0};  // lex-max of Lambda
  std::pair<int, int> nu{0, 0};  // reverse-lex-max of Lambda
  Int a_mu;
  Int a_nu;
  std::vector<std::tuple<int, int, Int>> top_degree_coeffs;  // i+j == degree
  bool bernstein_class_member = false;

  bool operator==(const InvariantSet& o) const = default;
};

struct LeaderInfo {
  ModuleElement element;
  Term u;  // x-leader
  Term v;  // d-leader
};

struct CharPolyReport {
  int n = 0;
  int m = 0;
  NumPoly2 phi;
  NumPoly2 omega;
  NumPoly2 omega_bar;
  std::optional<NumPoly1> psi;
  InvariantSet invariants;
  std::vector<LeaderInfo> basis_summary;
  // first diagonal point from which phi agrees with the U_rs enumeration
  // through the validation window
  std::optional<std::pair<int, int>> stability_point;
};

// phi = omega + omega_bar from the leaders of an xd-certified basis.
// Leaders are grouped per free generator; cross-generator pairs contribute
// nothing (their lcm is the zero term).
CharPolyReport char_polynomial(const GroebnerBasis& g, int n, int m);

// Exact basis of M_rs from Theorem-5.3-style counting with the universal
// reading of the divisor condition: a term stays if every divisor
// decomposition through the basis costs more than s in ord_d.
std::vector<Term> enumerate_U_rs(const GroebnerBasis& g, int r, int s);

// psi via the Bernstein-order basis and univariate lattice counting over the
// leader exponents in N^{2n}.
NumPoly1 bernstein_polynomial(const std::vector<ModuleElement>& gens, int n,
                              int m, long step_budget = kDefaultStepBudget);

InvariantSet extract_invariants(const NumPoly2& phi, int n);

// smallest (ord_x u_g + ord_d v_g) headroom past which the binomial counting
// formulas are exact
int stability_bound(const GroebnerBasis& g);

// scan phi against |U_rs|; returns the smallest diagonal point from which the
// two agree everywhere up to (limit, limit)
std::optional<std::pair<int, int>> find_stability_point(
    const GroebnerBasis& g, const NumPoly2& phi, int limit);

}  // namespace weyldim

#endif
