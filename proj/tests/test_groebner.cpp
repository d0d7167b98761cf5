#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"
#include "weyldim/groebner.hpp"

using namespace weyldim;
using namespace weyldim::testing;

namespace {

ModuleElement g56() {
  return me1({{2, 0, 1, 1}, {0, 2, 1, 1}, {1, 1, 1, 1}});
}

ModuleElement g58(int a, int b) {
  return me1({{a, b, 1, 1}, {0, a + b, 1, 1}});
}

// every tracked combination must expand back to its basis element
bool combos_expand(const GroebnerBasis& g) {
  for (const auto& be : g.elements) {
    ModuleElement acc(g.n, g.m);
    for (std::size_t t = 0; t < g.generators.size(); ++t)
      acc = acc + act(be.combo[t], g.generators[t]);
    if (!(acc == be.elem)) return false;
  }
  return true;
}

bool generators_vanish(const GroebnerBasis& g) {
  std::vector<ModuleElement> plain = g.elems();
  for (const auto& gen : g.generators) {
    if (gen.is_zero()) continue;
    ReductionResult r = normal_form(gen, plain);
    if (!r.remainder.is_zero()) return false;
  }
  return true;
}

bool s_closure_holds(const GroebnerBasis& g) {
  std::vector<ModuleElement> plain = g.elems();
  for (std::size_t i = 0; i < plain.size(); ++i) {
    for (std::size_t j = i + 1; j < plain.size(); ++j) {
      ModuleElement sx = s_poly_x(plain[i], plain[j]);
      if (!sx.is_zero() && !normal_form(sx, plain).remainder.is_zero())
        return false;
      ModuleElement sd = s_poly_d(plain[i], plain[j]);
      if (!sd.is_zero() &&
          !normal_form_single(sd, plain, TermOrder::Delta).remainder.is_zero())
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("s_poly reference values") {
  ModuleElement g = g56();
  CHECK(s_poly_x(g, g).is_zero());
  CHECK(s_poly_d(g, g).is_zero());

  // leaders on different generators: lcm = 0 convention
  ModuleElement f1 = me1({{2, 1, 1, 1}}, 2);
  ModuleElement f2 = me1({{1, 2, 2, 1}}, 2);
  CHECK(s_poly_x(f1, f2).is_zero());

  // n=1: f = x^2 e + e, g = x e: S_x = f - x g = e
  ModuleElement f = me1({{2, 0, 1, 1}, {0, 0, 1, 1}});
  ModuleElement xe = me1({{1, 0, 1, 1}});
  ModuleElement sx = s_poly_x(f, xe);
  CHECK(sx == f - act(w1(1, 0), xe));
  CHECK(sx == me1({{0, 0, 1, 1}}));

  CHECK_THROWS_AS(s_poly_x(ModuleElement(1, 1), g), ZeroElementError);
}

TEST_CASE("x-leading terms cancel in S_x") {
  Rng rng(103);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng.below(2));
    ModuleElement f = random_element(rng, n, 1, 3, 3);
    ModuleElement g = random_element(rng, n, 1, 3, 3);
    ModuleElement s = s_poly_x(f, g);
    if (s.is_zero()) continue;
    Term l = *lcm_terms(leaders(f).u, leaders(g).u);
    CHECK(cmp_term_x(leaders(s).u, l) < 0);
  }
}

TEST_CASE("buchberger basics") {
  SUBCASE("single generator is its own basis") {
    GroebnerBasis b = buchberger({g56()}, TermOrder::Delta);
    CHECK(b.cert == Certificate::delta_gb);
    CHECK(b.size() == 1);
    CHECK(b.elements[0].elem == g56());
    CHECK(combos_expand(b));
  }
  SUBCASE("already-a-basis input survives unchanged") {
    GroebnerBasis b = buchberger({g58(2, 1)}, TermOrder::Bernstein);
    CHECK(b.cert == Certificate::bernstein_gb);
    CHECK(b.size() == 1);
  }
  SUBCASE("all-zero input is rejected") {
    CHECK_THROWS_AS(buchberger({ModuleElement(1, 1)}, TermOrder::Delta),
                    ZeroElementError);
    CHECK_THROWS_AS(buchberger({}, TermOrder::Delta), ZeroElementError);
  }
  SUBCASE("random inputs complete to a closed basis") {
    // a small budget skips the rare draw whose basis is genuinely huge;
    // enough tractable draws must remain
    Rng rng(107);
    int done = 0;
    for (int it = 0; it < 40 && done < 12; ++it) {
      int n = 1 + static_cast<int>(rng.below(2));
      int m = 1 + static_cast<int>(rng.below(2));
      std::vector<ModuleElement> gens;
      long k = 1 + rng.below(2);
      for (long i = 0; i < k; ++i)
        gens.push_back(random_element(rng, n, m, 2, 3));
      GroebnerBasis b;
      try {
        b = buchberger(gens, TermOrder::Delta, 3000);
      } catch (const StepBudgetExceeded&) {
        continue;
      }
      ++done;
      CHECK(combos_expand(b));
      std::vector<ModuleElement> plain = b.elems();
      for (std::size_t i = 0; i < plain.size(); ++i)
        for (std::size_t j = i + 1; j < plain.size(); ++j) {
          ModuleElement s = s_poly_d(plain[i], plain[j]);
          if (!s.is_zero())
            CHECK(normal_form_single(s, plain, TermOrder::Delta)
                      .remainder.is_zero());
        }
    }
    CHECK(done >= 12);
  }
}

TEST_CASE("xd_complete on the paper's singleton examples") {
  SUBCASE("Example 5.6") {
    GroebnerBasis b = xd_complete({g56()});
    CHECK(b.cert == Certificate::xd_gb);
    REQUIRE(b.size() == 1);
    Leaders l = leaders(b.elements[0].elem);
    CHECK(l.u == t1(2, 0));
    CHECK(l.v == t1(0, 2));
    CHECK(combos_expand(b));
    CHECK(generators_vanish(b));
    CHECK(s_closure_holds(b));
  }
  SUBCASE("Example 5.8 with a=2, b=1") {
    GroebnerBasis b = xd_complete({g58(2, 1)});
    CHECK(b.cert == Certificate::xd_gb);
    REQUIRE(b.size() == 1);
    Leaders l = leaders(b.elements[0].elem);
    CHECK(l.u == t1(2, 1));
    CHECK(l.v == t1(0, 3));
  }
  SUBCASE("independent relations on distinct generators stay separate") {
    ModuleElement r1 = me1({{2, 0, 1, 1}, {0, 2, 1, 1}, {1, 1, 1, 1}}, 2);
    ModuleElement r2 = me1({{2, 1, 2, 1}, {0, 3, 2, 1}}, 2);
    GroebnerBasis b = xd_complete({r1, r2});
    CHECK(b.size() == 2);
    CHECK(s_closure_holds(b));
  }
}

TEST_CASE("xd_complete is idempotent and closed on random inputs") {
  Rng rng(109);
  int done = 0;
  for (int it = 0; it < 60 && done < 12; ++it) {
    int n = 1 + static_cast<int>(rng.below(2));
    int m = 1 + static_cast<int>(rng.below(2));
    std::vector<ModuleElement> gens;
    long k = 1 + rng.below(2);
    for (long i = 0; i < k; ++i)
      gens.push_back(random_element(rng, n, m, 2, 3));
    GroebnerBasis b;
    try {
      b = xd_complete(gens, 3000);
    } catch (const StepBudgetExceeded&) {
      continue;
    }
    ++done;
    CHECK(combos_expand(b));
    CHECK(generators_vanish(b));
    CHECK(s_closure_holds(b));
    GroebnerBasis again = xd_complete(b.elems(), 3000);
    CHECK(again.size() == b.size());
  }
  CHECK(done >= 12);
}

TEST_CASE("certify_xd membership probes") {
  GroebnerBasis b = xd_complete({g56()});
  CertifyReport rep = certify_xd(b, 30, 12345);
  CHECK(rep.ok);
  CHECK(rep.probes_run + rep.probes_skipped == 30);
  CHECK(rep.failures.empty());

  GroebnerBasis not_certified = buchberger({g56()}, TermOrder::Delta);
  CHECK_THROWS_AS(certify_xd(not_certified, 5, 1), UncertifiedBasisError);
}
