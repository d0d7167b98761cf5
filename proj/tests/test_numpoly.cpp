#include <algorithm>

#include "doctest.h"
#include "weyldim/groebner.hpp"
#include "weyldim/numpoly.hpp"

using namespace weyldim;

namespace {

int max_coordinate_sum(const ExponentSet& a) {
  int b = 0;
  for (const auto& p : a.points) {
    int s = 0;
    for (int v : p) s += v;
    b = std::max(b, s);
  }
  return b;
}

NumPoly2 binom_product(int m, long b, int n, long c) {
  return NumPoly2::from_monomial(
      mat_outer(binom_upoly(m, b), binom_upoly(n, c)));
}

}  // namespace

TEST_CASE("eval2 on reference polynomials") {
  // C(t1+1,1) C(t2+1,1)
  NumPoly2 p(std::vector<std::vector<Int>>{{Int(0), Int(0)}, {Int(0), Int(1)}});
  CHECK(p.eval(2, 3) == 12);
  CHECK(NumPoly2().eval(5, -3) == 0);
  // 2 t1 + 2 t2 = 2 C(t1+1,1) + 2 C(t2+1,1) - 4
  NumPoly2 phi(std::vector<std::vector<Int>>{{Int(-4), Int(2)}, {Int(2), Int(0)}});
  CHECK(phi.eval(5, 7) == 24);
}

TEST_CASE("binomial basis conversion round trips") {
  // t1 t2 -> a11=1, a10=-1, a01=-1, a00=1; oracle: expand
  // C(t1+1,1)C(t2+1,1) - C(t1+1,1) - C(t2+1,1) + 1 and compare
  RatMat t1t2{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  NumPoly2 p = NumPoly2::from_monomial(t1t2);
  NumPoly2 expect = binom_product(1, 0, 1, 0) - binom_product(1, 0, 0, 0) -
                    binom_product(0, 0, 1, 0) +
                    NumPoly2(std::vector<std::vector<Int>>{{Int(1)}});
  CHECK(p == expect);
  CHECK(p.coeff(1, 1) == 1);
  CHECK(p.coeff(1, 0) == -1);
  CHECK(p.coeff(0, 1) == -1);
  CHECK(p.coeff(0, 0) == 1);

  RatMat one{{Rat(1)}};
  CHECK(NumPoly2::from_monomial(one).coeff(0, 0) == 1);

  // 2 t2 + 2 = 2 C(t2+1,1): the omega of Example 5.6
  RatMat w{{Rat(2), Rat(2)}};
  NumPoly2 pw = NumPoly2::from_monomial(w);
  CHECK(pw.coeff(0, 1) == 2);
  CHECK(pw.coeff(0, 0) == 0);

  // round trip through the monomial basis
  CHECK(NumPoly2::from_monomial(p.to_monomial()) == p);
  CHECK(NumPoly2::from_monomial(pw.to_monomial()) == pw);
}

TEST_CASE("non-numerical input is rejected") {
  RatMat half{{Rat(1, 2)}};
  CHECK_THROWS_AS(NumPoly2::from_monomial(half), InternalCheckError);
  // t^2/2 + t/2 is numerical even with fractional monomial coefficients
  UPoly u{Rat(0), Rat(1, 2), Rat(1, 2)};
  CHECK_NOTHROW(NumPoly1::from_monomial(u));
  UPoly bad{Rat(0), Rat(1, 3)};
  CHECK_THROWS_AS(NumPoly1::from_monomial(bad), InternalCheckError);
}

TEST_CASE("omega_A reference values") {
  SUBCASE("empty A gives the full product") {
    ExponentSet a{1, 1, {}};
    CHECK(omega_A(a) == binom_product(1, 0, 1, 0));
  }
  SUBCASE("zero tuple kills everything") {
    ExponentSet a{1, 1, {{0, 0}}};
    CHECK(omega_A(a).is_zero());
  }
  SUBCASE("Example 5.6 staircase: 2 t2 + 2") {
    ExponentSet a{1, 1, {{2, 0}}};
    NumPoly2 w = omega_A(a);
    RatMat mono = w.to_monomial();
    CHECK(w == NumPoly2::from_monomial(RatMat{{Rat(2), Rat(2)}}));
    CHECK(mono[0][1] == 2);
    CHECK(mono[0][0] == 2);
  }
  SUBCASE("single point (a,b): b t1 + a t2 + a + b - ab") {
    for (int av = 1; av <= 3; ++av) {
      for (int bv = 1; bv <= 3; ++bv) {
        ExponentSet a{1, 1, {{av, bv}}};
        RatMat expect{{Rat(av + bv - av * bv), Rat(av)}, {Rat(bv), Rat(0)}};
        CHECK(omega_A(a) == NumPoly2::from_monomial(expect));
      }
    }
  }
}

TEST_CASE("count_V_A basics") {
  ExponentSet zero{1, 1, {{0, 0}}};
  CHECK(count_V_A(zero, 4, 7) == 0);
  ExponentSet empty{1, 1, {}};
  CHECK(count_V_A(empty, 2, 2) == 9);
  ExponentSet ex56{1, 1, {{2, 0}}};
  CHECK(count_V_A(ex56, 10, 10) == 22);
  CHECK(omega_A(ex56).eval(10, 10) == 22);
}

TEST_CASE("omega_A equals the enumeration on the stable window, random sets") {
  Rng rng(101);
  for (int it = 0; it < 200; ++it) {
    ExponentSet a;
    a.m = 1 + static_cast<int>(rng.below(2));
    a.n = a.m;
    long npts = rng.below(6);
    for (long p = 0; p < npts; ++p) {
      std::vector<int> pt;
      for (int j = 0; j < a.m + a.n; ++j)
        pt.push_back(static_cast<int>(rng.below(5)));
      a.points.push_back(std::move(pt));
    }
    NumPoly2 w = omega_A(a);
    CHECK(w.deg_t1() <= a.m);
    CHECK(w.deg_t2() <= a.n);
    CHECK(w.total_degree() <= a.m + a.n);
    int b = max_coordinate_sum(a);
    for (int r = b; r <= b + 4; ++r)
      for (int s = b; s <= b + 4; ++s)
        CHECK(w.eval(r, s) == count_V_A(a, r, s));
  }
}

TEST_CASE("minimize_antichain") {
  ExponentSet a{1, 1, {{1, 0}, {2, 0}}};
  CHECK(minimize_antichain(a).points ==
        std::vector<std::vector<int>>{{1, 0}});
  ExponentSet anti{1, 1, {{0, 2}, {1, 1}}};
  CHECK(minimize_antichain(anti).points == anti.points);
  ExponentSet b{1, 1, {{0, 2}, {1, 1}, {1, 2}}};
  CHECK(minimize_antichain(b).points ==
        std::vector<std::vector<int>>{{0, 2}, {1, 1}});
  // and the polynomial is unchanged by minimization
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    ExponentSet s;
    s.m = s.n = 1;
    long npts = rng.below(5);
    for (long p = 0; p < npts; ++p)
      s.points.push_back({static_cast<int>(rng.below(4)),
                          static_cast<int>(rng.below(4))});
    CHECK(omega_A(s) == omega_A(minimize_antichain(s)));
  }
}

TEST_CASE("kolchin_univariate reference values") {
  CHECK(kolchin_univariate({}, 2) ==
        NumPoly1(std::vector<Int>{Int(0), Int(0), Int(1)}));
  CHECK(kolchin_univariate({{0, 0}}, 2).is_zero());
  // two incomparable points; value frozen from the enumeration oracle below
  NumPoly1 two = kolchin_univariate({{3, 0}, {0, 3}}, 2);
  for (int r = 6; r <= 20; ++r)
    CHECK(two.eval(r) == count_nondominated({{3, 0}, {0, 3}}, 2, r));
  CHECK(two == NumPoly1(std::vector<Int>{Int(9)}));
}

TEST_CASE("kolchin_univariate matches enumeration on random sets") {
  Rng rng(131);
  for (int it = 0; it < 60; ++it) {
    int k = 1 + static_cast<int>(rng.below(3));
    std::vector<std::vector<int>> pts;
    long npts = rng.below(5);
    for (long p = 0; p < npts; ++p) {
      std::vector<int> pt;
      for (int j = 0; j < k; ++j) pt.push_back(static_cast<int>(rng.below(4)));
      pts.push_back(std::move(pt));
    }
    NumPoly1 w = kolchin_univariate(pts, k);
    int b = 0;
    for (const auto& p : pts) {
      int s = 0;
      for (int v : p) s += v;
      b = std::max(b, s);
    }
    for (int r = b; r <= b + 6; ++r)
      CHECK(w.eval(r) == count_nondominated(pts, k, r));
  }
}

TEST_CASE("numpoly evaluation is integral everywhere") {
  // integer binomial coefficients evaluate to integers at every integer
  // point; cross-check against the rational monomial expansion
  NumPoly2 p(std::vector<std::vector<Int>>{{Int(3), Int(-1)}, {Int(2), Int(5)}});
  RatMat mono = p.to_monomial();
  for (long r = -4; r <= 4; ++r)
    for (long s = -4; s <= 4; ++s) {
      Rat direct(0);
      for (std::size_t i = 0; i < mono.size(); ++i)
        for (std::size_t j = 0; j < mono[i].size(); ++j) {
          Rat term = mono[i][j];
          for (std::size_t q = 0; q < i; ++q) term *= r;
          for (std::size_t q = 0; q < j; ++q) term *= s;
          direct += term;
        }
      CHECK(Rat(p.eval(r, s)) == direct);
    }
}
