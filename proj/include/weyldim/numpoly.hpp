#ifndef WEYLDIM_NUMPOLY_HPP
#define WEYLDIM_NUMPOLY_HPP

#include <vector>

#include "weyldim/errors.hpp"
#include "weyldim/rational.hpp"

namespace weyldim {

// Dense univariate polynomial over Q in the monomial basis, index = power.
using UPoly = std::vector<Rat>;
// Monomial-basis coefficient matrix of a bivariate polynomial, c[i][j] is the
// coefficient of t1^i t2^j.
using RatMat = std::vector<std::vector<Rat>>;

UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const Rat& c, const UPoly& a);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
// C(t + k - shift, k) as a monomial-basis polynomial in t
UPoly binom_upoly(int k, long shift);
Rat upoly_eval(const UPoly& a, const Rat& t);

RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_scale(const Rat& c, const RatMat& a);
RatMat mat_outer(const UPoly& a, const UPoly& b);

// Numerical polynomial in one variable in the binomial basis:
// g(t) = sum_i b_i C(t+i, i), integer b_i, last entry nonzero.
class NumPoly1 {
 public:
  NumPoly1() = default;
  explicit NumPoly1(std::vector<Int> coeffs);

  static NumPoly1 from_monomial(const UPoly& c);
  UPoly to_monomial() const;

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int eval(long r) const;

  NumPoly1 operator+(const NumPoly1& o) const;
  NumPoly1 operator-(const NumPoly1& o) const;
  bool operator==(const NumPoly1& o) const { return c_ == o.c_; }

 private:
  std::vector<Int> c_;  // canonical: empty or nonzero back()
};

// Numerical polynomial in two variables in the canonical binomial basis of a
// (p+1) x (q+1) integer matrix: f = sum a_ij C(t1+i, i) C(t2+j, j).
class NumPoly2 {
 public:
  NumPoly2() = default;
  explicit NumPoly2(std::vector<std::vector<Int>> coeffs);

  // peeling conversion; throws InternalCheckError if the input is not
  // numerical (some binomial coefficient comes out non-integer)
  static NumPoly2 from_monomial(const RatMat& c);
  RatMat to_monomial() const;

  const std::vector<std::vector<Int>>& coeffs() const { return a_; }
  bool is_zero() const { return a_.empty(); }
  int deg_t1() const { return static_cast<int>(a_.size()) - 1; }
  int deg_t2() const {
    return a_.empty() ? -1 : static_cast<int>(a_[0].size()) - 1;
  }
  int total_degree() const;  // max i+j with a_ij != 0; -1 for zero
  Int coeff(int i, int j) const;
  Int eval(long r, long s) const;

  NumPoly2 operator+(const NumPoly2& o) const;
  NumPoly2 operator-(const NumPoly2& o) const;
  bool operator==(const NumPoly2& o) const { return a_ == o.a_; }

 private:
  std::vector<std::vector<Int>> a_;  // canonical: trimmed
};

// Finite A in N^{m+n}: first block of size m bounded by t1, second block of
// size n bounded by t2.
struct ExponentSet {
  int m = 1;
  int n = 1;
  std::vector<std::vector<int>> points;
};

// keep only the <=_P-minimal points (V_A depends on nothing else)
ExponentSet minimize_antichain(const ExponentSet& a);

// inclusion-exclusion over subsets of the minimized point set
NumPoly2 omega_A(const ExponentSet& a);

// exhaustive count of tuples with split degree bounds (r, s) dominating no
// point of A; the enumeration oracle for omega_A
long count_V_A(const ExponentSet& a, int r, int s);

// univariate analogue on k-tuples with total coordinate sum bounded by t
NumPoly1 kolchin_univariate(const std::vector<std::vector<int>>& points,
                            int k);
long count_nondominated(const std::vector<std::vector<int>>& points, int k,
                        int r);

}  // namespace weyldim

#endif
