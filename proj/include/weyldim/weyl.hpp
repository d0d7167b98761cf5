#ifndef WEYLDIM_WEYL_HPP
#define WEYLDIM_WEYL_HPP

#include <initializer_list>
#include <map>
#include <tuple>
#include <vector>

#include "weyldim/errors.hpp"
#include "weyldim/rational.hpp"

namespace weyldim {

// Exponent vector in N^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : e_(static_cast<std::size_t>(n), 0) {}
  MultiIndex(std::initializer_list<int> e) : e_(e) {}
  explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exps() const { return e_; }

  int total() const;  // |alpha|

  MultiIndex operator+(const MultiIndex& o) const;
  // componentwise difference; requires *this >= o in the product order
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex max(const MultiIndex& o) const;
  MultiIndex min(const MultiIndex& o) const;

  // product order <=_P
  bool leq(const MultiIndex& o) const;

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

 private:
  std::vector<int> e_;
};

int cmp_lex(const MultiIndex& a, const MultiIndex& b);

// x^alpha d^beta
struct WeylMonomial {
  MultiIndex alpha;
  MultiIndex beta;

  WeylMonomial() = default;
  WeylMonomial(MultiIndex a, MultiIndex b);

  int n() const { return alpha.size(); }
  int ord_x() const { return alpha.total(); }
  int ord_d() const { return beta.total(); }
  int ord() const { return ord_x() + ord_d(); }

  static WeylMonomial one(int n) { return {MultiIndex(n), MultiIndex(n)}; }
  bool is_one() const { return ord() == 0; }

  // divisibility of power products: componentwise on both blocks
  bool divides(const WeylMonomial& other) const;
  // commutative exponent sum (NOT the operator product)
  WeylMonomial exp_sum(const WeylMonomial& other) const;
  WeylMonomial exp_diff(const WeylMonomial& other) const;

  bool operator==(const WeylMonomial& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
};

// theta <_x theta': (ord_x, ord_d, alpha, beta) lexicographically
int cmp_mono_x(const WeylMonomial& a, const WeylMonomial& b);
// theta <_d theta': (ord_d, ord_x, beta, alpha) lexicographically
int cmp_mono_d(const WeylMonomial& a, const WeylMonomial& b);

struct MonoXLess {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
    return cmp_mono_x(a, b) < 0;
  }
};

// Element of A_n(K): sparse sum of monomials with nonzero rational
// coefficients, stored in increasing <_x order.
class WeylElement {
 public:
  using TermMap = std::map<WeylMonomial, Rat, MonoXLess>;

  WeylElement() : n_(0) {}
  explicit WeylElement(int n) : n_(n) {}
  WeylElement(const WeylMonomial& m, Rat c);

  static WeylElement zero(int n) { return WeylElement(n); }
  static WeylElement one(int n) {
    return WeylElement(WeylMonomial::one(n), Rat(1));
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rat coeff(const WeylMonomial& m) const;
  void add_term(const WeylMonomial& m, const Rat& c);  // accumulates, purges 0

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement operator*(const WeylElement& o) const;  // operator product

  bool operator==(const WeylElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  TermMap terms_;
  int n_;
};

// Fully expanded operator product of two monomials,
// (x^a d^b)(x^g d^e) = sum over kappa <= min(b, g) of
//   prod_i C(b_i,k_i) C(g_i,k_i) k_i!  x^{a+g-k} d^{b+e-k}.
WeylElement mono_mul(const WeylMonomial& a, const WeylMonomial& b);

WeylElement scalar_mul(const Rat& c, const WeylElement& d);

// (ord, ord_x, ord_d); undefined for the zero element
std::tuple<int, int, int> orders(const WeylElement& d);

// Commutative polynomial in x_1..x_n over Q; the action oracle target.
class Polynomial {
 public:
  struct LexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
      return cmp_lex(a, b) < 0;
    }
  };
  using TermMap = std::map<MultiIndex, Rat, LexLess>;

  Polynomial() : n_(0) {}
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial monomial(MultiIndex k, Rat c);
  static Polynomial one(int n) { return monomial(MultiIndex(n), Rat(1)); }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& k, const Rat& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  TermMap terms_;
  int n_;
};

// Action of D on p as a differential operator; the independent oracle for
// mono_mul / elem_mul.
Polynomial apply_to_polynomial(const WeylElement& d, const Polynomial& p);

void check_same_n(int a, int b, const char* where);

}  // namespace weyldim

#endif
