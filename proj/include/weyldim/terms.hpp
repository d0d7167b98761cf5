#ifndef WEYLDIM_TERMS_HPP
#define WEYLDIM_TERMS_HPP

#include <map>
#include <optional>
#include <vector>

#include "weyldim/weyl.hpp"

namespace weyldim {

// Term theta e_gen of the free module E = A_n(K)^m; gen is 1-based.
// (ord_x, ord_d) cached for comparison speed.
struct Term {
  WeylMonomial mono;
  int gen = 1;
  int ordx = 0;
  int ordd = 0;

  Term() = default;
  Term(WeylMonomial m, int g)
      : mono(std::move(m)), gen(g), ordx(mono.ord_x()), ordd(mono.ord_d()) {}

  int n() const { return mono.n(); }
  int ord() const { return ordx + ordd; }

  bool operator==(const Term& o) const {
    return gen == o.gen && mono == o.mono;
  }
};

enum class TermOrder { X, Delta, Bernstein };

// <_x on terms: theta order first, generator index breaks ties (e_1 smallest)
int cmp_term_x(const Term& a, const Term& b);
int cmp_term_d(const Term& a, const Term& b);
// total degree ord_x+ord_d, then the full <_x comparison
int cmp_term_bernstein(const Term& a, const Term& b);
int cmp_term(TermOrder ord, const Term& a, const Term& b);

struct TermXLess {
  bool operator()(const Term& a, const Term& b) const {
    return cmp_term_x(a, b) < 0;
  }
};

// v | u: same generator and componentwise divisibility of the monomials
bool term_divides(const Term& v, const Term& u);
// u / v as a monomial; requires term_divides(v, u)
WeylMonomial term_quotient(const Term& u, const Term& v);
// nullopt encodes the distinguished zero lcm (different generators)
std::optional<Term> lcm_terms(const Term& w1, const Term& w2);

// Element of the free module E: sparse map Term -> nonzero Rat,
// iteration in increasing <_x order.
class ModuleElement {
 public:
  using TermMap = std::map<Term, Rat, TermXLess>;

  ModuleElement() : n_(0), m_(0) {}
  ModuleElement(int n, int m) : n_(n), m_(m) {}

  static ModuleElement from_term(const Term& t, Rat c, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rat coeff(const Term& t) const;
  void add_term(const Term& t, const Rat& c);

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;

  bool operator==(const ModuleElement& o) const {
    return n_ == o.n_ && m_ == o.m_ && terms_ == o.terms_;
  }

 private:
  TermMap terms_;
  int n_;
  int m_;
};

ModuleElement scalar_mul(const Rat& c, const ModuleElement& f);

// Module action of A_n(K) on E, coordinatewise over mono_mul.
ModuleElement act(const WeylElement& d, const ModuleElement& f);
ModuleElement act(const WeylMonomial& theta, const ModuleElement& f);

struct Leaders {
  Term u;     // x-leader
  Term v;     // d-leader
  Rat lc_x;
  Rat lc_d;
};

// x- and d-leaders with their coefficients; f must be nonzero
Leaders leaders(const ModuleElement& f);
// leading term / coefficient with respect to an arbitrary order
Term leader(const ModuleElement& f, TermOrder ord);
Rat leading_coeff(const ModuleElement& f, TermOrder ord);

// z^k u, the image of the rho-map
struct ExtendedTerm {
  Term term;
  int zpow = 0;
  bool operator==(const ExtendedTerm& o) const {
    return zpow == o.zpow && term == o.term;
  }
};

// rho(f) = z^{d(f)} u_f with d(f) = ord_d v_f - ord_d u_f
ExtendedTerm rho(const ModuleElement& f);
bool ext_divides(const ExtendedTerm& a, const ExtendedTerm& b);

void check_same_ambient(const ModuleElement& a, const ModuleElement& b,
                        const char* where);

}  // namespace weyldim

#endif
