#ifndef WEYLDIM_TEST_HELPERS_HPP
#define WEYLDIM_TEST_HELPERS_HPP

#include <array>
#include <initializer_list>
#include <vector>

#include "weyldim/groebner.hpp"
#include "weyldim/reduction.hpp"
#include "weyldim/terms.hpp"
#include "weyldim/weyl.hpp"

namespace weyldim::testing {

// x^a d^b in one variable
inline WeylMonomial m1(int a, int b) {
  return WeylMonomial{MultiIndex{a}, MultiIndex{b}};
}

inline WeylElement w1(int a, int b, long c = 1) {
  return WeylElement(m1(a, b), Rat(c));
}

inline Term t1(int a, int b, int gen = 1) { return Term(m1(a, b), gen); }

// sparse n=1 module element from (a, b, gen, coeff) tuples
inline ModuleElement me1(std::initializer_list<std::array<long, 4>> terms,
                         int m = 1) {
  ModuleElement f(1, m);
  for (const auto& t : terms) {
    f.add_term(t1(static_cast<int>(t[0]), static_cast<int>(t[1]),
                  static_cast<int>(t[2])),
               Rat(t[3]));
  }
  return f;
}

// exponent vector with coordinate sum drawn from [0, total_max]
inline MultiIndex random_composition(Rng& rng, int n, int total_max) {
  MultiIndex a(n);
  long total = rng.below(total_max + 1);
  for (long t = 0; t < total; ++t) a[static_cast<int>(rng.below(n))] += 1;
  return a;
}

// random sparse element over ambient (n, m); every term obeys the bidegree
// cap (ord_x <= max_exp, ord_d <= max_exp)
inline ModuleElement random_element(Rng& rng, int n, int m, int max_terms,
                                    int max_exp, long max_coeff = 3) {
  ModuleElement f(n, m);
  long terms = 1 + rng.below(max_terms);
  for (long t = 0; t < terms; ++t) {
    MultiIndex a = random_composition(rng, n, max_exp);
    MultiIndex b = random_composition(rng, n, max_exp);
    long c = rng.below(2 * max_coeff) - max_coeff;
    if (c == 0) c = 1;
    f.add_term(Term(WeylMonomial{a, b}, 1 + static_cast<int>(rng.below(m))),
               Rat(c));
  }
  return f;
}

inline WeylElement random_weyl(Rng& rng, int n, int max_terms, int max_exp,
                               long max_coeff = 3) {
  WeylElement d(n);
  long terms = 1 + rng.below(max_terms);
  for (long t = 0; t < terms; ++t) {
    MultiIndex a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = static_cast<int>(rng.below(max_exp + 1));
      b[i] = static_cast<int>(rng.below(max_exp + 1));
    }
    long c = rng.below(2 * max_coeff) - max_coeff;
    if (c == 0) c = 1;
    d.add_term(WeylMonomial{a, b}, Rat(c));
  }
  return d;
}

// f == remainder + sum quotients[i] * g[i], verified by expansion
inline bool reduction_identity_holds(const ModuleElement& f,
                                     const std::vector<ModuleElement>& g,
                                     const ReductionResult& res) {
  ModuleElement acc = res.remainder;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc = acc + act(res.quotients[i], g[i]);
  return acc == f;
}

}  // namespace weyldim::testing

#endif
