#include "weyldim/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace weyldim {

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

void check_same_n(int a, int b, const char* where) {
  if (a != b) {
    std::ostringstream os;
    os << where << ": dimension mismatch (n=" << a << " vs n=" << b << ")";
    throw DimensionMismatch(os.str());
  }
}

int MultiIndex::total() const {
  int t = 0;
  for (int v : e_) t += v;
  return t;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < size(); ++i) {
    r[i] -= o[i];
    if (r[i] < 0) throw NotDivisibleError("multi-index difference below zero");
  }
  return r;
}

MultiIndex MultiIndex::max(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < size(); ++i) r[i] = std::max(r[i], o[i]);
  return r;
}

MultiIndex MultiIndex::min(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (int i = 0; i < size(); ++i) r[i] = std::min(r[i], o[i]);
  return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  for (int i = 0; i < size(); ++i)
    if (e_[static_cast<std::size_t>(i)] > o[i]) return false;
  return true;
}

int cmp_lex(const MultiIndex& a, const MultiIndex& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

WeylMonomial::WeylMonomial(MultiIndex a, MultiIndex b)
    : alpha(std::move(a)), beta(std::move(b)) {
  check_same_n(alpha.size(), beta.size(), "WeylMonomial");
}

bool WeylMonomial::divides(const WeylMonomial& other) const {
  return alpha.leq(other.alpha) && beta.leq(other.beta);
}

WeylMonomial WeylMonomial::exp_sum(const WeylMonomial& other) const {
  return {alpha + other.alpha, beta + other.beta};
}

WeylMonomial WeylMonomial::exp_diff(const WeylMonomial& other) const {
  return {alpha - other.alpha, beta - other.beta};
}

int cmp_mono_x(const WeylMonomial& a, const WeylMonomial& b) {
  int ax = a.ord_x(), bx = b.ord_x();
  if (ax != bx) return ax < bx ? -1 : 1;
  int ad = a.ord_d(), bd = b.ord_d();
  if (ad != bd) return ad < bd ? -1 : 1;
  if (int c = cmp_lex(a.alpha, b.alpha)) return c;
  return cmp_lex(a.beta, b.beta);
}

int cmp_mono_d(const WeylMonomial& a, const WeylMonomial& b) {
  int ad = a.ord_d(), bd = b.ord_d();
  if (ad != bd) return ad < bd ? -1 : 1;
  int ax = a.ord_x(), bx = b.ord_x();
  if (ax != bx) return ax < bx ? -1 : 1;
  if (int c = cmp_lex(a.beta, b.beta)) return c;
  return cmp_lex(a.alpha, b.alpha);
}

WeylElement::WeylElement(const WeylMonomial& m, Rat c) : n_(m.n()) {
  add_term(m, c);
}

Rat WeylElement::coeff(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void WeylElement::add_term(const WeylMonomial& m, const Rat& c) {
  if (c == 0) return;
  check_same_n(n_, m.n(), "WeylElement::add_term");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check_same_n(n_, o.n_, "WeylElement::operator+");
  WeylElement r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  return *this + (-o);
}

WeylElement WeylElement::operator-() const {
  WeylElement r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

WeylElement scalar_mul(const Rat& c, const WeylElement& d) {
  WeylElement r(d.n());
  if (c == 0) return r;
  for (const auto& [m, k] : d.terms()) r.add_term(m, c * k);
  return r;
}

namespace {

// iterate kappa over the box [0, lim] componentwise
bool next_in_box(MultiIndex& k, const MultiIndex& lim) {
  for (int i = 0; i < k.size(); ++i) {
    if (k[i] < lim[i]) {
      ++k[i];
      for (int j = 0; j < i; ++j) k[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

WeylElement mono_mul(const WeylMonomial& a, const WeylMonomial& b) {
  check_same_n(a.n(), b.n(), "mono_mul");
  const int n = a.n();
  const MultiIndex lim = a.beta.min(b.alpha);
  WeylElement out(n);
  MultiIndex kappa(n);
  do {
    Int coef(1);
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<unsigned long>(kappa[i]);
      coef *= binomial_uu(static_cast<unsigned long>(a.beta[i]), k);
      coef *= binomial_uu(static_cast<unsigned long>(b.alpha[i]), k);
      coef *= factorial(k);
    }
    WeylMonomial m{a.alpha + b.alpha - kappa, a.beta + b.beta - kappa};
    out.add_term(m, Rat(coef));
  } while (next_in_box(kappa, lim));
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  check_same_n(n_, o.n_, "WeylElement::operator*");
  WeylElement r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      WeylElement prod = mono_mul(ma, mb);
      for (const auto& [m, c] : prod.terms()) r.add_term(m, ca * cb * c);
    }
  }
  return r;
}

std::tuple<int, int, int> orders(const WeylElement& d) {
  if (d.is_zero()) throw ZeroElementError("orders: zero element");
  int o = 0, ox = 0, od = 0;
  for (const auto& [m, c] : d.terms()) {
    o = std::max(o, m.ord());
    ox = std::max(ox, m.ord_x());
    od = std::max(od, m.ord_d());
  }
  return {o, ox, od};
}

Polynomial Polynomial::monomial(MultiIndex k, Rat c) {
  Polynomial p(k.size());
  p.add_term(k, c);
  return p;
}

void Polynomial::add_term(const MultiIndex& k, const Rat& c) {
  if (c == 0) return;
  check_same_n(n_, k.size(), "Polynomial::add_term");
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_n(n_, o.n_, "Polynomial::operator+");
  Polynomial r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Polynomial apply_to_polynomial(const WeylElement& d, const Polynomial& p) {
  check_same_n(d.n(), p.n(), "apply_to_polynomial");
  const int n = d.n();
  Polynomial out(n);
  for (const auto& [m, c] : d.terms()) {
    for (const auto& [k, pc] : p.terms()) {
      // d^beta x^k = (falling factorials) x^{k-beta}, zero if beta exceeds k
      bool vanishes = false;
      Int ff(1);
      for (int i = 0; i < n && !vanishes; ++i) {
        if (k[i] < m.beta[i]) {
          vanishes = true;
        } else {
          for (int j = 0; j < m.beta[i]; ++j) ff *= k[i] - j;
        }
      }
      if (vanishes) continue;
      out.add_term(m.alpha + (k - m.beta), c * pc * Rat(ff));
    }
  }
  return out;
}

}  // namespace weyldim
