#include "weyldim/terms.hpp"

#include <sstream>

namespace weyldim {

int cmp_term_x(const Term& a, const Term& b) {
  if (int c = cmp_mono_x(a.mono, b.mono)) return c;
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  return 0;
}

int cmp_term_d(const Term& a, const Term& b) {
  if (int c = cmp_mono_d(a.mono, b.mono)) return c;
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  return 0;
}

int cmp_term_bernstein(const Term& a, const Term& b) {
  int at = a.ord(), bt = b.ord();
  if (at != bt) return at < bt ? -1 : 1;
  return cmp_term_x(a, b);
}

int cmp_term(TermOrder ord, const Term& a, const Term& b) {
  switch (ord) {
    case TermOrder::X:
      return cmp_term_x(a, b);
    case TermOrder::Delta:
      return cmp_term_d(a, b);
    case TermOrder::Bernstein:
      return cmp_term_bernstein(a, b);
  }
  return 0;
}

bool term_divides(const Term& v, const Term& u) {
  return v.gen == u.gen && v.mono.divides(u.mono);
}

WeylMonomial term_quotient(const Term& u, const Term& v) {
  if (!term_divides(v, u)) {
    throw NotDivisibleError("term_quotient: divisor does not divide term");
  }
  return u.mono.exp_diff(v.mono);
}

std::optional<Term> lcm_terms(const Term& w1, const Term& w2) {
  if (w1.gen != w2.gen) return std::nullopt;
  WeylMonomial m{w1.mono.alpha.max(w2.mono.alpha),
                 w1.mono.beta.max(w2.mono.beta)};
  return Term(m, w1.gen);
}

ModuleElement ModuleElement::from_term(const Term& t, Rat c, int m) {
  ModuleElement f(t.n(), m);
  f.add_term(t, std::move(c));
  return f;
}

Rat ModuleElement::coeff(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ModuleElement::add_term(const Term& t, const Rat& c) {
  if (c == 0) return;
  check_same_n(n_, t.n(), "ModuleElement::add_term");
  if (t.gen < 1 || t.gen > m_) {
    std::ostringstream os;
    os << "ModuleElement::add_term: generator index " << t.gen
       << " out of range 1.." << m_;
    throw DimensionMismatch(os.str());
  }
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void check_same_ambient(const ModuleElement& a, const ModuleElement& b,
                        const char* where) {
  if (a.n() != b.n() || a.m() != b.m()) {
    std::ostringstream os;
    os << where << ": ambient mismatch (n=" << a.n() << ",m=" << a.m()
       << ") vs (n=" << b.n() << ",m=" << b.m() << ")";
    throw DimensionMismatch(os.str());
  }
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  check_same_ambient(*this, o, "ModuleElement::operator+");
  ModuleElement r(*this);
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  return *this + (-o);
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r(n_, m_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

ModuleElement scalar_mul(const Rat& c, const ModuleElement& f) {
  ModuleElement r(f.n(), f.m());
  if (c == 0) return r;
  for (const auto& [t, k] : f.terms()) r.add_term(t, c * k);
  return r;
}

ModuleElement act(const WeylElement& d, const ModuleElement& f) {
  check_same_n(d.n(), f.n(), "act");
  ModuleElement r(f.n(), f.m());
  for (const auto& [md, cd] : d.terms()) {
    for (const auto& [t, cf] : f.terms()) {
      WeylElement prod = mono_mul(md, t.mono);
      for (const auto& [m, c] : prod.terms()) {
        r.add_term(Term(m, t.gen), cd * cf * c);
      }
    }
  }
  return r;
}

ModuleElement act(const WeylMonomial& theta, const ModuleElement& f) {
  return act(WeylElement(theta, Rat(1)), f);
}

Leaders leaders(const ModuleElement& f) {
  if (f.is_zero()) throw ZeroElementError("leaders: zero element");
  Leaders out;
  // map iteration is increasing <_x, so the x-leader is the last term
  auto last = std::prev(f.terms().end());
  out.u = last->first;
  out.lc_x = last->second;
  bool first = true;
  for (const auto& [t, c] : f.terms()) {
    if (first || cmp_term_d(out.v, t) < 0) {
      out.v = t;
      out.lc_d = c;
      first = false;
    }
  }
  return out;
}

Term leader(const ModuleElement& f, TermOrder ord) {
  if (f.is_zero()) throw ZeroElementError("leader: zero element");
  if (ord == TermOrder::X) return std::prev(f.terms().end())->first;
  const Term* best = nullptr;
  for (const auto& [t, c] : f.terms()) {
    if (!best || cmp_term(ord, *best, t) < 0) best = &t;
  }
  return *best;
}

Rat leading_coeff(const ModuleElement& f, TermOrder ord) {
  return f.coeff(leader(f, ord));
}

ExtendedTerm rho(const ModuleElement& f) {
  Leaders l = leaders(f);
  int d = l.v.ordd - l.u.ordd;
  // v_f maximizes ord_d over the terms of f, so d(f) >= 0
  if (d < 0) throw InternalCheckError("rho: negative d(f)");
  return ExtendedTerm{l.u, d};
}

bool ext_divides(const ExtendedTerm& a, const ExtendedTerm& b) {
  return a.zpow <= b.zpow && term_divides(a.term, b.term);
}

}  // namespace weyldim
