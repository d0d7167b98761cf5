#include "weyldim/oracle.hpp"

#include <algorithm>
#include <functional>

namespace weyldim {

namespace {

void check_single_certificate(const GroebnerBasis& g) {
  if (g.cert != Certificate::delta_gb && g.cert != Certificate::bernstein_gb)
    throw UncertifiedBasisError(
        "oracle: needs a single-order Groebner basis certificate, got " +
        certificate_name(g.cert));
}

// all monomials with ord_x <= r and ord_d <= s, increasing <_x
std::vector<WeylMonomial> theta_rs(int n, int r, int s) {
  std::vector<std::vector<int>> xs, ds;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(std::vector<std::vector<int>>&, int, int)> gen =
      [&](std::vector<std::vector<int>>& out, int pos, int left) {
        if (pos == n) {
          out.push_back(cur);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          cur[static_cast<std::size_t>(pos)] = e;
          gen(out, pos + 1, left - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
      };
  gen(xs, 0, r);
  gen(ds, 0, s);
  std::vector<WeylMonomial> out;
  out.reserve(xs.size() * ds.size());
  for (const auto& a : xs)
    for (const auto& b : ds)
      out.emplace_back(MultiIndex(a), MultiIndex(b));
  std::sort(out.begin(), out.end(),
            [](const WeylMonomial& a, const WeylMonomial& b) {
              return cmp_mono_x(a, b) < 0;
            });
  return out;
}

}  // namespace

DimOracle::DimOracle(int n, int m, const GroebnerBasis& g_single)
    : n_(n), m_(m), order_(g_single.order) {
  if (!g_single.elements.empty()) {
    check_single_certificate(g_single);
    basis_ = g_single.elems();
    for (const auto& e : basis_) basis_leaders_.push_back(leader(e, order_));
  }
}

const ModuleElement& DimOracle::nf_of(const Term& t) {
  auto it = nf_cache_.find(t);
  if (it != nf_cache_.end()) return it->second;
  ModuleElement f = ModuleElement::from_term(t, Rat(1), m_);
  bool standard = true;
  for (const auto& l : basis_leaders_) {
    if (term_divides(l, t)) {
      standard = false;
      break;
    }
  }
  if (!standard) f = normal_form_single(f, basis_, order_).remainder;
  return nf_cache_.emplace(t, std::move(f)).first->second;
}

DimOracle::Row DimOracle::integer_row(const ModuleElement& f) const {
  Int den(1);
  for (const auto& [t, c] : f.terms()) {
    Int d = c.get_den();
    den = den / gcd(den, d) * d;
  }
  Row row;
  for (const auto& [t, c] : f.terms()) {
    row[t] = c.get_num() * (den / c.get_den());
  }
  return row;
}

bool DimOracle::Echelon::insert(Row row) {
  auto strip_content = [](Row& r) {
    Int g(0);
    for (const auto& [t, v] : r) g = gcd(g, v);
    if (g > 1)
      for (auto& [t, v] : r) v /= g;
  };
  while (!row.empty()) {
    // pivot at the <_x-greatest term of the row
    Term p = row.rbegin()->first;
    auto it = pivots.find(p);
    if (it == pivots.end()) {
      strip_content(row);
      pivots.emplace(p, std::move(row));
      ++rank;
      return true;
    }
    // fraction-free cross elimination against the resident row
    const Row& e = it->second;
    Int a = e.at(p);
    Int b = row.rbegin()->second;
    Row next;
    for (const auto& [t, v] : row) {
      auto jt = e.find(t);
      Int w = a * v - (jt != e.end() ? b * jt->second : Int(0));
      if (w != 0) next[t] = w;
    }
    for (const auto& [t, v] : e) {
      if (row.find(t) == row.end()) {
        Int w = -b * v;
        if (w != 0) next[t] = w;
      }
    }
    next.erase(p);
    strip_content(next);
    row = std::move(next);
  }
  return false;
}

long DimOracle::dim(int r, int s) {
  Echelon ech;
  for (const auto& mono : theta_rs(n_, r, s)) {
    for (int i = 1; i <= m_; ++i) {
      ech.insert(integer_row(nf_of(Term(mono, i))));
    }
  }
  return ech.rank;
}

DimGrid DimOracle::grid(int r_max, int s_max) {
  DimGrid out;
  out.n = n_;
  out.m = m_;
  out.r_max = r_max;
  out.s_max = s_max;
  out.entries.assign(static_cast<std::size_t>(r_max) + 1,
                     std::vector<long>(static_cast<std::size_t>(s_max) + 1, 0));
  for (int r = 0; r <= r_max; ++r) {
    // rows for fixed r arrive in increasing ord_d, so the echelon accumulates
    // along the s axis
    Echelon ech;
    auto monos = theta_rs(n_, r, s_max);
    std::stable_sort(monos.begin(), monos.end(),
                     [](const WeylMonomial& a, const WeylMonomial& b) {
                       return a.ord_d() < b.ord_d();
                     });
    std::size_t idx = 0;
    for (int s = 0; s <= s_max; ++s) {
      while (idx < monos.size() && monos[idx].ord_d() <= s) {
        for (int i = 1; i <= m_; ++i)
          ech.insert(integer_row(nf_of(Term(monos[idx], i))));
        ++idx;
      }
      out.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          ech.rank;
    }
  }
  // bifiltration monotonicity
  for (int r = 0; r <= r_max; ++r)
    for (int s = 0; s <= s_max; ++s) {
      if (r > 0 && out.at(r, s) < out.at(r - 1, s))
        throw InternalCheckError("dim_grid: dimension drops along r");
      if (s > 0 && out.at(r, s) < out.at(r, s - 1))
        throw InternalCheckError("dim_grid: dimension drops along s");
    }
  return out;
}

long dim_M_rs(const std::vector<ModuleElement>& gens,
              const GroebnerBasis& g_single, int r, int s) {
  int n = g_single.n, m = g_single.m;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      n = g.n();
      m = g.m();
    }
  DimOracle oracle(n, m, g_single);
  return oracle.dim(r, s);
}

DimGrid dim_grid(const std::vector<ModuleElement>& gens,
                 const GroebnerBasis& g_single, int r_max, int s_max) {
  int n = g_single.n, m = g_single.m;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      n = g.n();
      m = g.m();
    }
  DimOracle oracle(n, m, g_single);
  return oracle.grid(r_max, s_max);
}

}  // namespace weyldim
