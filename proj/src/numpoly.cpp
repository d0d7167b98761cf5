#include "weyldim/numpoly.hpp"

#include <algorithm>
#include <functional>

namespace weyldim {

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

UPoly upoly_scale(const Rat& c, const UPoly& a) {
  UPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UPoly binom_upoly(int k, long shift) {
  UPoly r{Rat(1)};
  for (int j = 0; j < k; ++j) {
    // multiply by (t + k - shift - j)
    r = upoly_add(upoly_mul(r, UPoly{Rat(0), Rat(1)}),
                  upoly_scale(Rat(k - shift - j), r));
  }
  return upoly_scale(Rat(1) / Rat(factorial(static_cast<unsigned long>(k))),
                     r);
}

Rat upoly_eval(const UPoly& a, const Rat& t) {
  Rat v(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * t + *it;
  return v;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  std::size_t rows = std::max(a.size(), b.size());
  std::size_t cols = 0;
  for (const auto& r : a) cols = std::max(cols, r.size());
  for (const auto& r : b) cols = std::max(cols, r.size());
  RatMat r(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] += a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

RatMat mat_scale(const Rat& c, const RatMat& a) {
  RatMat r(a);
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

RatMat mat_outer(const UPoly& a, const UPoly& b) {
  RatMat r(a.size(), std::vector<Rat>(b.size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i][j] = a[i] * b[j];
  return r;
}

namespace {

void trim1(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim2(std::vector<std::vector<Int>>& a) {
  std::size_t cols = 0;
  for (auto& row : a) {
    std::size_t w = row.size();
    while (w > 0 && row[w - 1] == 0) --w;
    cols = std::max(cols, w);
  }
  while (!a.empty()) {
    bool all_zero = true;
    for (const Int& v : a.back())
      if (v != 0) {
        all_zero = false;
        break;
      }
    if (!all_zero) break;
    a.pop_back();
  }
  for (auto& row : a) row.resize(cols, Int(0));
}

Rat require_integer(const Rat& q, const char* where) {
  if (q.get_den() != 1) {
    throw InternalCheckError(std::string(where) +
                             ": non-integer binomial coefficient " +
                             q.get_str() + " (input is not numerical)");
  }
  return q;
}

}  // namespace

NumPoly1::NumPoly1(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  trim1(c_);
}

NumPoly1 NumPoly1::from_monomial(const UPoly& c) {
  UPoly work(c);
  while (!work.empty() && work.back() == 0) work.pop_back();
  std::vector<Int> out(work.size(), Int(0));
  for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
    Rat a = work[static_cast<std::size_t>(i)] *
            Rat(factorial(static_cast<unsigned long>(i)));
    require_integer(a, "NumPoly1::from_monomial");
    out[static_cast<std::size_t>(i)] = a.get_num();
    UPoly expand = upoly_scale(-a, binom_upoly(i, 0));
    work = upoly_add(work, expand);
  }
  return NumPoly1(std::move(out));
}

UPoly NumPoly1::to_monomial() const {
  UPoly r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r = upoly_add(r, upoly_scale(Rat(c_[i]), binom_upoly(static_cast<int>(i), 0)));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Int NumPoly1::eval(long r) const {
  Int v(0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v += c_[i] * binomial_int(r + static_cast<long>(i), static_cast<int>(i));
  }
  return v;
}

NumPoly1 NumPoly1::operator+(const NumPoly1& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return NumPoly1(std::move(r));
}

NumPoly1 NumPoly1::operator-(const NumPoly1& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return NumPoly1(std::move(r));
}

NumPoly2::NumPoly2(std::vector<std::vector<Int>> coeffs)
    : a_(std::move(coeffs)) {
  std::size_t cols = 0;
  for (const auto& row : a_) cols = std::max(cols, row.size());
  for (auto& row : a_) row.resize(cols, Int(0));
  trim2(a_);
}

NumPoly2 NumPoly2::from_monomial(const RatMat& c) {
  RatMat work(c);
  std::size_t cols = 0;
  for (const auto& row : work) cols = std::max(cols, row.size());
  for (auto& row : work) row.resize(cols, Rat(0));
  const int p = static_cast<int>(work.size()) - 1;
  const int q = static_cast<int>(cols) - 1;
  std::vector<std::vector<Int>> out(work.size(),
                                    std::vector<Int>(cols, Int(0)));
  // peel from the top corner; C(t1+i,i)C(t2+j,j) only has support in the
  // rectangle [0,i]x[0,j], so a decreasing sweep never revisits an entry
  for (int i = p; i >= 0; --i) {
    UPoly bi = binom_upoly(i, 0);
    for (int j = q; j >= 0; --j) {
      const Rat& cij = work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (cij == 0) continue;
      Rat a = cij * Rat(factorial(static_cast<unsigned long>(i)) *
                        factorial(static_cast<unsigned long>(j)));
      require_integer(a, "NumPoly2::from_monomial");
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.get_num();
      RatMat expand = mat_scale(-a, mat_outer(bi, binom_upoly(j, 0)));
      work = mat_add(work, expand);
    }
  }
  return NumPoly2(std::move(out));
}

RatMat NumPoly2::to_monomial() const {
  RatMat r;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    UPoly bi = binom_upoly(static_cast<int>(i), 0);
    for (std::size_t j = 0; j < a_[i].size(); ++j) {
      if (a_[i][j] == 0) continue;
      r = mat_add(r, mat_scale(Rat(a_[i][j]),
                               mat_outer(bi, binom_upoly(static_cast<int>(j), 0))));
    }
  }
  return r;
}

int NumPoly2::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < a_[i].size(); ++j)
      if (a_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
  return d;
}

Int NumPoly2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(a_.size()) ||
      (a_.empty() || j >= static_cast<int>(a_[0].size())))
    return Int(0);
  return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Int NumPoly2::eval(long r, long s) const {
  Int v(0);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    Int b1 = binomial_int(r + static_cast<long>(i), static_cast<int>(i));
    if (b1 == 0) continue;
    for (std::size_t j = 0; j < a_[i].size(); ++j) {
      if (a_[i][j] == 0) continue;
      v += a_[i][j] * b1 *
           binomial_int(s + static_cast<long>(j), static_cast<int>(j));
    }
  }
  return v;
}

NumPoly2 NumPoly2::operator+(const NumPoly2& o) const {
  std::size_t rows = std::max(a_.size(), o.a_.size());
  std::size_t cols = 0;
  if (!a_.empty()) cols = a_[0].size();
  if (!o.a_.empty()) cols = std::max(cols, o.a_[0].size());
  std::vector<std::vector<Int>> r(rows, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < a_[i].size(); ++j) r[i][j] += a_[i][j];
  for (std::size_t i = 0; i < o.a_.size(); ++i)
    for (std::size_t j = 0; j < o.a_[i].size(); ++j) r[i][j] += o.a_[i][j];
  return NumPoly2(std::move(r));
}

NumPoly2 NumPoly2::operator-(const NumPoly2& o) const {
  std::vector<std::vector<Int>> neg(o.a_);
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  return *this + NumPoly2(std::move(neg));
}

namespace {

bool dominates(const std::vector<int>& v, const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (v[i] < a[i]) return false;
  return true;
}

std::vector<std::vector<int>> minimal_points(
    std::vector<std::vector<int>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < pts.size() && !redundant; ++j) {
      if (i != j && dominates(pts[i], pts[j])) redundant = true;
    }
    if (!redundant) out.push_back(pts[i]);
  }
  return out;
}

void check_points(const std::vector<std::vector<int>>& pts, int k,
                  const char* where) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != k)
      throw DimensionMismatch(std::string(where) + ": tuple length mismatch");
    for (int v : p)
      if (v < 0)
        throw DimensionMismatch(std::string(where) + ": negative exponent");
  }
}

constexpr int kMaxInclusionExclusionPoints = 22;

}  // namespace

ExponentSet minimize_antichain(const ExponentSet& a) {
  check_points(a.points, a.m + a.n, "minimize_antichain");
  return ExponentSet{a.m, a.n, minimal_points(a.points)};
}

NumPoly2 omega_A(const ExponentSet& a) {
  ExponentSet min = minimize_antichain(a);
  const int p = static_cast<int>(min.points.size());
  if (p > kMaxInclusionExclusionPoints)
    throw StepBudgetExceeded("omega_A: too many antichain points (" +
                             std::to_string(p) + "), 2^p subsets infeasible");
  RatMat acc;
  for (unsigned long mask = 0; mask < (1ul << p); ++mask) {
    long b = 0, c = 0;
    for (int j = 0; j < min.m + min.n; ++j) {
      int mx = 0;
      for (int i = 0; i < p; ++i)
        if (mask & (1ul << i))
          mx = std::max(mx, min.points[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)]);
      (j < min.m ? b : c) += mx;
    }
    int sign = __builtin_popcountl(mask) % 2 == 0 ? 1 : -1;
    acc = mat_add(acc, mat_scale(Rat(sign),
                                 mat_outer(binom_upoly(min.m, b),
                                           binom_upoly(min.n, c))));
  }
  return NumPoly2::from_monomial(acc);
}

namespace {

// enumerate tuples of the given length with coordinate sum <= bound
void for_each_bounded(int len, int bound,
                      const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == len) {
      fn(v);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      v[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
    v[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, bound);
}

}  // namespace

long count_V_A(const ExponentSet& a, int r, int s) {
  check_points(a.points, a.m + a.n, "count_V_A");
  long count = 0;
  for_each_bounded(a.m, r, [&](const std::vector<int>& x) {
    for_each_bounded(a.n, s, [&](const std::vector<int>& y) {
      std::vector<int> v(x);
      v.insert(v.end(), y.begin(), y.end());
      for (const auto& pt : a.points) {
        if (dominates(v, pt)) return;
      }
      ++count;
    });
  });
  return count;
}

NumPoly1 kolchin_univariate(const std::vector<std::vector<int>>& points,
                            int k) {
  check_points(points, k, "kolchin_univariate");
  auto pts = minimal_points(points);
  const int p = static_cast<int>(pts.size());
  if (p > kMaxInclusionExclusionPoints)
    throw StepBudgetExceeded("kolchin_univariate: too many antichain points");
  UPoly acc;
  for (unsigned long mask = 0; mask < (1ul << p); ++mask) {
    long b = 0;
    for (int j = 0; j < k; ++j) {
      int mx = 0;
      for (int i = 0; i < p; ++i)
        if (mask & (1ul << i))
          mx = std::max(mx, pts[static_cast<std::size_t>(i)]
                                [static_cast<std::size_t>(j)]);
      b += mx;
    }
    int sign = __builtin_popcountl(mask) % 2 == 0 ? 1 : -1;
    acc = upoly_add(acc, upoly_scale(Rat(sign), binom_upoly(k, b)));
  }
  return NumPoly1::from_monomial(acc);
}

long count_nondominated(const std::vector<std::vector<int>>& points, int k,
                        int r) {
  check_points(points, k, "count_nondominated");
  long count = 0;
  for_each_bounded(k, r, [&](const std::vector<int>& v) {
    for (const auto& pt : points) {
      if (dominates(v, pt)) return;
    }
    ++count;
  });
  return count;
}

}  // namespace weyldim
