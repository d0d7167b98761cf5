#include "weyldim/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weyldim {

namespace {

struct LineCursor {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  int col() const { return static_cast<int>(pos) + 1; }
  bool eol() {
    skip_ws();
    return pos >= text.size();
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_ws();
    return text[pos++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line, static_cast<int>(pos) + 1, what);
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }
};

struct RawTerm {
  Rat coeff;
  MultiIndex alpha;
  MultiIndex beta;
  int gen = 0;
};

RawTerm parse_term(LineCursor& cur, int n, int m, bool negative) {
  RawTerm t;
  t.coeff = negative ? Rat(-1) : Rat(1);
  t.alpha = MultiIndex(n);
  t.beta = MultiIndex(n);

  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    long num = cur.integer();
    if (cur.accept('/')) {
      long den = cur.integer();
      if (den == 0) cur.fail("zero denominator");
      t.coeff *= Rat(num, den);
      t.coeff.canonicalize();
    } else {
      t.coeff *= Rat(num);
    }
    cur.accept('*');
  }

  bool saw_factor = false;
  while (true) {
    char c = cur.peek();
    if (c != 'x' && c != 'd' && c != 'e') break;
    cur.take();
    saw_factor = true;
    bool has_index = std::isdigit(static_cast<unsigned char>(cur.peek()));
    long index = has_index ? cur.integer() : -1;
    if (c == 'e') {
      if (!has_index) cur.fail("generator factor needs an index: e<i>");
      if (index < 1 || index > m)
        cur.fail("generator index e" + std::to_string(index) +
                 " out of range 1.." + std::to_string(m));
      if (t.gen != 0) cur.fail("more than one e<i> factor in a term");
      t.gen = static_cast<int>(index);
    } else {
      if (!has_index) {
        if (n != 1) cur.fail("variable index required when n > 1");
        index = 1;
      }
      if (index < 1 || index > n)
        cur.fail(std::string(1, c) + std::to_string(index) +
                 " out of range 1.." + std::to_string(n));
      long k = 1;
      if (cur.accept('^')) k = cur.integer();
      if (c == 'x')
        t.alpha[static_cast<int>(index - 1)] += static_cast<int>(k);
      else
        t.beta[static_cast<int>(index - 1)] += static_cast<int>(k);
    }
    cur.accept('*');
  }
  if (!saw_factor) cur.fail("expected a term (factors x/d/e)");
  if (t.gen == 0) cur.fail("every term needs exactly one e<i> factor");
  return t;
}

ModuleElement parse_relation(LineCursor& cur, int n, int m) {
  ModuleElement rel(n, m);
  bool first = true;
  while (!cur.eol()) {
    bool negative = false;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      cur.take();
      negative = c == '-';
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    RawTerm t = parse_term(cur, n, m, negative);
    rel.add_term(Term(WeylMonomial{t.alpha, t.beta}, t.gen), t.coeff);
    first = false;
  }
  if (first) cur.fail("empty relation");
  return rel;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  std::string s(hash == std::string_view::npos ? line : line.substr(0, hash));
  return s;
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Presentation parse_presentation(std::string_view source) {
  Presentation p;
  std::vector<std::pair<int, std::string>> lines;
  {
    int no = 1;
    std::size_t start = 0;
    while (start <= source.size()) {
      auto end = source.find('\n', start);
      if (end == std::string_view::npos) end = source.size();
      std::string body = strip_comment(source.substr(start, end - start));
      if (!blank(body)) lines.emplace_back(no, body);
      start = end + 1;
      ++no;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty presentation");

  std::size_t at = 0;
  {
    LineCursor cur{lines[at].second, lines[at].first};
    for (char c : {'w', 'e', 'y', 'l'})
      if (cur.take() != c) cur.fail("expected header 'weyl n=<int>'");
    if (cur.take() != 'n' || cur.take() != '=')
      cur.fail("expected header 'weyl n=<int>'");
    long n = cur.integer();
    if (!cur.eol()) cur.fail("trailing input after header");
    if (n < 1) cur.fail("n must be at least 1");
    p.n = static_cast<int>(n);
    ++at;
  }
  if (at >= lines.size())
    throw ParseError(lines.back().first, 1, "missing 'module rank=<int>'");
  {
    LineCursor cur{lines[at].second, lines[at].first};
    for (char c : std::string("module"))
      if (cur.take() != c) cur.fail("expected 'module rank=<int>'");
    for (char c : std::string("rank"))
      if (cur.take() != c) cur.fail("expected 'module rank=<int>'");
    if (cur.take() != '=') cur.fail("expected 'module rank=<int>'");
    long m = cur.integer();
    if (!cur.eol()) cur.fail("trailing input after rank");
    if (m < 1) cur.fail("rank must be at least 1");
    p.m = static_cast<int>(m);
    ++at;
  }
  for (; at < lines.size(); ++at) {
    LineCursor cur{lines[at].second, lines[at].first};
    for (char c : std::string("rel"))
      if (cur.take() != c) cur.fail("expected 'rel <sum>'");
    ModuleElement rel = parse_relation(cur, p.n, p.m);
    if (rel.is_zero()) cur.fail("zero relation");
    p.relations.push_back(std::move(rel));
    p.labels.push_back("g" + std::to_string(p.relations.size()));
  }
  return p;
}

namespace {

void append_power(std::ostream& os, char var, int index, int exp, int n,
                  bool& first) {
  if (exp == 0) return;
  if (!first) os << ' ';
  first = false;
  os << var;
  if (n > 1) os << index;
  if (exp != 1) os << '^' << exp;
}

}  // namespace

std::string term_to_string(const Term& t, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i)
    append_power(os, 'x', i + 1, t.mono.alpha[i], n, first);
  for (int i = 0; i < n; ++i)
    append_power(os, 'd', i + 1, t.mono.beta[i], n, first);
  if (!first) os << ' ';
  os << 'e' << t.gen;
  return os.str();
}

std::string element_to_string(const ModuleElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leaders first
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat mag = abs(c);
    if (mag != 1) os << mag.get_str() << " * ";
    os << term_to_string(it->first, f.n());
    first = false;
  }
  return os.str();
}

std::string weyl_element_to_string(const WeylElement& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const int n = d.n();
  for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
    const Rat& c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat mag = abs(c);
    std::ostringstream mono;
    bool mono_first = true;
    for (int i = 0; i < n; ++i)
      append_power(mono, 'x', i + 1, it->first.alpha[i], n, mono_first);
    for (int i = 0; i < n; ++i)
      append_power(mono, 'd', i + 1, it->first.beta[i], n, mono_first);
    if (mono_first) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << " * ";
      os << mono.str();
    }
    first = false;
  }
  return os.str();
}

std::string extended_term_to_string(const ExtendedTerm& e, int n) {
  std::ostringstream os;
  if (e.zpow > 0) {
    os << 'z';
    if (e.zpow != 1) os << '^' << e.zpow;
    os << ' ';
  }
  os << term_to_string(e.term, n);
  return os.str();
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "weyl n=" << p.n << "\n";
  os << "module rank=" << p.m << "\n";
  for (const auto& rel : p.relations) {
    os << "rel " << element_to_string(rel) << "\n";
  }
  return os.str();
}

namespace {

struct MonoTerm {
  int i;
  int j;
  Rat c;
};

void append_signed(std::ostringstream& os, bool& first, const Rat& c,
                   const std::string& body) {
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  Rat mag = abs(c);
  if (body.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << '*';
    os << body;
  }
  first = false;
}

std::string power_string(const char* var, int e) {
  if (e == 0) return "";
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string numpoly2_monomial_string(const NumPoly2& p) {
  RatMat c = p.to_monomial();
  std::vector<MonoTerm> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != 0)
        terms.push_back(MonoTerm{static_cast<int>(i), static_cast<int>(j), c[i][j]});
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const MonoTerm& a, const MonoTerm& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    std::string body = power_string("t1", t.i);
    std::string tail = power_string("t2", t.j);
    if (!body.empty() && !tail.empty()) body += "*";
    body += tail;
    append_signed(os, first, t.c, body);
  }
  return os.str();
}

std::string numpoly1_monomial_string(const NumPoly1& p) {
  UPoly c = p.to_monomial();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    append_signed(os, first, c[static_cast<std::size_t>(i)],
                  power_string("t", i));
  }
  return os.str();
}

std::string numpoly2_binomial_string(const NumPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& a = p.coeffs();
  std::vector<std::tuple<int, int>> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0) idx.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::sort(idx.begin(), idx.end(), [](auto x, auto y) {
    auto [xi, xj] = x;
    auto [yi, yj] = y;
    if (xi + xj != yi + yj) return xi + xj > yi + yj;
    return xi > yi;
  });
  for (auto [i, j] : idx) {
    std::string body;
    if (i > 0)
      body += "C(t1+" + std::to_string(i) + "," + std::to_string(i) + ")";
    if (j > 0) {
      if (!body.empty()) body += "*";
      body += "C(t2+" + std::to_string(j) + "," + std::to_string(j) + ")";
    }
    append_signed(os, first, Rat(p.coeff(i, j)), body);
  }
  return os.str();
}

std::string numpoly1_binomial_string(const NumPoly1& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string body;
    if (i > 0)
      body = "C(t+" + std::to_string(i) + "," + std::to_string(i) + ")";
    append_signed(os, first, Rat(c), body);
  }
  return os.str();
}

namespace {

long int_to_long(const Int& v, const char* where) {
  if (!v.fits_slong_p())
    throw InternalCheckError(std::string(where) + ": coefficient overflows JSON integer");
  return v.get_si();
}

nlohmann::ordered_json mat_to_json_strings(const RatMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json numpoly2_to_json(const NumPoly2& p) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json binom = nlohmann::ordered_json::array();
  for (const auto& row : p.coeffs()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(int_to_long(c, "numpoly2_to_json"));
    binom.push_back(std::move(r));
  }
  j["binomial"] = std::move(binom);
  j["monomial"] = mat_to_json_strings(p.to_monomial());
  return j;
}

nlohmann::ordered_json numpoly1_to_json(const NumPoly1& p) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json binom = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) binom.push_back(int_to_long(c, "numpoly1_to_json"));
  j["binomial"] = std::move(binom);
  nlohmann::ordered_json mono = nlohmann::ordered_json::array();
  for (const auto& c : p.to_monomial()) mono.push_back(c.get_str());
  j["monomial"] = std::move(mono);
  return j;
}

NumPoly2 numpoly2_from_json(const nlohmann::ordered_json& j) {
  std::vector<std::vector<Int>> a;
  for (const auto& row : j.at("binomial")) {
    std::vector<Int> r;
    for (const auto& v : row) r.emplace_back(v.get<long>());
    a.push_back(std::move(r));
  }
  return NumPoly2(std::move(a));
}

NumPoly1 numpoly1_from_json(const nlohmann::ordered_json& j) {
  std::vector<Int> c;
  for (const auto& v : j.at("binomial")) c.emplace_back(v.get<long>());
  return NumPoly1(std::move(c));
}

std::string render_report_text(const CharPolyReport& rep) {
  std::ostringstream os;
  os << "characteristic polynomial (n=" << rep.n << ", m=" << rep.m << ")\n";
  os << "phi = " << numpoly2_monomial_string(rep.phi) << "\n";
  os << "  binomial basis: " << numpoly2_binomial_string(rep.phi) << "\n";
  os << "omega = " << numpoly2_monomial_string(rep.omega) << "\n";
  os << "  binomial basis: " << numpoly2_binomial_string(rep.omega) << "\n";
  os << "omega_bar = " << numpoly2_monomial_string(rep.omega_bar) << "\n";
  os << "  binomial basis: " << numpoly2_binomial_string(rep.omega_bar) << "\n";
  if (rep.psi) {
    os << "psi = " << numpoly1_monomial_string(*rep.psi) << "\n";
    os << "  binomial basis: " << numpoly1_binomial_string(*rep.psi) << "\n";
  }
  const auto& inv = rep.invariants;
  os << "invariants:\n";
  if (inv.zero) {
    os << "  phi = 0 (zero module)\n";
  } else {
    os << "  d = " << inv.total_degree << "\n";
    os << "  a_nn = " << inv.a_nn.get_str() << "\n";
    os << "  mu = (" << inv.mu.first << "," << inv.mu.second
       << "), a_mu = " << inv.a_mu.get_str() << "\n";
    os << "  nu = (" << inv.nu.first << "," << inv.nu.second
       << "), a_nu = " << inv.a_nu.get_str() << "\n";
    os << "  top coefficients:";
    for (const auto& [i, j, c] : inv.top_degree_coeffs)
      os << " a_{" << i << "," << j << "} = " << c.get_str();
    os << "\n";
    os << "  bernstein class member: "
       << (inv.bernstein_class_member ? "yes" : "no") << "\n";
  }
  os << "basis (xd_gb, " << rep.basis_summary.size() << " element"
     << (rep.basis_summary.size() == 1 ? "" : "s") << "):\n";
  int k = 0;
  for (const auto& li : rep.basis_summary) {
    ExtendedTerm rh{li.u, li.v.ordd - li.u.ordd};
    os << "  [" << ++k << "] " << element_to_string(li.element) << "\n";
    os << "      u = " << term_to_string(li.u, rep.n)
       << " ; v = " << term_to_string(li.v, rep.n)
       << " ; rho = " << extended_term_to_string(rh, rep.n) << "\n";
  }
  if (rep.stability_point) {
    os << "stability point: (" << rep.stability_point->first << ","
       << rep.stability_point->second << ")\n";
  } else {
    os << "stability point: not reached in the checked window\n";
  }
  return os.str();
}

nlohmann::ordered_json report_to_json(const CharPolyReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["phi"] = numpoly2_to_json(rep.phi);
  j["omega"] = numpoly2_to_json(rep.omega);
  j["omega_bar"] = numpoly2_to_json(rep.omega_bar);
  j["psi"] = rep.psi ? numpoly1_to_json(*rep.psi) : nlohmann::ordered_json();
  nlohmann::ordered_json inv;
  inv["zero"] = rep.invariants.zero;
  inv["d"] = rep.invariants.total_degree;
  inv["a_nn"] = int_to_long(rep.invariants.a_nn, "report_to_json");
  inv["mu"] = {rep.invariants.mu.first, rep.invariants.mu.second};
  inv["nu"] = {rep.invariants.nu.first, rep.invariants.nu.second};
  inv["a_mu"] = int_to_long(rep.invariants.a_mu, "report_to_json");
  inv["a_nu"] = int_to_long(rep.invariants.a_nu, "report_to_json");
  nlohmann::ordered_json top = nlohmann::ordered_json::array();
  for (const auto& [i, jx, c] : rep.invariants.top_degree_coeffs)
    top.push_back({i, jx, int_to_long(c, "report_to_json")});
  inv["top_coeffs"] = std::move(top);
  inv["bernstein_class"] = rep.invariants.bernstein_class_member;
  j["invariants"] = std::move(inv);
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& li : rep.basis_summary) {
    nlohmann::ordered_json e;
    e["element"] = element_to_string(li.element);
    e["u"] = term_to_string(li.u, rep.n);
    e["v"] = term_to_string(li.v, rep.n);
    basis.push_back(std::move(e));
  }
  j["basis"] = std::move(basis);
  if (rep.stability_point) {
    j["stability_point"] = {rep.stability_point->first,
                            rep.stability_point->second};
  } else {
    j["stability_point"] = nullptr;
  }
  return j;
}

std::string render_report_json(const CharPolyReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

}  // namespace weyldim
