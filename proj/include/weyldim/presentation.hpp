#ifndef WEYLDIM_PRESENTATION_HPP
#define WEYLDIM_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "weyldim/dimpoly.hpp"
#include "weyldim/terms.hpp"

#include "json.hpp"

namespace weyldim {

struct Presentation {
  int n = 1;
  int m = 1;
  std::vector<ModuleElement> relations;
  std::vector<std::string> labels;
};

// Line grammar:
//   weyl n=<int>
//   module rank=<int>
//   rel <sum>            (zero or more)
// <sum> is [+|-] [coef *] factor... joined by + or -, coef an integer or p/q,
// factors x<i>[^<k>], d<i>[^<k>], e<i> (x/d index optional when n = 1),
// exactly one e<i> per term. '#' starts a comment.
Presentation parse_presentation(std::string_view source);

std::string render_presentation(const Presentation& p);

std::string term_to_string(const Term& t, int n);
std::string element_to_string(const ModuleElement& f);
std::string weyl_element_to_string(const WeylElement& d);
std::string extended_term_to_string(const ExtendedTerm& e, int n);

std::string numpoly1_monomial_string(const NumPoly1& p);
std::string numpoly1_binomial_string(const NumPoly1& p);
std::string numpoly2_monomial_string(const NumPoly2& p);
std::string numpoly2_binomial_string(const NumPoly2& p);

std::string render_report_text(const CharPolyReport& rep);
nlohmann::ordered_json report_to_json(const CharPolyReport& rep);
std::string render_report_json(const CharPolyReport& rep);

nlohmann::ordered_json numpoly2_to_json(const NumPoly2& p);
nlohmann::ordered_json numpoly1_to_json(const NumPoly1& p);
NumPoly2 numpoly2_from_json(const nlohmann::ordered_json& j);
NumPoly1 numpoly1_from_json(const nlohmann::ordered_json& j);

}  // namespace weyldim

#endif
