#ifndef WEYLDIM_ORACLE_HPP
#define WEYLDIM_ORACLE_HPP

#include <map>
#include <vector>

#include "weyldim/groebner.hpp"

namespace weyldim {

struct DimGrid {
  int n = 0;
  int m = 0;
  int r_max = 0;
  int s_max = 0;
  // entries[r][s] = dim_K M_rs
  std::vector<std::vector<long>> entries;

  long at(int r, int s) const {
    return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
  }
};

// Brute-force dim_K M_rs: rank over Q of the single-order normal forms of
// all theta e_i with theta in Theta(r, s). Exact for every (r, s), no
// asymptotics involved. G_single must carry a delta_gb or bernstein_gb
// certificate (or be empty for the free module).
long dim_M_rs(const std::vector<ModuleElement>& gens,
              const GroebnerBasis& g_single, int r, int s);

DimGrid dim_grid(const std::vector<ModuleElement>& gens,
                 const GroebnerBasis& g_single, int r_max, int s_max);

// Reusable variant caching normal forms across grid cells.
class DimOracle {
 public:
  DimOracle(int n, int m, const GroebnerBasis& g_single);

  long dim(int r, int s);
  DimGrid grid(int r_max, int s_max);

 private:
  using Row = std::map<Term, Int, TermXLess>;

  const ModuleElement& nf_of(const Term& t);
  Row integer_row(const ModuleElement& f) const;

  // fraction-free incremental echelon; returns rank gained (0 or 1)
  struct Echelon {
    std::map<Term, Row, TermXLess> pivots;  // pivot term -> reduced row
    int rank = 0;
    bool insert(Row row);
  };

  int n_;
  int m_;
  std::vector<ModuleElement> basis_;
  std::vector<Term> basis_leaders_;
  TermOrder order_;
  std::map<Term, ModuleElement, TermXLess> nf_cache_;
};

}  // namespace weyldim

#endif
