#pragma once

#include "gca/ratlin.hpp"
#include "gca/series.hpp"

#include <vector>

namespace gca::chern {

using ratlin::Rational;
using symalg::Series;

// X = Y_1 cap ... cap Y_r in P^{d+r}, deg Y_j = degrees[j]
struct CompleteIntersection {
  int d = 0;
  int r = 0;
  std::vector<long> degrees;
  void validate() const;  // throws unless r >= 1, one degree per hypersurface, all >= 1
};

long canonical_degree(const CompleteIntersection& ci);  // sum d_j - d - r - 1
bool is_calabi_yau(const CompleteIntersection& ci);
Rational chern_character_coeff(const CompleteIntersection& ci, int n);  // (d+r+1 - sum d_j^n)/n!
// CY only; n odd >= 3, q >= 0
bool chern_action_nontrivial(const CompleteIntersection& ci, int n, int q);

struct GridCell {
  int n = 0;
  int q = 0;
  bool nontrivial = false;
};
struct ChernTable {
  CompleteIntersection ci;
  long canonical_degree = 0;
  bool calabi_yau = false;
  std::vector<Rational> ch;  // ch[n-1] for n = 1..max_n
  std::vector<GridCell> grid;  // odd n in 3..max_n, q in 0..d; empty unless CY
};
ChernTable chern_table(const CompleteIntersection& ci, int max_n);

// even coefficients of log f agree with those of log q up to the cutoff of f
bool admissible_genus(const Series& f);

// log q(t) = (log q~(t) + log q~(-t))/2 coefficientwise
bool verify_q_relation(const Series& q, const Series& q_tilde);
bool verify_q_relation(int cutoff);  // cutoff <= 20

}  // namespace gca::chern
