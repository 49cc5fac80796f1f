#include "gca/chern.hpp"

#include <stdexcept>

namespace gca::chern {

void CompleteIntersection::validate() const {
  if (d < 0) throw std::invalid_argument("dimension must be >= 0");
  if (r < 1) throw std::invalid_argument("codimension must be >= 1");
  if (static_cast<int>(degrees.size()) != r) throw std::invalid_argument("need one degree per hypersurface");
  for (long dj : degrees)
    if (dj < 1) throw std::invalid_argument("degrees must be >= 1");
}

long canonical_degree(const CompleteIntersection& ci) {
  ci.validate();
  long s = 0;
  for (long dj : ci.degrees) s += dj;
  return s - ci.d - ci.r - 1;
}

bool is_calabi_yau(const CompleteIntersection& ci) { return canonical_degree(ci) == 0; }

Rational chern_character_coeff(const CompleteIntersection& ci, int n) {
  ci.validate();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  ratlin::Integer num = ci.d + ci.r + 1, fact = 1;
  for (long dj : ci.degrees) {
    ratlin::Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(dj), static_cast<unsigned long>(n));
    num -= p;
  }
  for (int k = 2; k <= n; ++k) fact *= k;
  Rational q(num, fact);
  q.canonicalize();
  return q;
}

bool chern_action_nontrivial(const CompleteIntersection& ci, int n, int q) {
  if (!is_calabi_yau(ci)) throw std::invalid_argument("the criterion needs a Calabi-Yau complete intersection");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
  if (q < 0) throw std::invalid_argument("q must be >= 0");
  return chern_character_coeff(ci, n) != 0 && n + q <= ci.d;
}

ChernTable chern_table(const CompleteIntersection& ci, int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  ChernTable t;
  t.ci = ci;
  t.canonical_degree = canonical_degree(ci);
  t.calabi_yau = t.canonical_degree == 0;
  for (int n = 1; n <= max_n; ++n) t.ch.push_back(chern_character_coeff(ci, n));
  if (t.calabi_yau)
    for (int n = 3; n <= max_n; n += 2)
      for (int q = 0; q <= ci.d; ++q) t.grid.push_back({n, q, chern_action_nontrivial(ci, n, q)});
  return t;
}

bool admissible_genus(const Series& f) {
  if (f.cutoff() < 2) throw std::invalid_argument("cutoff must be >= 2");
  if (f[0] != 1) throw std::invalid_argument("constant term must be 1");
  Series lf = symalg::series_log(f);
  Series lq = symalg::series_log(symalg::q_series(f.cutoff()));
  for (int k = 0; k <= f.cutoff(); k += 2)
    if (lf[k] != lq[k]) return false;
  return true;
}

bool verify_q_relation(const Series& q, const Series& q_tilde) {
  Series lhs = symalg::series_log(q);
  Series lt = symalg::series_log(q_tilde);
  Series rhs = lt + lt.reflect();
  rhs *= Rational(1, 2);
  return lhs == rhs.truncate(lhs.cutoff());
}

bool verify_q_relation(int cutoff) {
  if (cutoff < 0 || cutoff > 20) throw std::invalid_argument("cutoff must be in 0..20");
  return verify_q_relation(symalg::q_series(cutoff), symalg::q_tilde_series(cutoff));
}

}  // namespace gca::chern
