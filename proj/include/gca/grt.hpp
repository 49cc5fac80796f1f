#pragma once

#include "gca/lie.hpp"
#include "gca/ratlin.hpp"

#include <map>
#include <string>
#include <vector>

namespace gca::grt {

using lie::LieElement;
using lie::Word;
using ratlin::Rational;

const std::vector<std::string>& xy_alphabet();  // {"x", "y"}
LieElement x(int cap);
LieElement y(int cap);
LieElement sigma3(int cap = 3);  // [x,[x,y]] - [y,[y,x]]

// Graded pieces of t_n = free Lie on t^{ij} modulo the ideal of the relations, degrees 1..cap.
class TnQuotient {
 public:
  TnQuotient(int n, int cap);  // n in {3, 4}, cap <= 5

  int n() const { return n_; }
  int cap() const { return cap_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  LieElement t(int i, int j) const;  // t^{ij} = t^{ji}
  std::vector<LieElement> relations() const;

  std::size_t free_dimension(int degree) const;
  std::size_t dimension(int degree) const;
  std::vector<Word> quotient_basis(int degree) const;  // Lyndon words not hit by a pivot
  // exact remainder of each graded piece, keyed by the basis word
  std::map<Word, Rational> coordinates(const LieElement& e) const;
  bool is_zero(const LieElement& e) const { return coordinates(e).empty(); }

 private:
  struct Piece {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    ratlin::Echelon ideal;
    std::vector<LieElement> spanning;  // independent ideal elements
  };
  int n_, cap_;
  std::vector<std::string> alphabet_;
  std::vector<Piece> pieces_;  // pieces_[d], d = 0..cap
  ratlin::SparseVector vectorize(const LieElement& e, int degree) const;
};

// Residuals of the three defining equations; zero iff the equation holds.
LieElement antisymmetry_residual(const LieElement& s);
LieElement hexagon_residual(const LieElement& s);
LieElement pentagon_residual(const LieElement& s, const TnQuotient& t4);  // in the free algebra on t^{ij}

bool pentagon_check(const LieElement& s, int degree_cap);  // s homogeneous, degree <= cap <= 4

struct GrtCheck {
  bool antisymmetry = false;
  bool hexagon = false;
  bool pentagon = false;
  bool ok() const { return antisymmetry && hexagon && pentagon; }
};
GrtCheck verify(const LieElement& s, int degree_cap = 4);

// Homogeneous solutions of the three equations in one degree (<= 4), primitive integral.
std::vector<LieElement> solution_space(int degree);

LieElement derivation_delta(const LieElement& s, const LieElement& f);  // x -> 0, y -> [y, s]
LieElement ihara_bracket(const LieElement& s1, const LieElement& s2);

// y-degree one part is ad_x^{n-1}(y) and nothing has y-degree zero
bool dd_shape(const LieElement& s, int n);

}  // namespace gca::grt
