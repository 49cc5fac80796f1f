#pragma once

#include "gca/ratlin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gca::lie {

using ratlin::Rational;
using Word = std::vector<int>;  // letter indices into the alphabet
using AssocPoly = std::map<Word, Rational>;

bool is_lyndon(const Word& w);
std::vector<Word> lyndon_words(int letters, int length);  // lexicographic
// w = uv with v the longest proper Lyndon suffix
std::pair<Word, Word> standard_factorization(const Word& w);

// Free associative helpers; the embedding oracle for Lie computations.
AssocPoly expand(const Word& lyndon);  // standard bracketing, commutators expanded
AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b, int cap);
AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b, int cap);
void assoc_add(AssocPoly& a, const AssocPoly& b, const Rational& c = 1);

// Truncated free Lie algebra element in the Lyndon basis.
class LieElement {
 public:
  LieElement() = default;
  LieElement(std::vector<std::string> alphabet, int cap);

  static LieElement generator(const std::vector<std::string>& alphabet, int cap, int letter);
  static LieElement generator(const std::vector<std::string>& alphabet, int cap, const std::string& name);
  static LieElement basis(const std::vector<std::string>& alphabet, int cap, const Word& lyndon);
  // throws if the polynomial is not a Lie element
  static LieElement from_assoc(const std::vector<std::string>& alphabet, int cap, const AssocPoly& p);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int cap() const { return cap_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int letter(const std::string& name) const;

  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;
  LieElement degree_part(int k) const;
  LieElement letter_count_part(int letter, int count) const;  // words with exactly count copies
  bool is_homogeneous(int& degree) const;
  LieElement with_cap(int cap) const;  // throws if a term is above the new cap
  AssocPoly to_assoc() const;
  std::string render() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  LieElement operator-() const;
  bool operator==(const LieElement& o) const { return alphabet_ == o.alphabet_ && terms_ == o.terms_; }
  bool operator!=(const LieElement& o) const { return !(*this == o); }

 private:
  std::vector<std::string> alphabet_;
  int cap_ = 0;
  std::map<Word, Rational> terms_;
};

LieElement operator+(LieElement a, const LieElement& b);
LieElement operator-(LieElement a, const LieElement& b);
LieElement operator*(const Rational& c, LieElement a);

// throws std::overflow_error when a nonzero term would exceed the cap
LieElement bracket(const LieElement& a, const LieElement& b);
LieElement ad_power(const LieElement& x, const LieElement& y, int k);  // ad_x^k (y)

// The Lie homomorphism sending letter k to images[k]; images share one target alphabet.
LieElement substitute(const LieElement& a, const std::vector<LieElement>& images);

// Derivation of the free algebra fixed by its values on the letters.
LieElement apply_derivation(const LieElement& a, const std::vector<LieElement>& letter_images);

// Text form: names, rationals, + - *, brackets [a, b], parentheses.
LieElement parse(const std::string& text, const std::vector<std::string>& alphabet, int cap);

}  // namespace gca::lie
