#pragma once

#include "gca/ratlin.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gca::symalg {

using ratlin::Rational;

enum class Parity { Even, Odd };

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  int degree = 0;
  int weight = 0;
  int slot = -1;  // bit position for odd generators
};

inline constexpr int kMaxOdd = 256;
inline constexpr int kNoCutoff = 1 << 28;

class GeneratorTable {
 public:
  explicit GeneratorTable(int cutoff = kNoCutoff) : cutoff_(cutoff) {}

  int add(const std::string& name, Parity parity, int degree = 0, int weight = 0);
  int add_even(const std::string& name, int weight = 0) { return add(name, Parity::Even, 0, weight); }
  int add_odd(const std::string& name, int degree = 1, int weight = 0) {
    return add(name, Parity::Odd, degree, weight);
  }

  int find(const std::string& name) const;  // -1 if absent
  int id(const std::string& name) const;    // throws if absent
  const Generator& gen(int id) const { return gens_.at(id); }
  int size() const { return static_cast<int>(gens_.size()); }
  int odd_count() const { return static_cast<int>(odd_ids_.size()); }
  int odd_id(int slot) const { return odd_ids_.at(slot); }
  int cutoff() const { return cutoff_; }

 private:
  int cutoff_;
  std::vector<Generator> gens_;
  std::vector<int> odd_ids_;
  std::unordered_map<std::string, int> index_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

struct Monomial {
  int weight = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even;  // (generator id, exponent), sorted
  std::array<std::uint64_t, kMaxOdd / 64> odd{};               // bitset over odd slots

  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const {
    return even == o.even && odd == o.odd;
  }
  int odd_count() const;
  bool parity() const { return odd_count() & 1; }
  bool has_odd(int slot) const { return (odd[slot >> 6] >> (slot & 63)) & 1u; }
  std::uint32_t exponent(std::uint32_t id) const;
};

// Koszul sign of the product m1*m2 (0 if an odd generator repeats), and the product itself.
int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

class SuperElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  SuperElement() = default;
  explicit SuperElement(TablePtr table) : table_(std::move(table)) {}

  static SuperElement constant(TablePtr table, const Rational& c);
  // sums repeated monomials, drops zeros and terms above the cutoff
  static SuperElement from_terms(TablePtr table, std::vector<std::pair<Monomial, Rational>> terms);
  static SuperElement generator(TablePtr table, int id);
  static SuperElement generator(TablePtr table, const std::string& name);

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const Rational& c);
  SuperElement operator-() const;

  // parts and gradings
  SuperElement parity_part(bool odd) const;
  SuperElement weight_part(int w) const;
  SuperElement truncate(int max_weight) const;
  SuperElement filter(const std::function<bool(const Monomial&)>& keep) const;
  int max_weight() const;     // -1 for zero
  bool is_homogeneous_parity(bool& odd) const;

  bool operator==(const SuperElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const SuperElement& o) const { return !(*this == o); }

  std::string render() const;

 private:
  TablePtr table_;
  Terms terms_;
};

SuperElement operator+(SuperElement a, const SuperElement& b);
SuperElement operator-(SuperElement a, const SuperElement& b);
SuperElement operator*(const SuperElement& a, const SuperElement& b);
SuperElement operator*(const Rational& c, SuperElement a);

SuperElement mul(const SuperElement& a, const SuperElement& b);
SuperElement derive(const SuperElement& a, int id);
SuperElement derive(const SuperElement& a, const std::string& name);
SuperElement substitute(const SuperElement& a, const std::map<int, SuperElement>& images);
// Express an element over another table containing all generators with nonzero exponents.
SuperElement transfer(const SuperElement& a, const TablePtr& target);

// Text grammar:  element := '0' | term (('+'|'-') term)*
//                term    := [coef '*'] factor ('*' factor)* | coef
//                coef    := integer ['/' integer]
//                factor  := name ['^' integer]
// Odd factors are written in table order; an input may list them in any order (the
// Koszul sign of the reordering is applied).
SuperElement parse(const TablePtr& table, const std::string& text);

void require_same_table(const SuperElement& a, const SuperElement& b);

// Tensor of type (p,q) with components indexed by upper and lower index tuples (1-based).
class TensorElement {
 public:
  using Index = std::pair<std::vector<int>, std::vector<int>>;

  TensorElement() = default;
  TensorElement(TablePtr table, int d, int p, int q) : table_(std::move(table)), d_(d), p_(p), q_(q) {}

  int dim() const { return d_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const TablePtr& table() const { return table_; }

  SuperElement get(const Index& idx) const;
  void set(const Index& idx, const SuperElement& v);
  void add(const Index& idx, const SuperElement& v);
  const std::map<Index, SuperElement>& components() const { return comps_; }
  std::vector<Index> all_indices() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  bool is_zero() const { return comps_.empty(); }
  bool operator==(const TensorElement& o) const;
  TensorElement truncate(int max_weight) const;

 private:
  void check(const Index& idx) const;
  TablePtr table_;
  int d_ = 0, p_ = 0, q_ = 0;
  std::map<Index, SuperElement> comps_;
};

}  // namespace gca::symalg
