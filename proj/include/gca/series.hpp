#pragma once

#include "gca/ratlin.hpp"

#include <string>
#include <vector>

namespace gca::symalg {

using ratlin::Rational;

// Truncated univariate power series c_0 + c_1 t + ... + c_M t^M.
class Series {
 public:
  explicit Series(int cutoff = 0) : c_(cutoff + 1) {}
  Series(int cutoff, std::vector<Rational> coeffs);

  static Series constant(int cutoff, const Rational& c);
  static Series variable(int cutoff);  // t

  int cutoff() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(k); }
  Rational& operator[](int k) { return c_.at(k); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);
  bool operator==(const Series& o) const { return c_ == o.c_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series truncate(int cutoff) const;
  Series reflect() const;     // s(-t)
  Series even_part() const;
  Series odd_part() const;
  Series shift_down(int k) const;  // divide by t^k; requires leading zeros, keeps cutoff - k

  std::string render() const;

 private:
  std::vector<Rational> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, Series a);

Series series_inverse(const Series& s);
Series series_exp(const Series& s);
Series series_log(const Series& s);
Series series_sqrt(const Series& s);
Series series_pow(const Series& s, const Rational& e);
Series series_compose(const Series& s, const Series& g);

// e^{a t} truncated, for rational a
Series exp_linear(int cutoff, const Rational& a);

// q(t) = (t/(e^{t/2} - e^{-t/2}))^{1/2}
Series q_series(int cutoff);
// q~(t) = (t/(1 - e^{-t}))^{1/2}
Series q_tilde_series(int cutoff);

}  // namespace gca::symalg
