#include "gca/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gca::symalg {

Series::Series(int cutoff, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
  c_.resize(cutoff + 1);
}

Series Series::constant(int cutoff, const Rational& c) {
  Series s(cutoff);
  s.c_[0] = c;
  return s;
}

Series Series::variable(int cutoff) {
  Series s(cutoff);
  if (cutoff >= 1) s.c_[1] = 1;
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.cutoff() < cutoff()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.cutoff() < cutoff()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Series Series::truncate(int cutoff) const {
  if (cutoff > this->cutoff()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(cutoff, std::vector<Rational>(c_.begin(), c_.begin() + cutoff + 1));
}

Series Series::reflect() const {
  Series r = *this;
  for (std::size_t k = 1; k < c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

Series Series::even_part() const {
  Series r = *this;
  for (std::size_t k = 1; k < c_.size(); k += 2) r.c_[k] = 0;
  return r;
}

Series Series::odd_part() const {
  Series r = *this;
  for (std::size_t k = 0; k < c_.size(); k += 2) r.c_[k] = 0;
  return r;
}

Series Series::shift_down(int k) const {
  if (k > cutoff()) throw std::invalid_argument("shift exceeds cutoff");
  for (int j = 0; j < k; ++j)
    if (c_[j] != 0) throw std::domain_error("series not divisible by t^k");
  return Series(cutoff() - k, std::vector<Rational>(c_.begin() + k, c_.end()));
}

std::string Series::render() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= cutoff(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = abs(c_[k]);
    os << (first ? (c_[k] < 0 ? "-" : "") : (c_[k] < 0 ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(t^" << cutoff() + 1 << ")";
  return os.str();
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(const Rational& c, Series a) { return a *= c; }

Series operator*(const Series& a, const Series& b) {
  int m = std::min(a.cutoff(), b.cutoff());
  Series r(m);
  for (int i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& s) {
  if (s[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  int m = s.cutoff();
  Series r(m);
  r[0] = 1 / s[0];
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r[n] = -acc / s[0];
  }
  return r;
}

Series series_exp(const Series& s) {
  if (s[0] != 0) throw std::domain_error("series exp needs a zero constant term");
  int m = s.cutoff();
  Series e(m);
  e[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += k * s[k] * e[n - k];
    e[n] = acc / n;
  }
  return e;
}

Series series_log(const Series& s) {
  if (s[0] != 1) throw std::domain_error("series log needs constant term 1");
  int m = s.cutoff();
  Series l(m);
  // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
  for (int n = 1; n <= m; ++n) {
    Rational acc = n * s[n];
    for (int k = 1; k < n; ++k) acc -= k * l[k] * s[n - k];
    l[n] = acc / n;
  }
  return l;
}

Series series_sqrt(const Series& s) {
  if (s[0] != 1) throw std::domain_error("series sqrt needs constant term 1");
  int m = s.cutoff();
  Series r(m);
  r[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc = s[n];
    for (int k = 1; k < n; ++k) acc -= r[k] * r[n - k];
    r[n] = acc / 2;
  }
  return r;
}

Series series_pow(const Series& s, const Rational& e) {
  Series l = series_log(s);
  l *= e;
  return series_exp(l);
}

Series series_compose(const Series& s, const Series& g) {
  if (g[0] != 0) throw std::domain_error("series compose needs g(0) = 0");
  int m = std::min(s.cutoff(), g.cutoff());
  Series r(m);
  Series power = Series::constant(m, 1);
  for (int k = 0; k <= m; ++k) {
    if (s[k] != 0)
      for (int j = 0; j <= m; ++j) r[j] += s[k] * power[j];
    power = power * g.truncate(m);
  }
  return r;
}

Series exp_linear(int cutoff, const Rational& a) {
  Series r(cutoff);
  Rational term = 1;
  for (int k = 0; k <= cutoff; ++k) {
    r[k] = term;
    term = term * a / (k + 1);
  }
  return r;
}

Series q_series(int cutoff) {
  // (e^{t/2} - e^{-t/2})/t = sum_k (1/2)^{2k} t^{2k}/(2k+1)!
  int m = cutoff + 1;
  Series den = exp_linear(m, Rational(1, 2)) - exp_linear(m, Rational(-1, 2));
  Series ratio = series_inverse(den.shift_down(1));
  return series_sqrt(ratio);
}

Series q_tilde_series(int cutoff) {
  int m = cutoff + 1;
  Series den = Series::constant(m, 1) - exp_linear(m, -1);
  Series ratio = series_inverse(den.shift_down(1));
  return series_sqrt(ratio);
}

}  // namespace gca::symalg
