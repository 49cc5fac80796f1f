#include "gca/ratlin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gca::ratlin {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0) return;
  auto [it, fresh] = data_[r].try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : other.data_[k]) out.add(r, c, a * b);
  return out;
}

SparseMatrix SparseMatrix::append_column(const Vector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("dimension mismatch");
  SparseMatrix out(rows_, cols_ + 1);
  out.data_ = data_;
  for (std::size_t r = 0; r < rows_; ++r)
    if (v[r] != 0) out.data_[r][cols_] = v[r];
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

namespace {

// Scale to a primitive integer vector with positive leading entry.
void make_primitive(SparseVector& v) {
  if (v.empty()) return;
  Integer l = 1;
  for (const auto& [c, x] : v) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& [c, x] : v) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (v.begin()->second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : v) x /= g;
}

// v := p*v - a*w, where p, a are the leading-column entries of w and v.
void eliminate(SparseVector& v, const SparseVector& w) {
  std::size_t col = w.begin()->first;
  auto it = v.find(col);
  if (it == v.end()) return;
  Rational p = w.begin()->second;
  Rational a = it->second;
  if (p != 1)
    for (auto& [c, x] : v) x *= p;
  for (const auto& [c, y] : w) {
    auto [jt, fresh] = v.try_emplace(c, -a * y);
    if (!fresh) {
      jt->second -= a * y;
      if (jt->second == 0) v.erase(jt);
    }
  }
}

}  // namespace

SparseVector primitive(SparseVector v) {
  make_primitive(v);
  return v;
}

SparseVector Echelon::reduce(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    auto pv = pivots_.find(it->first);
    if (pv == pivots_.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    eliminate(v, pv->second);
    make_primitive(v);
    it = v.upper_bound(col);
  }
  return v;
}

SparseVector Echelon::remainder(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    auto pv = pivots_.find(it->first);
    if (pv == pivots_.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    Rational a = it->second / pv->second.begin()->second;
    for (const auto& [c, y] : pv->second) {
      auto [jt, fresh] = v.try_emplace(c, -a * y);
      if (!fresh) {
        jt->second -= a * y;
        if (jt->second == 0) v.erase(jt);
      }
    }
    it = v.upper_bound(col);
  }
  return v;
}

bool Echelon::insert(const SparseVector& v) {
  SparseVector r = v;
  for (auto it = r.begin(); it != r.end();) {
    if (it->second == 0) it = r.erase(it);
    else ++it;
  }
  make_primitive(r);
  r = reduce(std::move(r));
  if (r.empty()) return false;
  // reduce leaves the leading column free of existing pivots
  std::size_t lead = r.begin()->first;
  pivots_.emplace(lead, std::move(r));
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });
  Echelon e(m.cols());
  for (std::size_t r : order)
    if (!m.row(r).empty()) e.insert(m.row(r));
  return e.rank();
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  // reduced row echelon form with rational arithmetic
  std::map<std::size_t, SparseVector> piv;
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector v = e.reduce(m.row(r));
    if (v.empty()) continue;
    e.insert(v);
    piv.emplace(v.begin()->first, v);
  }
  for (auto& [c, row] : piv) {
    Rational lead = row.begin()->second;
    for (auto& [k, x] : row) x /= lead;
  }
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const SparseVector& w = it->second;
    for (auto& [c, row] : piv) {
      if (c >= it->first) break;
      auto f = row.find(it->first);
      if (f == row.end()) continue;
      Rational a = f->second;
      for (const auto& [k, y] : w) {
        auto [jt, fresh] = row.try_emplace(k, -a * y);
        if (!fresh) {
          jt->second -= a * y;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (piv.count(f)) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (const auto& [c, row] : piv) {
      auto it = row.find(f);
      if (it != row.end()) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_image(const SparseMatrix& m, const Vector& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  return rank(m) == rank(m.append_column(v));
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace(i, v[i]);
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector d(dim);
  for (const auto& [i, x] : v) {
    if (i >= dim) throw std::out_of_range("sparse index");
    d[i] = x;
  }
  return d;
}

}  // namespace gca::ratlin
