#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gca::ratlin {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

using Vector = std::vector<Rational>;
using SparseVector = std::map<std::size_t, Rational>;

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  const SparseVector& row(std::size_t r) const { return data_[r]; }
  const std::vector<SparseVector>& row_data() const { return data_; }

  SparseMatrix transpose() const;
  Vector apply(const Vector& v) const;
  SparseMatrix multiply(const SparseMatrix& other) const;
  SparseMatrix append_column(const Vector& v) const;
  bool is_zero() const { return nonzeros() == 0; }

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<Vector>& rows);
  std::vector<Vector> to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

std::size_t rank(const SparseMatrix& m);
std::vector<Vector> kernel_basis(const SparseMatrix& m);
bool in_image(const SparseMatrix& m, const Vector& v);

// Incremental row echelon form over Q; rows kept primitive over Z.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }

  SparseVector reduce(SparseVector v) const;     // up to a nonzero scalar
  SparseVector remainder(SparseVector v) const;  // exact: v minus an element of the span
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool insert(const SparseVector& v);

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> pivots_;
};

SparseVector to_sparse(const Vector& v);
SparseVector primitive(SparseVector v);  // integral, coprime, positive leading entry
Vector to_dense(const SparseVector& v, std::size_t dim);

}  // namespace gca::ratlin
