#pragma once

#include "gca/gra_operad.hpp"
#include "gca/ratlin.hpp"

#include <string>
#include <vector>

namespace gca::gc {

using graph::Graph;
using graph::GraVector;
using ratlin::Rational;
using ratlin::SparseMatrix;

struct BasisOptions {
  bool gc_filter = false;
  bool allow_tadpoles = false;
  int max_arity = 7;
};

// Basis of Gra(n)^{S_n} in degree d: one symmetrized vector per isomorphism class
// without odd automorphisms.
struct BasisWindow {
  int arity = 0;
  int degree = 0;
  BasisOptions options;
  std::vector<Graph> representatives;  // canonical isomorphism-class representatives

  std::size_t size() const { return representatives.size(); }
  GraVector vector(std::size_t i) const;  // symmetrized basis vector
  int index_of(const Graph& iso_canonical_rep) const;  // -1 if absent
};

BasisWindow enumerate_basis(int n, int d, const BasisOptions& opts = {});

// Coordinates of Sym(y) in the window, for an arbitrary (not necessarily symmetric) y.
// Throws if Sym(y) has components outside the window.
ratlin::Vector symmetrized_coordinates(const BasisWindow& w, const GraVector& y);
// Coordinates of an S_n-invariant vector x (as a sum of labeled terms).
ratlin::Vector coordinates(const BasisWindow& w, const GraVector& x);

// Sum over isomorphism classes: returns sum_b c_b r_b (canonical representatives, classes with
// odd automorphisms dropped) with Sym(result) = Sym(y).
GraVector class_reduce(const GraVector& y);
// The differential in class-reduced form: class_reduce(sum_b c_b seed(r_b)).
GraVector class_differential(const GraVector& reduced);

SparseMatrix differential_matrix(const BasisWindow& src, const BasisWindow& dst);

struct CohomologyReport {
  int arity = 0;
  int degree = 0;
  std::size_t basis_size = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::size_t cohomology_dim = 0;
};

CohomologyReport cohomology(int n, int d, const BasisOptions& opts = {});
std::size_t cohomology_dim(int n, int d, const BasisOptions& opts = {});
std::string to_json(const CohomologyReport& r);

struct CocycleReport {
  bool cocycle = false;
  bool exact = false;
  bool zero = false;  // the symmetrized graph vanishes
};

// Is Sym(g) closed, and is it a coboundary within its (n, d) window?
CocycleReport classify_cocycle(const Graph& g, const BasisOptions& opts = {});

int worker_threads();  // from GCA_THREADS, default 1

}  // namespace gca::gc
