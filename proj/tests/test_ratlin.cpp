#include <doctest.h>

#include "gca/ratlin.hpp"

#include <random>

using namespace gca::ratlin;

namespace {

// Plain dense Gauss-Jordan over Q, written independently of the library's elimination.
std::size_t dense_rank(std::vector<Vector> a) {
  std::size_t r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-4, 4), den(1, 3);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) < density) m.set(r, c, make_rational(v(rng), den(rng)));
  return m;
}

// rank-deficient: product of thin factors
SparseMatrix low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 0.7).multiply(random_matrix(rng, k, cols, 0.7));
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(SparseMatrix(3, 3)) == 0);
  CHECK(rank(SparseMatrix::identity(4)) == 4);
  CHECK(rank(SparseMatrix(0, 5)) == 0);
}

TEST_CASE("rational normal form") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("kernel of small matrices") {
  CHECK(kernel_basis(SparseMatrix::identity(2)).empty());
  SparseMatrix m(1, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("in_image trivial cases") {
  std::mt19937 rng(7);
  SparseMatrix m = random_matrix(rng, 4, 3, 0.5);
  CHECK(in_image(m, Vector(4)));
  CHECK(in_image(SparseMatrix::identity(3), Vector{1, -2, make_rational(1, 3)}));
  CHECK_THROWS_AS(in_image(m, Vector(3)), std::invalid_argument);
}

TEST_CASE("rank agrees with a dense elimination oracle") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    SparseMatrix m = (trial % 2) ? random_matrix(rng, rows, cols, 0.4)
                                 : low_rank(rng, rows, cols, 1 + rng() % 3);
    std::size_t r = rank(m);
    CHECK(r == dense_rank(m.to_dense()));
    CHECK(r == rank(m.transpose()));
  }
}

TEST_CASE("kernel basis dimension and re-multiplication") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
    SparseMatrix m = low_rank(rng, rows, cols, 1 + rng() % 4);
    auto k = kernel_basis(m);
    CHECK(k.size() + rank(m) == cols);
    for (const auto& v : k) {
      Vector mv = m.apply(v);
      for (const auto& x : mv) CHECK(x == 0);
    }
    // independence of the returned vectors
    SparseMatrix kb = SparseMatrix::from_dense(k.empty() ? std::vector<Vector>{} : k);
    CHECK(rank(kb) == k.size());
  }
}

TEST_CASE("images are in the image; generic vectors are not") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SparseMatrix m = low_rank(rng, 6, 5, 2);
    Vector w(5);
    for (auto& x : w) x = make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2);
    CHECK(in_image(m, m.apply(w)));
    Vector e(6);
    e[rng() % 6] = 1;
    CHECK(in_image(m, e) == (rank(m.append_column(e)) == rank(m)));
  }
}

TEST_CASE("echelon insertion and membership") {
  Echelon e(3);
  CHECK(e.insert({{0, 2}, {1, 4}}));
  CHECK_FALSE(e.insert({{0, -1}, {1, -2}}));
  CHECK(e.contains({{0, make_rational(1, 3)}, {1, make_rational(2, 3)}}));
  CHECK_FALSE(e.contains({{2, 1}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK(e.rank() == 2);
}
