#include "gca/graph_complex.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace gca::gc {

int worker_threads() {
  const char* env = std::getenv("GCA_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : std::min(n, 64);
}

GraVector BasisWindow::vector(std::size_t i) const {
  return graph::symmetrize(representatives.at(i));
}

int BasisWindow::index_of(const Graph& rep) const {
  auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
  if (it == representatives.end() || *it != rep) return -1;
  return static_cast<int>(it - representatives.begin());
}

BasisWindow enumerate_basis(int n, int d, const BasisOptions& opts) {
  if (n > opts.max_arity) throw std::invalid_argument("arity over limit");
  BasisWindow w;
  w.arity = n;
  w.degree = d;
  w.options = opts;
  int e = 2 * n - 2 - d;
  if (n < 1 || e < 0) return w;
  for (const Graph& g : graph::iso_classes(n, e, opts.allow_tadpoles)) {
    if (opts.gc_filter && !graph::passes_gc_filter(g)) continue;
    if (graph::iso_canonical(g).odd_automorphism) continue;
    w.representatives.push_back(g);
  }
  std::sort(w.representatives.begin(), w.representatives.end());
  return w;
}

ratlin::Vector symmetrized_coordinates(const BasisWindow& w, const GraVector& y) {
  ratlin::Vector c(w.size());
  std::map<Graph, Rational> outside;
  for (const auto& [h, coef] : y.terms()) {
    graph::IsoForm iso = graph::iso_canonical(h);
    if (iso.odd_automorphism) continue;
    Rational v = iso.sign > 0 ? coef : Rational(-coef);
    int idx = w.index_of(iso.graph);
    if (idx < 0)
      outside[iso.graph] += v;
    else
      c[idx] += v;
  }
  for (const auto& [g, v] : outside)
    if (v != 0)
      throw std::runtime_error("vector leaves the basis window at class [" + graph::to_text(g) + "]");
  return c;
}

ratlin::Vector coordinates(const BasisWindow& w, const GraVector& x) {
  ratlin::Vector c(w.size());
  for (std::size_t b = 0; b < w.size(); ++b) {
    Rational a = x.coefficient(w.representatives[b]);
    if (a == 0) continue;
    Rational aut = graph::symmetrize(w.representatives[b]).coefficient(w.representatives[b]);
    c[b] = a / aut;
  }
  GraVector rebuilt(w.arity);
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (c[b] == 0) continue;
    GraVector v = w.vector(b);
    v *= c[b];
    rebuilt += v;
  }
  if (rebuilt != x) throw std::runtime_error("vector is not in the span of the basis window");
  return c;
}

GraVector class_reduce(const GraVector& y) {
  GraVector out(y.arity());
  for (const auto& [h, coef] : y.terms()) {
    graph::IsoForm iso = graph::iso_canonical(h);
    if (iso.odd_automorphism) continue;
    out.add_canonical(iso.graph, iso.sign > 0 ? coef : Rational(-coef));
  }
  return out;
}

GraVector class_differential(const GraVector& reduced) {
  GraVector acc(reduced.arity() + 1);
  for (const auto& [r, c] : reduced.terms()) {
    GraVector s = gra::differential_seed(r);
    s *= c;
    acc += s;
  }
  return class_reduce(acc);
}

SparseMatrix differential_matrix(const BasisWindow& src, const BasisWindow& dst) {
  if (dst.arity != src.arity + 1 || dst.degree != src.degree + 1)
    throw std::invalid_argument("window mismatch");
  if (dst.options.gc_filter != src.options.gc_filter ||
      dst.options.allow_tadpoles != src.options.allow_tadpoles)
    throw std::invalid_argument("window filter mismatch");
  SparseMatrix m(dst.size(), src.size());
  std::vector<ratlin::Vector> cols(src.size());
  int threads = std::min<int>(worker_threads(), static_cast<int>(src.size()));
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t j = begin; j < src.size(); j += step)
      cols[j] = symmetrized_coordinates(dst, gra::differential_seed(src.representatives[j]));
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      if (cols[j][i] != 0) m.set(i, j, cols[j][i]);
  return m;
}

CohomologyReport cohomology(int n, int d, const BasisOptions& opts) {
  if (n + 1 > opts.max_arity) throw std::invalid_argument("arity over limit");
  CohomologyReport r;
  r.arity = n;
  r.degree = d;
  BasisWindow here = enumerate_basis(n, d, opts);
  BasisWindow next = enumerate_basis(n + 1, d + 1, opts);
  r.basis_size = here.size();
  std::size_t out_rank = ratlin::rank(differential_matrix(here, next));
  r.kernel_dim = here.size() - out_rank;
  if (n >= 2) {
    BasisWindow prev = enumerate_basis(n - 1, d - 1, opts);
    r.image_dim = ratlin::rank(differential_matrix(prev, here));
  }
  r.cohomology_dim = r.kernel_dim - r.image_dim;
  return r;
}

std::size_t cohomology_dim(int n, int d, const BasisOptions& opts) {
  return cohomology(n, d, opts).cohomology_dim;
}

std::string to_json(const CohomologyReport& r) {
  nlohmann::ordered_json j;
  j["arity"] = r.arity;
  j["degree"] = r.degree;
  j["basis_size"] = r.basis_size;
  j["kernel_dim"] = r.kernel_dim;
  j["image_dim"] = r.image_dim;
  j["cohomology_dim"] = r.cohomology_dim;
  return j.dump();
}

CocycleReport classify_cocycle(const Graph& g, const BasisOptions& opts) {
  CocycleReport rep;
  graph::IsoForm iso = graph::iso_canonical(g);
  if (iso.odd_automorphism) {
    rep.zero = rep.cocycle = rep.exact = true;
    return rep;
  }
  int n = g.n, d = graph::degree_of(g);
  if (opts.gc_filter && !graph::passes_gc_filter(g))
    throw std::invalid_argument("graph fails the GC filter");
  if (!opts.allow_tadpoles && graph::has_loops(g))
    throw std::invalid_argument("graph has loops but tadpoles are disabled");
  BasisWindow here = enumerate_basis(n, d, opts);
  int idx = here.index_of(iso.graph);
  if (idx < 0) throw std::runtime_error("graph class missing from its basis window");
  ratlin::Vector x(here.size());
  x[idx] = iso.sign;
  BasisWindow next = enumerate_basis(n + 1, d + 1, opts);
  ratlin::Vector dx = differential_matrix(here, next).apply(x);
  rep.cocycle = std::all_of(dx.begin(), dx.end(), [](const Rational& q) { return q == 0; });
  if (n >= 2) {
    BasisWindow prev = enumerate_basis(n - 1, d - 1, opts);
    rep.exact = ratlin::in_image(differential_matrix(prev, here), x);
  }
  return rep;
}

}  // namespace gca::gc
