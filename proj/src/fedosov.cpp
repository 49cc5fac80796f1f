#include "gca/fedosov.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace gca::fedosov {

using symalg::GeneratorTable;
using Matrix = std::vector<std::vector<SuperElement>>;

std::vector<MultiIndex> multi_indices(int d, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(d, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (d > 0 && order >= 0) rec(0, order);
  return out;
}

namespace {

std::string index_name(const MultiIndex& i) {
  std::string s;
  for (int e : i) {
    if (e > 9) throw std::invalid_argument("jet order too large");
    s += static_cast<char>('0' + e);
  }
  return s;
}

int order_of(const MultiIndex& i) { return std::accumulate(i.begin(), i.end(), 0); }

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::shared_ptr<GeneratorTable> base_table(int d, int N, std::vector<int>& t, std::vector<int>& xi) {
  if (d < 1 || N < 0) throw std::invalid_argument("bad jet context shape");
  auto table = std::make_shared<GeneratorTable>(N);
  for (int a = 1; a <= d; ++a) t.push_back(table->add_even("t" + std::to_string(a), 1));
  for (int a = 1; a <= d; ++a) xi.push_back(table->add_odd("xi" + std::to_string(a)));
  return table;
}

std::string first_term(const SuperElement& e) {
  if (e.is_zero()) return "";
  SuperElement one(e.table());
  one.add_term(e.terms().begin()->first, e.terms().begin()->second);
  return one.render();
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const TablePtr& table) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<SuperElement>(n, SuperElement(table)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

JetContext JetContext::symbolic(int d, int N, int max_order, bool gauge_forms) {
  JetContext c;
  c.d_ = d;
  c.N_ = N;
  c.max_order_ = max_order < 0 ? N : max_order;
  c.gauge_forms_ = gauge_forms;
  c.symbolic_ = true;
  auto tb = base_table(d, N, c.t_, c.xi_);
  c.table_ = tb;
  if (gauge_forms)
    for (int a = 1; a <= d; ++a)
      for (const auto& i : multi_indices(d, 1)) {
        int f = tb->add_odd("dx" + std::to_string(a) + "_" + index_name(i));
        c.dx_[{a, i}] = SuperElement::generator(c.table_, f);
        c.form_of_[f] = {a, i};
      }
  for (int k = 2; k <= c.max_order_; ++k)
    for (int a = 1; a <= d; ++a)
      for (const auto& i : multi_indices(d, k)) {
        std::string name = std::to_string(a) + "_" + index_name(i);
        int x = tb->add_even("x" + name);
        int f = tb->add_odd("dx" + name);
        c.x_[{a, i}] = SuperElement::generator(c.table_, x);
        c.dx_[{a, i}] = SuperElement::generator(c.table_, f);
        c.coords_.emplace_back(x, f);
        c.form_of_[f] = {a, i};
      }
  return c;
}

JetContext JetContext::random(int d, int N, std::mt19937& rng, int params, int max_order) {
  JetContext c;
  c.d_ = d;
  c.N_ = N;
  c.max_order_ = max_order < 0 ? N : max_order;
  auto tb = base_table(d, N, c.t_, c.xi_);
  c.table_ = tb;
  std::vector<SuperElement> s, ds;
  for (int k = 1; k <= params; ++k) {
    int sk = tb->add_even("s" + std::to_string(k));
    int dk = tb->add_odd("ds" + std::to_string(k));
    s.push_back(SuperElement::generator(c.table_, sk));
    ds.push_back(SuperElement::generator(c.table_, dk));
    c.coords_.emplace_back(sk, dk);
  }
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 2; k <= c.max_order_; ++k)
    for (int a = 1; a <= d; ++a)
      for (const auto& i : multi_indices(d, k)) {
        SuperElement x = SuperElement::constant(c.table_, coef(rng));
        SuperElement dx(c.table_);
        for (int p = 0; p < params; ++p) {
          Rational r = coef(rng);
          x += r * s[p];
          dx += r * ds[p];
        }
        c.x_[{a, i}] = x;
        c.dx_[{a, i}] = dx;
      }
  return c;
}

JetContext JetContext::flat(int d, int N) {
  JetContext c;
  c.d_ = d;
  c.N_ = N;
  c.max_order_ = 1;
  c.symbolic_ = true;
  auto tb = base_table(d, N, c.t_, c.xi_);
  c.table_ = tb;
  return c;
}

poly::Frame JetContext::frame() const { return poly::frame_for(table_, d_); }

SuperElement JetContext::x(int a, const MultiIndex& i) const {
  int k = order_of(i);
  if (k == 1) return SuperElement::constant(table_, i[a - 1] == 1 ? 1 : 0);
  auto it = x_.find({a, i});
  return it == x_.end() ? SuperElement(table_) : it->second;
}

SuperElement JetContext::dx(int a, const MultiIndex& i) const {
  auto it = dx_.find({a, i});
  return it == dx_.end() ? SuperElement(table_) : it->second;
}

SuperElement JetContext::t_power(const MultiIndex& i) const {
  SuperElement r = SuperElement::constant(table_, 1);
  for (int a = 1; a <= d_; ++a)
    for (int e = 0; e < i[a - 1]; ++e) r = r * SuperElement::generator(table_, t_[a - 1]);
  return r;
}

SuperElement JetContext::de_rham(const SuperElement& f) const {
  SuperElement r(table_);
  for (auto [x, dx] : coords_) {
    SuperElement p = symalg::derive(f, x);
    if (!p.is_zero()) r += SuperElement::generator(table_, dx) * p;
  }
  return r;
}

SuperElement JetContext::contract(const SuperElement& f, const std::vector<std::vector<Rational>>& v) const {
  if (!symbolic_) throw std::logic_error("contraction needs a symbolic jet context");
  SuperElement r(table_);
  for (const auto& [form, ai] : form_of_) {
    SuperElement p = symalg::derive(f, form);
    if (p.is_zero()) continue;
    const auto& [b, i] = ai;
    // v-bar(x^b_i): coefficient of t^i in v^c_{c'} t^{c'} d/dt^c x~^b
    SuperElement img(table_);
    for (int c = 1; c <= d_; ++c)
      for (int cp = 1; cp <= d_; ++cp) {
        if (v[c - 1][cp - 1] == 0 || i[cp - 1] == 0) continue;
        MultiIndex j = i;
        --j[cp - 1];
        ++j[c - 1];
        img += (v[c - 1][cp - 1] * j[c - 1]) * x(b, j);
      }
    r += img * p;
  }
  return r;
}

ConnectionForm build_omega(const JetContext& ctx) {
  int d = ctx.dim(), N = ctx.cutoff();
  const TablePtr& tb = ctx.table();
  // J = Id + M
  Matrix m(d, std::vector<SuperElement>(d, SuperElement(tb)));
  for (int k = 2; k <= ctx.max_order(); ++k)
    for (int a = 1; a <= d; ++a)
      for (const auto& i : multi_indices(d, k)) {
        SuperElement x = ctx.x(a, i);
        if (x.is_zero()) continue;
        for (int b = 1; b <= d; ++b) {
          if (i[b - 1] == 0) continue;
          MultiIndex j = i;
          --j[b - 1];
          m[a - 1][b - 1] += Rational(i[b - 1]) * x * ctx.t_power(j);
        }
      }
  Matrix neg = m;
  for (auto& row : neg)
    for (auto& e : row) e = -e;
  Matrix inv(d, std::vector<SuperElement>(d, SuperElement(tb))), power = inv;
  for (int a = 0; a < d; ++a) inv[a][a] = power[a][a] = SuperElement::constant(tb, 1);
  for (int k = 1; k <= N; ++k) {
    power = mat_mul(power, neg, tb);
    bool zero = true;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        inv[a][b] += power[a][b];
        zero = zero && power[a][b].is_zero();
      }
    if (zero) break;
  }
  std::vector<SuperElement> s(d, SuperElement(tb));
  for (int b = 1; b <= d; ++b)
    for (int k = 1; k <= ctx.max_order(); ++k)
      for (const auto& i : multi_indices(d, k)) {
        SuperElement f = ctx.dx(b, i);
        if (!f.is_zero()) s[b - 1] += f * ctx.t_power(i);
      }
  ConnectionForm w(d, SuperElement(tb));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) w[a] -= inv[a][b] * s[b];
  return w;
}

std::vector<SuperElement> flatness_residual(const JetContext& ctx, const ConnectionForm& w) {
  int d = ctx.dim();
  std::vector<SuperElement> r;
  for (int a = 0; a < d; ++a) {
    SuperElement f = ctx.de_rham(w[a]);
    for (int b = 0; b < d; ++b) f += w[b] * symalg::derive(w[a], ctx.t(b + 1));
    r.push_back(f);
  }
  return r;
}

IdentityResult check_flatness(const JetContext& ctx, const ConnectionForm& w) {
  IdentityResult res{"flatness", true, ctx.cutoff() - 2, ""};
  for (const auto& f : flatness_residual(ctx, w)) {
    SuperElement low = f.truncate(res.band);
    if (!low.is_zero()) {
      res.pass = false;
      res.failure = first_term(low);
      break;
    }
  }
  return res;
}

TensorElement lie_derivative(const JetContext& ctx, const std::vector<SuperElement>& w, const TensorElement& v) {
  int d = ctx.dim();
  if (static_cast<int>(w.size()) != d || v.dim() != d) throw std::invalid_argument("lie derivative: type mismatch");
  TensorElement r(ctx.table(), d, v.p(), v.q());
  for (const auto& idx : v.all_indices()) {
    SuperElement c(ctx.table());
    SuperElement comp = v.get(idx);
    for (int k = 1; k <= d; ++k) {
      if (!comp.is_zero()) c += w[k - 1] * symalg::derive(comp, ctx.t(k));
      for (int i = 0; i < v.p(); ++i) {
        auto other = idx;
        other.first[i] = k;
        SuperElement o = v.get(other);
        if (!o.is_zero()) c -= symalg::derive(w[idx.first[i] - 1], ctx.t(k)) * o;
      }
      for (int j = 0; j < v.q(); ++j) {
        auto other = idx;
        other.second[j] = k;
        SuperElement o = v.get(other);
        if (!o.is_zero()) c += symalg::derive(w[k - 1], ctx.t(idx.second[j])) * o;
      }
    }
    if (!c.is_zero()) r.set(idx, c);
  }
  return r;
}

TensorElement de_rham(const JetContext& ctx, const TensorElement& v) {
  TensorElement r(ctx.table(), v.dim(), v.p(), v.q());
  for (const auto& [idx, comp] : v.components()) {
    SuperElement c = ctx.de_rham(comp);
    if (!c.is_zero()) r.set(idx, c);
  }
  return r;
}

TensorElement atiyah_rep(const JetContext& ctx, const ConnectionForm& w) {
  int d = ctx.dim();
  TensorElement a(ctx.table(), d, 1, 2);
  for (int c = 1; c <= d; ++c)
    for (int b1 = 1; b1 <= d; ++b1)
      for (int b2 = 1; b2 <= d; ++b2) {
        SuperElement e = -symalg::derive(symalg::derive(w[c - 1], ctx.t(b1)), ctx.t(b2));
        if (!e.is_zero()) a.set({{c}, {b1, b2}}, e);
      }
  return a;
}

TensorElement atiyah_residual(const JetContext& ctx, const ConnectionForm& w) {
  TensorElement a = atiyah_rep(ctx, w);
  TensorElement r = de_rham(ctx, a);
  r += lie_derivative(ctx, w, a);
  return r;
}

IdentityResult check_atiyah_closed(const JetContext& ctx, const ConnectionForm& w) {
  IdentityResult res{"atiyah_closed", true, ctx.cutoff() - 3, ""};
  TensorElement r = atiyah_residual(ctx, w).truncate(res.band);
  if (!r.is_zero()) {
    res.pass = false;
    res.failure = first_term(r.components().begin()->second);
  }
  return res;
}

bool is_basic(const JetContext& ctx, const TensorElement& v, int band) {
  int d = ctx.dim();
  if (band < 0) band = ctx.cutoff() - 2;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<std::vector<Rational>> e(d, std::vector<Rational>(d, 0));
      e[a][b] = 1;
      for (const auto& [idx, comp] : v.components())
        if (!ctx.contract(comp, e).truncate(band).is_zero()) return false;
    }
  return true;
}

TaylorContext make_taylor_context(int d, int cutoff) {
  TaylorContext tc;
  tc.d = d;
  tc.cutoff = cutoff;
  auto tb = std::make_shared<GeneratorTable>(cutoff);
  tc.table = tb;
  for (int a = 1; a <= d; ++a) tc.x.push_back(tb->add_even("x" + std::to_string(a)));
  for (int a = 1; a <= d; ++a) tc.theta.push_back(tb->add_even("th" + std::to_string(a), 1));
  for (int a = 1; a <= d; ++a) tc.dx.push_back(tb->add_odd("dx" + std::to_string(a)));
  return tc;
}

SuperElement taylor_map(const TaylorContext& tc, const SuperElement& f) {
  int deg = 0;
  for (const auto& [m, c] : f.terms()) {
    int k = 0;
    for (auto [id, e] : m.even) {
      bool is_x = std::find(tc.x.begin(), tc.x.end(), static_cast<int>(id)) != tc.x.end();
      if (!is_x) throw std::invalid_argument("taylor_map expects a polynomial in x");
      k += e;
    }
    if (m.odd_count() > 0) throw std::invalid_argument("taylor_map expects a polynomial in x");
    deg = std::max(deg, k);
  }
  if (deg > tc.cutoff) throw std::invalid_argument("polynomial degree exceeds the cutoff");
  SuperElement r(tc.table);
  for (int k = 0; k <= deg; ++k)
    for (const auto& i : multi_indices(tc.d, k)) {
      SuperElement p = f;
      Rational denom = 1;
      SuperElement th = SuperElement::constant(tc.table, 1);
      for (int a = 0; a < tc.d; ++a) {
        for (int e = 0; e < i[a]; ++e) {
          p = symalg::derive(p, tc.x[a]);
          th = th * SuperElement::generator(tc.table, tc.theta[a]);
        }
        denom *= factorial(i[a]);
      }
      if (p.is_zero()) continue;
      p *= 1 / denom;
      r += p * th;
    }
  return r;
}

SuperElement d_prime(const TaylorContext& tc, const SuperElement& f) {
  SuperElement r(tc.table);
  for (int a = 0; a < tc.d; ++a) {
    SuperElement dx = SuperElement::generator(tc.table, tc.dx[a]);
    r += dx * symalg::derive(f, tc.x[a]);
    r -= dx * symalg::derive(f, tc.theta[a]);
  }
  return r;
}

namespace {

struct Piece {
  std::vector<SuperElement> basis;
  std::map<symalg::Monomial, std::size_t> index;
};

Piece koszul_piece(const TaylorContext& tc, int w, int k) {
  Piece p;
  int d = tc.d;
  if (k > d || k > w) return p;
  std::vector<int> vars(tc.x);
  vars.insert(vars.end(), tc.theta.begin(), tc.theta.end());
  std::vector<bool> choose(d, false);
  std::fill(choose.begin(), choose.begin() + k, true);
  std::vector<SuperElement> forms;
  do {
    SuperElement f = SuperElement::constant(tc.table, 1);
    for (int a = 0; a < d; ++a)
      if (choose[a]) f = f * SuperElement::generator(tc.table, tc.dx[a]);
    forms.push_back(f);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  for (const auto& e : multi_indices(2 * d, w - k)) {
    SuperElement poly = SuperElement::constant(tc.table, 1);
    for (int v = 0; v < 2 * d; ++v)
      for (int r = 0; r < e[v]; ++r) poly = poly * SuperElement::generator(tc.table, vars[v]);
    for (const auto& f : forms) {
      SuperElement b = poly * f;
      p.index[b.terms().begin()->first] = p.basis.size();
      p.basis.push_back(b);
    }
  }
  return p;
}

ratlin::SparseMatrix matrix_of(const Piece& src, const Piece& dst, const std::function<SuperElement(const SuperElement&)>& op) {
  ratlin::SparseMatrix m(dst.basis.size(), src.basis.size());
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    SuperElement image = op(src.basis[j]);
    for (const auto& [mono, c] : image.terms()) {
      auto it = dst.index.find(mono);
      if (it == dst.index.end()) throw std::logic_error("koszul differential left the weight piece");
      Rational unit = dst.basis[it->second].terms().begin()->second;
      m.set(it->second, j, c / unit);
    }
  }
  return m;
}

}  // namespace

KoszulReport koszul_acyclicity(int d, int cap) {
  KoszulReport rep;
  rep.d = d;
  rep.cap = cap;
  TaylorContext tc = make_taylor_context(d, symalg::kNoCutoff);
  auto dp = [&](const SuperElement& f) { return d_prime(tc, f); };
  for (int w = 0; w <= cap; ++w) {
    std::vector<Piece> pieces;
    for (int k = 0; k <= d + 1; ++k) pieces.push_back(koszul_piece(tc, w, k));
    std::vector<std::size_t> ranks;  // rank of D': k -> k+1
    for (int k = 0; k <= d; ++k) ranks.push_back(ratlin::rank(matrix_of(pieces[k], pieces[k + 1], dp)));
    for (int k = 0; k <= std::min(d, w); ++k) {
      std::size_t dim = pieces[k].basis.size();
      std::size_t h = dim - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
      rep.pieces.push_back({w, k, dim, h});
      if (k > 0 && h != 0) rep.acyclic = false;
    }
    // psi' on polynomials of degree w
    std::vector<SuperElement> polys;
    for (const auto& e : multi_indices(d, w)) {
      SuperElement f = SuperElement::constant(tc.table, 1);
      for (int a = 0; a < d; ++a)
        for (int r = 0; r < e[a]; ++r) f = f * SuperElement::generator(tc.table, tc.x[a]);
      polys.push_back(f);
    }
    Piece src;
    src.basis = polys;
    ratlin::SparseMatrix psi = matrix_of(src, pieces[0], [&](const SuperElement& f) { return taylor_map(tc, f); });
    for (const auto& f : polys)
      if (!d_prime(tc, taylor_map(tc, f)).is_zero()) rep.psi_closed = false;
    std::size_t h0 = pieces[0].basis.size() - ranks[0];
    if (ratlin::rank(psi) != h0 || h0 != polys.size()) rep.h0_is_image = false;
  }
  return rep;
}

poly::Polyvector omega_polyvector(const JetContext& ctx, const ConnectionForm& w) {
  SuperElement r(ctx.table());
  for (int a = 1; a <= ctx.dim(); ++a) r += w[a - 1] * SuperElement::generator(ctx.table(), ctx.xi(a));
  return r;
}

SuperElement twisted_derivation(const JetContext& ctx, const ConnectionForm& w, const GraVector& gamma,
                                const poly::Polyvector& v) {
  int m = gamma.arity();
  SuperElement zero(ctx.table());
  if (gamma.is_zero()) return zero;
  if (m < 2) throw std::invalid_argument("twisted derivation needs arity >= 2");
  poly::Polyvector om = omega_polyvector(ctx, w);
  std::vector<poly::Polyvector> args(m - 1, om);
  args.push_back(v);
  SuperElement r = poly::act(ctx.frame(), gamma, args);
  r *= 1 / factorial(m - 1);
  return r.is_zero() ? zero : r;
}

SuperElement twisted_derivation(const JetContext& ctx, const ConnectionForm& w, const gra::GCCochain& gamma,
                                const poly::Polyvector& v) {
  SuperElement r(ctx.table());
  for (const auto& [arity, vec] : gamma.terms())
    if (arity >= 2) r += twisted_derivation(ctx, w, vec, v);
  return r;
}

SuperElement twisted_derivation_sym(const JetContext& ctx, const ConnectionForm& w, const Graph& g,
                                    const poly::Polyvector& v) {
  // every relabeling with last vertex h contributes act(g_h) and there are (m-1)! of them
  int m = g.n;
  if (m < 2) throw std::invalid_argument("twisted derivation needs arity >= 2");
  poly::Polyvector om = omega_polyvector(ctx, w);
  std::vector<poly::Polyvector> args(m - 1, om);
  args.push_back(v);
  poly::Frame f = ctx.frame();
  SuperElement r(ctx.table());
  for (int h = 1; h <= m; ++h) {
    graph::Permutation swap(m);
    std::iota(swap.begin(), swap.end(), 1);
    std::swap(swap[h - 1], swap[m - 1]);
    r += poly::act(f, graph::relabel_raw(g, swap), args);
  }
  return r;
}

SuperElement wheel_contraction(const JetContext& ctx, const ConnectionForm& w, int n, const poly::Polyvector& v) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("wheel contraction needs odd n >= 3");
  int d = ctx.dim();
  const TablePtr& tb = ctx.table();
  // h[b][a][c] = d^2 omega^a / dt^c dt^b
  std::vector<Matrix> h(d, Matrix(d, std::vector<SuperElement>(d, SuperElement(tb))));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      SuperElement db = symalg::derive(w[a], ctx.t(b + 1));
      for (int c = 0; c < d; ++c) h[b][a][c] = symalg::derive(db, ctx.t(c + 1));
    }
  SuperElement r(tb);
  std::vector<int> bs(n, 0);
  while (true) {
    SuperElement cv = v;
    for (int i = n - 1; i >= 0 && !cv.is_zero(); --i) cv = symalg::derive(cv, ctx.xi(bs[i] + 1));
    if (!cv.is_zero()) {
      Matrix prod = h[bs[0]];
      for (int i = 1; i < n; ++i) prod = mat_mul(prod, h[bs[i]], tb);
      SuperElement tr(tb);
      for (int a = 0; a < d; ++a) tr += prod[a][a];
      if (!tr.is_zero()) r += tr * cv;
    }
    int k = n - 1;
    while (k >= 0 && bs[k] == d - 1) bs[k--] = 0;
    if (k < 0) break;
    ++bs[k];
  }
  return r;
}

Proportionality proportionality(const SuperElement& lhs, const SuperElement& rhs) {
  Proportionality p;
  if (rhs.is_zero()) {
    p.proportional = lhs.is_zero();
    return p;
  }
  p.determined = true;
  const auto& [m, c] = *rhs.terms().begin();
  p.ratio = lhs.coefficient(m) / c;
  SuperElement scaled = rhs;
  scaled *= p.ratio;
  p.proportional = scaled == lhs;
  return p;
}

}  // namespace gca::fedosov
