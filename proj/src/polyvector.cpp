#include "gca/polyvector.hpp"

#include "gca/gra_operad.hpp"

#include <functional>
#include <memory>
#include <stdexcept>

namespace gca::poly {

using symalg::GeneratorTable;

Frame make_frame(int d, int cutoff) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  auto table = std::make_shared<GeneratorTable>(cutoff);
  for (int a = 1; a <= d; ++a) table->add_even("t" + std::to_string(a), 1);
  for (int a = 1; a <= d; ++a) table->add_odd("xi" + std::to_string(a));
  return frame_for(table, d);
}

Frame frame_for(const TablePtr& table, int d) {
  Frame f;
  f.table = table;
  f.d = d;
  for (int a = 1; a <= d; ++a) {
    f.t.push_back(table->id("t" + std::to_string(a)));
    f.xi.push_back(table->id("xi" + std::to_string(a)));
  }
  return f;
}

bool parity_of(const Polyvector& v) {
  bool odd = false;
  if (!v.is_homogeneous_parity(odd)) throw std::invalid_argument("polyvector is not parity-homogeneous");
  return odd;
}

namespace {

void check_args(const Frame& f, const std::vector<Polyvector>& args) {
  for (const auto& v : args)
    if (!v.is_zero() && v.table() != f.table) throw std::invalid_argument("generator table mismatch");
}

// Split every slot into parity-homogeneous pieces.
PolyTensor split(const PolyTensor& in) {
  PolyTensor out;
  for (const auto& pt : in) {
    PolyTensor acc{PureTensor{}};
    for (const auto& v : pt) {
      PolyTensor next;
      for (bool p : {false, true}) {
        SuperElement piece = v.parity_part(p);
        if (piece.is_zero()) continue;
        for (const auto& partial : acc) {
          PureTensor t = partial;
          t.push_back(piece);
          next.push_back(std::move(t));
        }
      }
      acc = std::move(next);
    }
    for (auto& t : acc) out.push_back(std::move(t));
  }
  return out;
}

// Apply the operator `gen` (a derivative) at slot s (0-based) with the Koszul sign.
bool apply_hat(PureTensor& t, int s, int gen, bool odd) {
  SuperElement r = symalg::derive(t[s], gen);
  if (r.is_zero()) return false;
  if (odd) {
    int parity = 0;
    for (int l = 0; l < s; ++l) parity ^= parity_of(t[l]) ? 1 : 0;
    if (parity) r = -r;
  }
  t[s] = std::move(r);
  return true;
}

}  // namespace

PolyTensor delta_apply(const Frame& f, int i, int j, const PolyTensor& in) {
  PolyTensor out;
  PolyTensor homog = split(in);
  for (const auto& pt : homog) {
    int n = static_cast<int>(pt.size());
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("slot out of range");
    for (int a = 0; a < f.d; ++a)
      for (int kind = 0; kind < 2; ++kind) {
        // kind 0: xi-derivative at i, t-derivative at j; kind 1: the reverse
        int gen_i = kind == 0 ? f.xi[a] : f.t[a];
        int gen_j = kind == 0 ? f.t[a] : f.xi[a];
        PureTensor t = pt;
        if (!apply_hat(t, j - 1, gen_j, kind == 1)) continue;
        if (!apply_hat(t, i - 1, gen_i, kind == 0)) continue;
        out.push_back(std::move(t));
      }
  }
  return out;
}

PolyTensor delta_op(const Frame& f, int i, int j, const std::vector<Polyvector>& args) {
  check_args(f, args);
  return delta_apply(f, i, j, PolyTensor{args});
}

SuperElement mult(const PolyTensor& t) {
  SuperElement sum;
  for (const auto& pt : t) {
    if (pt.empty()) continue;
    SuperElement p = pt[0];
    for (std::size_t k = 1; k < pt.size() && !p.is_zero(); ++k) p = symalg::mul(p, pt[k]);
    sum += p;
  }
  return sum;
}

namespace {

// Edges are processed in a greedy elimination order; a slot joins the running product as
// soon as its last edge is done, so partial products are shared between branches.
// Slot arguments are parity homogeneous here.
struct Evaluator {
  const Frame& f;
  const Graph& g;
  int n;
  std::vector<SuperElement> cur;
  std::vector<int> parity;  // of the original arguments
  std::vector<int> order;
  std::vector<int> remaining;
  std::vector<int> before;   // sum of parities of earlier slots
  std::vector<int> odd_ops;  // odd operators applied so far at each slot
  std::vector<std::pair<int, int>> odd_list;  // (slot, edge)
  std::vector<int> done_parity;               // -1 while open
  SuperElement result;

  // appends slot k to the product; returns the sign change
  int close(int k) {
    int q = (parity[k] + odd_ops[k]) & 1;
    int s = (odd_ops[k] & before[k]) & 1;
    for (int l = k + 1; l < n; ++l)
      if (done_parity[l] > 0) s ^= q;
    done_parity[k] = q;
    return s;
  }

  void step(std::size_t pos, const SuperElement& prod, int sign) {
    if (pos == order.size()) {
      if (sign) result -= prod;
      else result += prod;
      return;
    }
    int e = order[pos];
    int i = g.edges[e].first - 1, j = g.edges[e].second - 1;
    for (int a = 0; a < f.d; ++a)
      for (int kind = 0; kind < 2; ++kind) {
        int gen_i = kind == 0 ? f.xi[a] : f.t[a];
        int gen_j = kind == 0 ? f.t[a] : f.xi[a];
        int odd_slot = kind == 0 ? i : j;
        SuperElement save_i = cur[i], save_j = cur[j];
        SuperElement bj = symalg::derive(cur[j], gen_j);
        if (bj.is_zero()) continue;
        cur[j] = std::move(bj);
        SuperElement ai = symalg::derive(cur[i], gen_i);
        if (ai.is_zero()) {
          cur[i] = save_i;
          cur[j] = save_j;
          continue;
        }
        cur[i] = std::move(ai);
        int s = sign;
        for (auto [slot, edge] : odd_list)
          if ((odd_slot <= slot) != (e < edge)) s ^= 1;
        odd_list.emplace_back(odd_slot, e);
        ++odd_ops[odd_slot];
        --remaining[i];
        if (j != i) --remaining[j];
        SuperElement p = prod;
        std::vector<int> closed;
        for (int k : {i, j})
          if (remaining[k] == 0 && done_parity[k] < 0 && !p.is_zero()) {
            s ^= close(k);
            closed.push_back(k);
            p = symalg::mul(p, cur[k]);
          }
        if (!p.is_zero()) step(pos + 1, p, s);
        for (int k : closed) done_parity[k] = -1;
        ++remaining[i];
        if (j != i) ++remaining[j];
        --odd_ops[odd_slot];
        odd_list.pop_back();
        cur[i] = save_i;
        cur[j] = save_j;
      }
  }
};

std::vector<int> elimination_order(const Graph& g) {
  std::vector<bool> used(g.edge_count(), false), gone(g.n, false);
  std::vector<int> order;
  while (static_cast<int>(order.size()) < g.edge_count()) {
    int best = -1, best_count = 0;
    for (int v = 0; v < g.n; ++v) {
      if (gone[v]) continue;
      int c = 0;
      for (int e = 0; e < g.edge_count(); ++e)
        if (!used[e] && (g.edges[e].first == v + 1 || g.edges[e].second == v + 1)) ++c;
      if (c > 0 && (best < 0 || c < best_count)) {
        best = v;
        best_count = c;
      }
    }
    gone[best] = true;
    for (int e = 0; e < g.edge_count(); ++e)
      if (!used[e] && (g.edges[e].first == best + 1 || g.edges[e].second == best + 1)) {
        used[e] = true;
        order.push_back(e);
      }
  }
  return order;
}

SuperElement act_homogeneous(const Frame& f, const Graph& g, const std::vector<SuperElement>& args,
                             const std::vector<int>& parity, const std::vector<int>& order) {
  Evaluator ev{f, g, g.n, args, parity, order, std::vector<int>(g.n, 0), std::vector<int>(g.n, 0),
               std::vector<int>(g.n, 0), {}, std::vector<int>(g.n, -1), SuperElement(f.table)};
  for (int k = 1; k < g.n; ++k) ev.before[k] = ev.before[k - 1] + parity[k - 1];
  for (auto [i, j] : g.edges) {
    ++ev.remaining[i - 1];
    if (j != i) ++ev.remaining[j - 1];
  }
  SuperElement prod = SuperElement::constant(f.table, Rational(1));
  int sign = 0;
  for (int k = 0; k < g.n && !prod.is_zero(); ++k)
    if (ev.remaining[k] == 0) {
      sign ^= ev.close(k);
      prod = symalg::mul(prod, args[k]);
    }
  if (!prod.is_zero()) ev.step(0, prod, sign);
  return ev.result;
}

}  // namespace

Polyvector act(const Frame& f, const Graph& g, const std::vector<Polyvector>& args) {
  if (static_cast<int>(args.size()) != g.n) throw std::invalid_argument("arity mismatch");
  check_args(f, args);
  SuperElement zero(f.table);
  for (const auto& v : args)
    if (v.is_zero()) return zero;
  std::vector<std::vector<std::pair<SuperElement, int>>> parts(g.n);
  for (int k = 0; k < g.n; ++k)
    for (int odd : {0, 1}) {
      SuperElement part = args[k].parity_part(odd);
      if (!part.is_zero()) parts[k].emplace_back(std::move(part), odd);
    }
  std::vector<int> order = elimination_order(g);
  SuperElement result(f.table);
  std::vector<SuperElement> pick(g.n, zero);
  std::vector<int> parity(g.n, 0);
  std::function<void(int)> expand = [&](int k) {
    if (k == g.n) {
      result += act_homogeneous(f, g, pick, parity, order);
      return;
    }
    for (const auto& [part, odd] : parts[k]) {
      pick[k] = part;
      parity[k] = odd;
      expand(k + 1);
    }
  };
  expand(0);
  return result;
}

Polyvector act(const Frame& f, const GraVector& g, const std::vector<Polyvector>& args) {
  SuperElement sum(f.table);
  for (const auto& [gr, c] : g.terms()) {
    SuperElement v = act(f, gr, args);
    v *= c;
    sum += v;
  }
  return sum;
}

Polyvector wedge(const Frame& f, const Polyvector& a, const Polyvector& b) {
  return act(f, gra::iota(gra::GerGenerator::Product), {a, b});
}

Polyvector schouten(const Frame& f, const Polyvector& a, const Polyvector& b) {
  return act(f, gra::iota(gra::GerGenerator::Bracket), {a, b});
}

}  // namespace gca::poly
