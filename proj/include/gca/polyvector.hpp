#pragma once

#include "gca/graph.hpp"
#include "gca/symalg.hpp"

#include <vector>

namespace gca::poly {

using graph::Graph;
using graph::GraVector;
using symalg::Rational;
using symalg::SuperElement;
using symalg::TablePtr;

// Location of the coordinates t^a (even) and xi_a (odd) inside a generator table.
struct Frame {
  TablePtr table;
  int d = 0;
  std::vector<int> t;   // generator ids of t1..td
  std::vector<int> xi;  // generator ids of xi1..xid
};

// Table {t1..td even weight 1, xi1..xid odd degree 1}, truncated at t-weight N.
Frame make_frame(int d, int cutoff);
// Frame over an existing table containing generators named t<a> and xi<a>.
Frame frame_for(const TablePtr& table, int d);

using Polyvector = SuperElement;
using PureTensor = std::vector<SuperElement>;
using PolyTensor = std::vector<PureTensor>;

// Delta_(i,j) = sum_a (d/dxi_a at i)(d/dt^a at j) + (d/dt^a at i)(d/dxi_a at j), each slot
// operator acting with the Koszul sign of the slots to its left.
PolyTensor delta_apply(const Frame& f, int i, int j, const PolyTensor& in);
PolyTensor delta_op(const Frame& f, int i, int j, const std::vector<Polyvector>& args);
SuperElement mult(const PolyTensor& t);

// Gamma(v_1..v_n) = mult(Delta_e1 ... Delta_ek (v_1 x ... x v_n)).
Polyvector act(const Frame& f, const Graph& g, const std::vector<Polyvector>& args);
Polyvector act(const Frame& f, const GraVector& g, const std::vector<Polyvector>& args);

Polyvector wedge(const Frame& f, const Polyvector& a, const Polyvector& b);
Polyvector schouten(const Frame& f, const Polyvector& a, const Polyvector& b);

bool parity_of(const Polyvector& v);  // throws unless parity-homogeneous

}  // namespace gca::poly
