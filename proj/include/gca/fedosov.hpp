#pragma once

#include "gca/gra_operad.hpp"
#include "gca/graph.hpp"
#include "gca/polyvector.hpp"
#include "gca/ratlin.hpp"
#include "gca/symalg.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gca::fedosov {

using graph::Graph;
using graph::GraVector;
using symalg::Rational;
using symalg::SuperElement;
using symalg::TablePtr;
using symalg::TensorElement;
using MultiIndex = std::vector<int>;  // exponents (i_1..i_d)

std::vector<MultiIndex> multi_indices(int d, int order);  // all |i| = order, lexicographic

// Jets of a coordinate system in the affine gauge x^a_(b) = delta^a_b, over one fiber.
// Symbolic contexts carry generators x<a>_<i> (even, weight 0) and dx<a>_<i> (odd) for
// 2 <= |i| <= max_order. Random contexts pull these back along an affine map from a
// few parameters s<k> with differentials ds<k>. Both contain t<a> (weight 1) and xi<a>.
class JetContext {
 public:
  static JetContext symbolic(int d, int N, int max_order = -1, bool gauge_forms = false);
  static JetContext random(int d, int N, std::mt19937& rng, int params = 4, int max_order = -1);
  static JetContext flat(int d, int N);

  const TablePtr& table() const { return table_; }
  int dim() const { return d_; }
  int cutoff() const { return N_; }
  int max_order() const { return max_order_; }
  bool has_gauge_forms() const { return gauge_forms_; }
  int t(int a) const { return t_.at(a - 1); }    // 1-based
  int xi(int a) const { return xi_.at(a - 1); }  // 1-based
  poly::Frame frame() const;

  SuperElement x(int a, const MultiIndex& i) const;   // delta in gauge for |i| = 1, 0 for |i| = 0
  SuperElement dx(int a, const MultiIndex& i) const;  // gauge forms only if enabled
  SuperElement t_power(const MultiIndex& i) const;
  SuperElement de_rham(const SuperElement& f) const;  // odd derivation, d(t) = d(xi) = 0
  // contraction with the gl_d fundamental field of v (row a, column b = v^a_b); symbolic only
  SuperElement contract(const SuperElement& f, const std::vector<std::vector<Rational>>& v) const;

 private:
  TablePtr table_;
  int d_ = 0, N_ = 0, max_order_ = 0;
  bool gauge_forms_ = false, symbolic_ = false;
  std::vector<int> t_, xi_;
  std::map<std::pair<int, MultiIndex>, SuperElement> x_, dx_;
  std::vector<std::pair<int, int>> coords_;  // (even coordinate, its differential)
  std::map<int, std::pair<int, MultiIndex>> form_of_;  // differential id -> (a, i)
};

using ConnectionForm = std::vector<SuperElement>;  // omega^a, a = 1..d

// omega^a = -(J^{-1})^a_b sum_i dx^b_i t^i, J^a_b = d(x~^a)/dt^b, inverse by geometric series.
ConnectionForm build_omega(const JetContext& ctx);

struct IdentityResult {
  std::string name;
  bool pass = false;
  int band = 0;         // coefficients of t-weight <= band are compared
  std::string failure;  // first nonvanishing coefficient, if any
};

// d omega^a + omega^b (d omega^a / dt^b)
std::vector<SuperElement> flatness_residual(const JetContext& ctx, const ConnectionForm& w);
IdentityResult check_flatness(const JetContext& ctx, const ConnectionForm& w);  // band N-2

// Lie derivative along w = w^c d/dt^c; the w factors multiply from the left.
TensorElement lie_derivative(const JetContext& ctx, const std::vector<SuperElement>& w, const TensorElement& v);
TensorElement de_rham(const JetContext& ctx, const TensorElement& v);

TensorElement atiyah_rep(const JetContext& ctx, const ConnectionForm& w);  // -d^2 omega^a / dt^b1 dt^b2
TensorElement atiyah_residual(const JetContext& ctx, const ConnectionForm& w);  // (d + L_omega) A
IdentityResult check_atiyah_closed(const JetContext& ctx, const ConnectionForm& w);  // band N-3

// i_v annihilates every component for all d^2 elementary matrices v.
// Compared on t-weight <= band (default N-2); needs a symbolic context.
bool is_basic(const JetContext& ctx, const TensorElement& v, int band = -1);

// Taylor model: x<a> (even, weight 0), th<a> (even, weight 1), dx<a> (odd).
struct TaylorContext {
  TablePtr table;
  int d = 0;
  int cutoff = 0;
  std::vector<int> x, theta, dx;
};
TaylorContext make_taylor_context(int d, int cutoff);
SuperElement taylor_map(const TaylorContext& tc, const SuperElement& f);  // f + sum 1/k! d^k f theta^k
SuperElement d_prime(const TaylorContext& tc, const SuperElement& f);    // d - dx^a d/dtheta^a

struct KoszulPiece {
  int weight = 0;
  int form_degree = 0;
  std::size_t dim = 0;
  std::size_t cohomology = 0;
};
struct KoszulReport {
  int d = 0;
  int cap = 0;
  std::vector<KoszulPiece> pieces;
  bool psi_closed = true;     // D' o psi' = 0 on every basis polynomial
  bool acyclic = true;        // H^k = 0 for k > 0
  bool h0_is_image = true;    // H^0 equals the image of psi'
  bool ok() const { return psi_closed && acyclic && h0_is_image; }
};
// The D' complex graded by total weight (x, theta, dx all weight 1), weights 0..cap.
KoszulReport koszul_acyclicity(int d, int cap);

poly::Polyvector omega_polyvector(const JetContext& ctx, const ConnectionForm& w);  // omega^a xi_a

// sum_n 1/n! gamma(omega, ..., omega, v) for gamma of a single arity.
SuperElement twisted_derivation(const JetContext& ctx, const ConnectionForm& w, const GraVector& gamma,
                                const poly::Polyvector& v);
SuperElement twisted_derivation(const JetContext& ctx, const ConnectionForm& w, const gra::GCCochain& gamma,
                                const poly::Polyvector& v);
// Same for gamma = sum over all relabelings of g, one evaluation per designated last vertex.
SuperElement twisted_derivation_sym(const JetContext& ctx, const ConnectionForm& w, const Graph& g,
                                    const poly::Polyvector& v);

// sum prod_i d^2 omega^{a_i}/dt^{a_{i+1}} dt^{b_i} . d/dxi_{b_1} ... d/dxi_{b_n} v
SuperElement wheel_contraction(const JetContext& ctx, const ConnectionForm& w, int n, const poly::Polyvector& v);

struct Proportionality {
  bool determined = false;    // rhs nonzero
  bool proportional = false;  // lhs = ratio * rhs
  Rational ratio;
};
Proportionality proportionality(const SuperElement& lhs, const SuperElement& rhs);

}  // namespace gca::fedosov
