#include "gca/suites.hpp"

#include "gca/fedosov.hpp"
#include "gca/graph.hpp"
#include "gca/wheel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gca::suites {

using fedosov::ConnectionForm;
using fedosov::JetContext;
using symalg::SuperElement;

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool WheelTheoremReport::pass() const {
  return pairs > 0 && determined == pairs && proportional && constant && ratio != 0 && nonwheel_zero;
}

std::uint32_t seed32(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::uint32_t out = 0;
  seq.generate(&out, &out + 1);
  return out;
}

namespace {

SuperElement random_t_poly(std::mt19937& rng, const JetContext& c, int max_deg, int terms) {
  SuperElement r(c.table());
  for (int k = 0; k < terms; ++k) {
    SuperElement m = SuperElement::constant(c.table(), static_cast<long>(rng() % 5) - 2);
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int s = 0; s < deg; ++s) m = m * SuperElement::generator(c.table(), c.t(1 + static_cast<int>(rng() % c.dim())));
    r += m;
  }
  return r;
}

// sum of (polynomial in t) * xi_{a_1} ... xi_{a_k}
poly::Polyvector random_polyvector(std::mt19937& rng, const JetContext& c, int xi_degree) {
  SuperElement r(c.table());
  for (int k = 0; k < 3; ++k) {
    SuperElement m = random_t_poly(rng, c, 1, 2);
    std::vector<int> idx(c.dim());
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int s = 0; s < xi_degree; ++s) m = m * SuperElement::generator(c.table(), c.xi(idx[s]));
    r += m;
  }
  return r;
}

void record(CheckResult& c, const fedosov::IdentityResult& r, const std::string& where) {
  ++c.instances;
  if (!r.pass && c.pass) {
    c.pass = false;
    c.failure = where + ": " + r.failure;
  }
}

}  // namespace

SuiteReport fedosov_suite(int d, int N, std::uint64_t seed, int trials) {
  if (d < 1 || d > 3) throw std::invalid_argument("d must be in 1..3");
  if (N < 3 || N > 4) throw std::invalid_argument("truncation must be 3 or 4");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937 rng(seed32(seed));
  SuiteReport rep;
  rep.suite = "fedosov";
  CheckResult flat{"flatness", true, 0, {}}, atiyah{"atiyah_closed", true, 0, {}};
  for (int k = 0; k < trials; ++k) {
    JetContext c = JetContext::random(d, N, rng, kJetParams);
    ConnectionForm w = fedosov::build_omega(c);
    std::string where = "jet " + std::to_string(k);
    record(flat, fedosov::check_flatness(c, w), where);
    record(atiyah, fedosov::check_atiyah_closed(c, w), where);
  }
  rep.checks.push_back(flat);
  rep.checks.push_back(atiyah);

  CheckResult psi{"psi_closed", true, 0, {}};
  fedosov::TaylorContext tc = fedosov::make_taylor_context(d, N);
  for (int k = 0; k < trials; ++k) {
    SuperElement f(tc.table);
    for (int m = 0; m < 4; ++m) {
      SuperElement mono = SuperElement::constant(tc.table, static_cast<long>(rng() % 9) - 4);
      int deg = static_cast<int>(rng() % (N + 1));
      for (int s = 0; s < deg; ++s) mono = mono * SuperElement::generator(tc.table, tc.x[rng() % d]);
      f += mono;
    }
    SuperElement r = fedosov::d_prime(tc, fedosov::taylor_map(tc, f));
    ++psi.instances;
    if (!r.is_zero() && psi.pass) {
      psi.pass = false;
      psi.failure = "f = " + f.render() + ": D'(psi'(f)) = " + r.render();
    }
  }
  rep.checks.push_back(psi);

  fedosov::KoszulReport kr = fedosov::koszul_acyclicity(d, N);
  CheckResult koszul{"koszul_acyclic", kr.ok(), kr.pieces.size(), {}};
  if (!kr.ok())
    for (const auto& p : kr.pieces)
      if (p.form_degree > 0 && p.cohomology != 0) {
        koszul.failure = "H^" + std::to_string(p.form_degree) + " in weight " + std::to_string(p.weight) + " has dimension " +
                         std::to_string(p.cohomology);
        break;
      }
  if (!kr.ok() && koszul.failure.empty()) koszul.failure = kr.psi_closed ? "H^0 differs from the image of psi'" : "psi' not closed";
  rep.checks.push_back(koszul);
  return rep;
}

WheelTheoremReport wheel_theorem(int d, int N, int pairs, std::uint64_t seed, int max_vertices) {
  if (d < 1 || d > 3) throw std::invalid_argument("d must be in 1..3");
  if (N != 3) throw std::invalid_argument("the wheel(3) reduction is evaluated at truncation 3");
  if (pairs < 1) throw std::invalid_argument("pairs must be >= 1");
  if (max_vertices > 6) throw std::invalid_argument("non-wheel scan supports up to 6 vertices");
  std::mt19937 rng(seed32(seed));
  WheelTheoremReport rep;
  rep.d = d;
  rep.N = N;
  bool have = false;
  for (int k = 0; k < pairs; ++k) {
    JetContext c = JetContext::random(d, N, rng, kJetParams);
    ConnectionForm w = fedosov::build_omega(c);
    poly::Polyvector v = random_polyvector(rng, c, std::min(d, 3));
    fedosov::Proportionality p = fedosov::proportionality(fedosov::twisted_derivation_sym(c, w, wheel::wheel(3), v),
                                                          fedosov::wheel_contraction(c, w, 3, v));
    ++rep.pairs;
    if (!p.determined) {
      if (rep.failure.empty()) rep.failure = "pair " + std::to_string(k) + ": contraction vanishes, ratio undetermined";
      continue;
    }
    ++rep.determined;
    if (!p.proportional) {
      rep.proportional = false;
      if (rep.failure.empty()) rep.failure = "pair " + std::to_string(k) + ": not proportional";
      continue;
    }
    if (have && p.ratio != rep.ratio) {
      rep.constant = false;
      if (rep.failure.empty()) {
        std::ostringstream os;
        os << "pair " << k << ": ratio " << p.ratio << " differs from " << rep.ratio;
        rep.failure = os.str();
      }
    }
    if (!have) rep.ratio = p.ratio;
    have = true;
  }

  // non-wheel classes act by zero
  JetContext c = JetContext::random(d, N, rng, kJetParams);
  ConnectionForm w = fedosov::build_omega(c);
  poly::Polyvector v = random_polyvector(rng, c, std::min(d, 2)) + random_polyvector(rng, c, 1);
  for (int n = 4; n <= max_vertices; ++n)
    for (int e = 6; e <= n * (n - 1) / 2; ++e)
      for (const graph::Graph& g : graph::iso_classes(n, e, false)) {
        if (!graph::passes_gc_filter(g) || graph::has_odd_automorphism(g)) continue;
        bool wheel_like = false;
        for (int h = 1; h <= n && !wheel_like; ++h) wheel_like = wheel::is_wheel(g, h);
        if (wheel_like) continue;
        ++rep.nonwheel_tested;
        if (!fedosov::twisted_derivation_sym(c, w, g, v).is_zero() && rep.nonwheel_zero) {
          rep.nonwheel_zero = false;
          if (rep.failure.empty()) rep.failure = "non-wheel graph " + graph::to_text(g) + " acts nontrivially";
        }
      }
  return rep;
}

}  // namespace gca::suites
