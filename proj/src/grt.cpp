#include "gca/grt.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gca::grt {

const std::vector<std::string>& xy_alphabet() {
  static const std::vector<std::string> ab{"x", "y"};
  return ab;
}

LieElement x(int cap) { return LieElement::generator(xy_alphabet(), cap, 0); }
LieElement y(int cap) { return LieElement::generator(xy_alphabet(), cap, 1); }

LieElement sigma3(int cap) {
  LieElement a = x(cap), b = y(cap);
  return bracket(a, bracket(a, b)) - bracket(b, bracket(b, a));
}

TnQuotient::TnQuotient(int n, int cap) : n_(n), cap_(cap) {
  if (n != 3 && n != 4) throw std::invalid_argument("t_n is available for n = 3, 4");
  if (cap < 1 || cap > 5) throw std::invalid_argument("degree cap must be in 1..5");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) alphabet_.push_back("t" + std::to_string(i) + std::to_string(j));
  pieces_.resize(cap + 1);
  int letters = static_cast<int>(alphabet_.size());
  for (int d = 1; d <= cap; ++d) {
    Piece& p = pieces_[d];
    p.words = lie::lyndon_words(letters, d);
    for (std::size_t k = 0; k < p.words.size(); ++k) p.index.emplace(p.words[k], k);
    p.ideal = ratlin::Echelon(p.words.size());
  }
  if (cap < 2) return;
  auto insert = [&](int d, const LieElement& e) {
    if (pieces_[d].ideal.insert(vectorize(e, d))) pieces_[d].spanning.push_back(e);
  };
  for (const auto& r : relations()) insert(2, r);
  // ideal closure: brackets with generators
  for (int d = 3; d <= cap; ++d)
    for (const auto& r : pieces_[d - 1].spanning)
      for (int l = 0; l < letters; ++l) insert(d, bracket(LieElement::generator(alphabet_, cap_, l), r));
}

LieElement TnQuotient::t(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("bad t index");
  if (i > j) std::swap(i, j);
  return LieElement::generator(alphabet_, cap_, "t" + std::to_string(i) + std::to_string(j));
}

std::vector<LieElement> TnQuotient::relations() const {
  std::vector<LieElement> rel;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n_; ++k) {
        if (k == i || k == j) continue;
        rel.push_back(bracket(t(i, j), t(i, k) + t(j, k)));
        for (int l = 1; l <= n_; ++l)
          if (l != i && l != j && l != k) rel.push_back(bracket(t(i, j), t(k, l)));
      }
    }
  return rel;
}

std::size_t TnQuotient::free_dimension(int degree) const { return pieces_.at(degree).words.size(); }

std::size_t TnQuotient::dimension(int degree) const {
  const Piece& p = pieces_.at(degree);
  return p.words.size() - p.ideal.rank();
}

std::vector<Word> TnQuotient::quotient_basis(int degree) const {
  const Piece& p = pieces_.at(degree);
  std::vector<Word> out;
  for (std::size_t k = 0; k < p.words.size(); ++k) {
    ratlin::SparseVector e{{k, 1}};
    if (p.ideal.remainder(e) == e) out.push_back(p.words[k]);
  }
  return out;
}

ratlin::SparseVector TnQuotient::vectorize(const LieElement& e, int degree) const {
  if (e.alphabet() != alphabet_) throw std::invalid_argument("element is not over the t^{ij}");
  const Piece& p = pieces_.at(degree);
  ratlin::SparseVector v;
  for (const auto& [w, c] : e.terms())
    if (static_cast<int>(w.size()) == degree) v.emplace(p.index.at(w), c);
  return v;
}

std::map<Word, Rational> TnQuotient::coordinates(const LieElement& e) const {
  std::map<Word, Rational> out;
  for (const auto& [w, c] : e.terms())
    if (static_cast<int>(w.size()) > cap_) throw std::overflow_error("degree above the cap");
  for (int d = 1; d <= cap_; ++d) {
    const Piece& p = pieces_[d];
    for (const auto& [k, c] : p.ideal.remainder(vectorize(e, d))) out.emplace(p.words[k], c);
  }
  return out;
}

namespace {

LieElement apply(const LieElement& s, const LieElement& a, const LieElement& b) { return substitute(s, {a, b}); }

std::shared_ptr<const TnQuotient> cached_t4(int cap) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TnQuotient>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cap);
  if (it == cache.end()) it = cache.emplace(cap, std::make_shared<const TnQuotient>(4, cap)).first;
  return it->second;
}

void require_xy(const LieElement& s) {
  if (s.alphabet() != xy_alphabet()) throw std::invalid_argument("expected an element of lie(x, y)");
}

}  // namespace

LieElement antisymmetry_residual(const LieElement& s) {
  require_xy(s);
  return apply(s, y(s.cap()), x(s.cap())) + s;
}

LieElement hexagon_residual(const LieElement& s) {
  require_xy(s);
  LieElement a = x(s.cap()), b = y(s.cap());
  LieElement c = -(a + b);
  return s + apply(s, b, c) + apply(s, c, a);
}

LieElement pentagon_residual(const LieElement& s, const TnQuotient& t4) {
  require_xy(s);
  if (t4.n() != 4) throw std::invalid_argument("pentagon lives in t_4");
  auto t = [&](int i, int j) { return t4.t(i, j); };
  LieElement r = apply(s, t(2, 3), t(3, 4));
  r -= apply(s, t(1, 3) + t(2, 3), t(3, 4));
  r += apply(s, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4));
  r -= apply(s, t(1, 2), t(2, 3) + t(2, 4));
  r += apply(s, t(1, 2), t(2, 3));
  return r;
}

bool pentagon_check(const LieElement& s, int degree_cap) {
  if (degree_cap > 4) throw std::invalid_argument("degree cap must be <= 4");
  int deg = 0;
  if (!s.is_homogeneous(deg)) throw std::invalid_argument("pentagon check needs a homogeneous element");
  if (s.is_zero()) return true;
  if (deg > degree_cap) throw std::invalid_argument("degree exceeds the cap");
  auto t4 = cached_t4(degree_cap);
  return t4->is_zero(pentagon_residual(s, *t4));
}

GrtCheck verify(const LieElement& s, int degree_cap) {
  GrtCheck c;
  c.antisymmetry = antisymmetry_residual(s).is_zero();
  c.hexagon = hexagon_residual(s).is_zero();
  c.pentagon = pentagon_check(s, degree_cap);
  return c;
}

std::vector<LieElement> solution_space(int degree) {
  if (degree < 1 || degree > 4) throw std::invalid_argument("degree must be in 1..4");
  auto basis = lie::lyndon_words(2, degree);
  auto t4 = cached_t4(degree);
  // rows: coordinates of the three residuals; columns: Lyndon basis of lie(x,y)_degree
  std::map<std::pair<int, Word>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    LieElement b = LieElement::basis(xy_alphabet(), degree, basis[k]);
    std::vector<std::pair<int, std::map<Word, Rational>>> parts{
        {0, antisymmetry_residual(b).terms()},
        {1, hexagon_residual(b).terms()},
        {2, t4->coordinates(pentagon_residual(b, *t4))}};
    for (const auto& [tag, coords] : parts)
      for (const auto& [w, c] : coords) {
        auto it = row_of.try_emplace({tag, w}, row_of.size()).first;
        cols[k].emplace_back(it->second, c);
      }
  }
  ratlin::SparseMatrix m(row_of.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [r, c] : cols[k]) m.add(r, k, c);
  std::vector<LieElement> out;
  for (const auto& v : ratlin::kernel_basis(m)) {
    ratlin::SparseVector sv = ratlin::primitive(ratlin::to_sparse(v));
    LieElement s(xy_alphabet(), degree);
    for (const auto& [k, c] : sv) s.add_term(basis[k], c);
    out.push_back(s);
  }
  return out;
}

LieElement derivation_delta(const LieElement& s, const LieElement& f) {
  require_xy(s);
  require_xy(f);
  int cap = std::max(s.cap(), f.cap());
  LieElement ys = bracket(y(cap), s.with_cap(cap));
  return apply_derivation(f.with_cap(cap), {LieElement(xy_alphabet(), cap), ys});
}

LieElement ihara_bracket(const LieElement& s1, const LieElement& s2) {
  int cap = std::max(s1.cap(), s2.cap());
  LieElement r = derivation_delta(s1, s2).with_cap(cap);
  r -= derivation_delta(s2, s1);
  r += bracket(s1.with_cap(cap), s2.with_cap(cap));
  return r;
}

bool dd_shape(const LieElement& s, int n) {
  if (s.alphabet() != xy_alphabet() || n < 2) return false;
  int deg = 0;
  if (!s.is_homogeneous(deg) || deg != n) return false;
  if (!s.letter_count_part(1, 0).is_zero()) return false;
  int cap = std::max(s.cap(), n);
  LieElement lead = ad_power(x(cap), y(cap), n - 1);
  LieElement part = s.letter_count_part(1, 1);
  LieElement diff = lead;
  for (const auto& [w, c] : part.terms()) diff.add_term(w, -c);
  return diff.is_zero();
}

}  // namespace gca::grt
