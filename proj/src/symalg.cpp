#include "gca/symalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gca::symalg {

int GeneratorTable::add(const std::string& name, Parity parity, int degree, int weight) {
  if (name.empty()) throw std::invalid_argument("empty generator name");
  if (index_.count(name)) throw std::invalid_argument("duplicate generator: " + name);
  Generator g{name, parity, degree, weight, -1};
  if (parity == Parity::Odd) {
    if (odd_count() >= kMaxOdd) throw std::length_error("too many odd generators");
    g.slot = odd_count();
    odd_ids_.push_back(size());
  }
  index_.emplace(name, size());
  gens_.push_back(g);
  return size() - 1;
}

int GeneratorTable::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int GeneratorTable::id(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown generator: " + name);
  return i;
}

bool Monomial::operator<(const Monomial& o) const {
  if (weight != o.weight) return weight < o.weight;
  auto cmp = std::lexicographical_compare_three_way(even.begin(), even.end(), o.even.begin(), o.even.end());
  if (cmp != 0) return cmp < 0;
  return odd < o.odd;
}

int Monomial::odd_count() const {
  int n = 0;
  for (auto w : odd) n += std::popcount(w);
  return n;
}

std::uint32_t Monomial::exponent(std::uint32_t id) const {
  for (const auto& [g, e] : even)
    if (g == id) return e;
  return 0;
}

int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
  constexpr int W = kMaxOdd / 64;
  for (int w = 0; w < W; ++w)
    if (a.odd[w] & b.odd[w]) return 0;
  int swaps = 0;
  int above = 0;  // bits of a in words strictly above the current one
  for (int w = W - 1; w >= 0; --w) {
    std::uint64_t bw = b.odd[w];
    while (bw) {
      int bit = std::countr_zero(bw);
      bw &= bw - 1;
      std::uint64_t mask = (bit == 63) ? 0 : (~std::uint64_t(0) << (bit + 1));
      swaps += above + std::popcount(a.odd[w] & mask);
    }
    above += std::popcount(a.odd[w]);
  }
  out.weight = a.weight + b.weight;
  out.even.clear();
  out.even.reserve(a.even.size() + b.even.size());
  auto i = a.even.begin(), j = b.even.begin();
  while (i != a.even.end() || j != b.even.end()) {
    if (j == b.even.end() || (i != a.even.end() && i->first < j->first)) {
      out.even.push_back(*i++);
    } else if (i == a.even.end() || j->first < i->first) {
      out.even.push_back(*j++);
    } else {
      out.even.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  for (int w = 0; w < W; ++w) out.odd[w] = a.odd[w] | b.odd[w];
  return (swaps & 1) ? -1 : 1;
}

void require_same_table(const SuperElement& a, const SuperElement& b) {
  if (a.table() != b.table()) throw std::invalid_argument("generator table mismatch");
}

SuperElement SuperElement::constant(TablePtr table, const Rational& c) {
  SuperElement e(std::move(table));
  if (c != 0) e.terms_.emplace(Monomial{}, c);
  return e;
}

SuperElement SuperElement::generator(TablePtr table, int id) {
  const Generator& g = table->gen(id);
  SuperElement e(table);
  if (g.weight > table->cutoff()) return e;
  Monomial m;
  m.weight = g.weight;
  if (g.parity == Parity::Odd)
    m.odd[g.slot >> 6] |= std::uint64_t(1) << (g.slot & 63);
  else
    m.even.emplace_back(id, 1);
  e.terms_.emplace(std::move(m), 1);
  return e;
}

SuperElement SuperElement::generator(TablePtr table, const std::string& name) {
  int id = table->id(name);
  return generator(std::move(table), id);
}

void SuperElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (table_ && m.weight > table_->cutoff()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SuperElement::constant_term() const { return coefficient(Monomial{}); }

SuperElement SuperElement::from_terms(TablePtr table, std::vector<std::pair<Monomial, Rational>> terms) {
  SuperElement r(std::move(table));
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t l = k + 1;
    Rational c = std::move(terms[k].second);
    while (l < terms.size() && terms[l].first == terms[k].first) c += terms[l++].second;
    if (c != 0 && (!r.table_ || terms[k].first.weight <= r.table_->cutoff()))
      r.terms_.emplace_hint(r.terms_.end(), std::move(terms[k].first), std::move(c));
    k = l;
  }
  return r;
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  if (o.is_zero()) return *this;
  if (!table_) table_ = o.table_;
  require_same_table(*this, o);
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  if (o.terms_.size() * 16 < terms_.size()) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  // linear merge
  Terms merged;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.emplace_hint(merged.end(), std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_hint(merged.end(), *b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_hint(merged.end(), a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  if (o.is_zero()) return *this;
  if (!table_) table_ = o.table_;
  require_same_table(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SuperElement SuperElement::operator-() const {
  SuperElement r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

SuperElement SuperElement::filter(const std::function<bool(const Monomial&)>& keep) const {
  SuperElement r(table_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

SuperElement SuperElement::parity_part(bool odd) const {
  return filter([odd](const Monomial& m) { return m.parity() == odd; });
}

SuperElement SuperElement::weight_part(int w) const {
  return filter([w](const Monomial& m) { return m.weight == w; });
}

SuperElement SuperElement::truncate(int max_weight) const {
  return filter([max_weight](const Monomial& m) { return m.weight <= max_weight; });
}

int SuperElement::max_weight() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.weight;
}

bool SuperElement::is_homogeneous_parity(bool& odd) const {
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      odd = m.parity();
      first = false;
    } else if (m.parity() != odd) {
      return false;
    }
  }
  if (first) odd = false;
  return true;
}

std::string SuperElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (const auto& [g, e] : m.even) {
      std::string f = table_->gen(g).name;
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    for (int s = 0; s < table_->odd_count(); ++s)
      if (m.has_odd(s)) factors.push_back(table_->gen(table_->odd_id(s)).name);
    if (factors.empty()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
SuperElement operator*(const Rational& c, SuperElement a) { return a *= c; }
SuperElement operator*(const SuperElement& a, const SuperElement& b) { return mul(a, b); }

SuperElement mul(const SuperElement& a, const SuperElement& b) {
  if (a.is_zero() || b.is_zero()) return SuperElement(a.table() ? a.table() : b.table());
  require_same_table(a, b);
  SuperElement r(a.table());
  int cutoff = a.table()->cutoff();
  Monomial m;
  Rational c;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.weight + b.terms().begin()->first.weight > cutoff) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.weight + mb.weight > cutoff) break;  // terms are ordered by weight
      int s = multiply_monomials(ma, mb, m);
      if (s == 0) continue;
      mpq_mul(c.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      if (s < 0) mpq_neg(c.get_mpq_t(), c.get_mpq_t());
      r.add_term(m, c);
    }
  }
  return r;
}

SuperElement derive(const SuperElement& a, int id) {
  const TablePtr& t = a.table();
  SuperElement r(t);
  if (a.is_zero()) return r;
  const Generator& g = t->gen(id);
  for (const auto& [m, c] : a.terms()) {
    if (g.parity == Parity::Odd) {
      if (!m.has_odd(g.slot)) continue;
      int below = 0;
      int w = g.slot >> 6, bit = g.slot & 63;
      for (int k = 0; k < w; ++k) below += std::popcount(m.odd[k]);
      below += std::popcount(m.odd[w] & ((std::uint64_t(1) << bit) - 1));
      Monomial n = m;
      n.odd[w] &= ~(std::uint64_t(1) << bit);
      n.weight -= g.weight;
      r.add_term(n, (below & 1) ? Rational(-c) : c);
    } else {
      Monomial n = m;
      for (auto it = n.even.begin(); it != n.even.end(); ++it) {
        if (it->first != static_cast<std::uint32_t>(id)) continue;
        std::uint32_t e = it->second;
        if (e == 1)
          n.even.erase(it);
        else
          --it->second;
        n.weight -= g.weight;
        r.add_term(n, c * e);
        break;
      }
    }
  }
  return r;
}

SuperElement derive(const SuperElement& a, const std::string& name) {
  if (!a.table()) throw std::invalid_argument("element without table");
  return derive(a, a.table()->id(name));
}

SuperElement substitute(const SuperElement& a, const std::map<int, SuperElement>& images) {
  const TablePtr& t = a.table();
  SuperElement r(t);
  auto image = [&](int id) {
    auto it = images.find(id);
    return it == images.end() ? SuperElement::generator(t, id) : it->second;
  };
  for (const auto& [m, c] : a.terms()) {
    SuperElement p = SuperElement::constant(t, c);
    for (const auto& [g, e] : m.even) {
      SuperElement img = image(g);
      for (std::uint32_t k = 0; k < e && !p.is_zero(); ++k) p = mul(p, img);
    }
    for (int s = 0; s < t->odd_count() && !p.is_zero(); ++s)
      if (m.has_odd(s)) p = mul(p, image(t->odd_id(s)));
    r += p;
  }
  return r;
}

SuperElement transfer(const SuperElement& a, const TablePtr& target) {
  SuperElement r(target);
  if (a.is_zero()) return r;
  const TablePtr& src = a.table();
  for (const auto& [m, c] : a.terms()) {
    SuperElement p = SuperElement::constant(target, c);
    for (const auto& [g, e] : m.even) {
      SuperElement img = SuperElement::generator(target, src->gen(g).name);
      for (std::uint32_t k = 0; k < e; ++k) p = mul(p, img);
    }
    for (int s = 0; s < src->odd_count(); ++s)
      if (m.has_odd(s)) p = mul(p, SuperElement::generator(target, src->gen(src->odd_id(s)).name));
    r += p;
  }
  return r;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  std::string integer() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw std::invalid_argument("expected integer at position " + std::to_string(b));
    return s.substr(b, i - b);
  }
  std::string name() {
    skip();
    std::size_t b = i;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    }
    if (b == i) throw std::invalid_argument("expected generator name at position " + std::to_string(b));
    return s.substr(b, i - b);
  }
};

}  // namespace

SuperElement parse(const TablePtr& table, const std::string& text) {
  Lexer lx{text};
  SuperElement r(table);
  bool first = true;
  while (!lx.at_end()) {
    int sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in: " + text);
    }
    first = false;
    Rational coef = sign;
    SuperElement term = SuperElement::constant(table, 1);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Rational c(lx.integer());
      if (lx.eat('/')) {
        Rational den(lx.integer());
        if (den == 0) throw std::invalid_argument("zero denominator");
        c /= den;
      }
      coef *= c;
      need_factor = lx.eat('*');
    }
    while (need_factor) {
      std::string nm = lx.name();
      int id = table->find(nm);
      if (id < 0) throw std::invalid_argument("unknown generator: " + nm);
      long e = 1;
      if (lx.eat('^')) e = std::stol(lx.integer());
      SuperElement g = SuperElement::generator(table, id);
      for (long k = 0; k < e; ++k) term = mul(term, g);
      need_factor = lx.eat('*');
    }
    term *= coef;
    r += term;
  }
  if (first) throw std::invalid_argument("empty expression");
  return r;
}

void TensorElement::check(const Index& idx) const {
  if (static_cast<int>(idx.first.size()) != p_ || static_cast<int>(idx.second.size()) != q_)
    throw std::invalid_argument("tensor index shape mismatch");
  for (int a : idx.first)
    if (a < 1 || a > d_) throw std::out_of_range("tensor index");
  for (int a : idx.second)
    if (a < 1 || a > d_) throw std::out_of_range("tensor index");
}

SuperElement TensorElement::get(const Index& idx) const {
  check(idx);
  auto it = comps_.find(idx);
  return it == comps_.end() ? SuperElement(table_) : it->second;
}

void TensorElement::set(const Index& idx, const SuperElement& v) {
  check(idx);
  if (v.is_zero())
    comps_.erase(idx);
  else
    comps_[idx] = v;
}

void TensorElement::add(const Index& idx, const SuperElement& v) {
  check(idx);
  if (v.is_zero()) return;
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(idx, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) comps_.erase(it);
}

std::vector<TensorElement::Index> TensorElement::all_indices() const {
  std::vector<Index> out;
  int total = p_ + q_;
  std::vector<int> cur(total, 1);
  while (true) {
    out.emplace_back(std::vector<int>(cur.begin(), cur.begin() + p_),
                     std::vector<int>(cur.begin() + p_, cur.end()));
    int k = total - 1;
    while (k >= 0 && cur[k] == d_) cur[k--] = 1;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [i, v] : o.comps_) add(i, v);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [i, v] : o.comps_) add(i, -v);
  return *this;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && comps_ == o.comps_;
}

TensorElement TensorElement::truncate(int max_weight) const {
  TensorElement r(table_, d_, p_, q_);
  for (const auto& [i, v] : comps_) r.set(i, v.truncate(max_weight));
  return r;
}

}  // namespace gca::symalg
