#include "gca/lie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gca::lie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + k, w.end())) return false;
  return true;
}

std::vector<Word> lyndon_words(int letters, int length) {
  std::vector<Word> out;
  if (letters <= 0 || length <= 0) return out;
  // Duval's generation in lexicographic order
  Word w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == letters - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard factorization needs length >= 2");
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word v(w.begin() + k, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + k), v};
  }
  throw std::logic_error("no Lyndon suffix");
}

void assoc_add(AssocPoly& a, const AssocPoly& b, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, x] : b) {
    auto [it, fresh] = a.try_emplace(w, c * x);
    if (!fresh) {
      it->second += c * x;
      if (it->second == 0) a.erase(it);
    }
  }
}

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b, int cap) {
  AssocPoly r;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      if (cap >= 0 && static_cast<int>(u.size() + v.size()) > cap) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      assoc_add(r, AssocPoly{{w, x * y}});
    }
  return r;
}

AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b, int cap) {
  AssocPoly r = assoc_mul(a, b, cap);
  assoc_add(r, assoc_mul(b, a, cap), -1);
  return r;
}

AssocPoly expand(const Word& w) {
  thread_local std::map<Word, AssocPoly> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  AssocPoly r;
  if (w.size() == 1) {
    r[w] = 1;
  } else {
    auto [u, v] = standard_factorization(w);
    r = assoc_commutator(expand(u), expand(v), -1);
  }
  cache.emplace(w, r);
  return r;
}

LieElement::LieElement(std::vector<std::string> alphabet, int cap) : alphabet_(std::move(alphabet)), cap_(cap) {}

int LieElement::letter(const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) throw std::invalid_argument("unknown generator: " + name);
  return static_cast<int>(it - alphabet_.begin());
}

LieElement LieElement::generator(const std::vector<std::string>& alphabet, int cap, int letter) {
  return basis(alphabet, cap, Word{letter});
}

LieElement LieElement::generator(const std::vector<std::string>& alphabet, int cap, const std::string& name) {
  LieElement e(alphabet, cap);
  return basis(alphabet, cap, Word{e.letter(name)});
}

LieElement LieElement::basis(const std::vector<std::string>& alphabet, int cap, const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("not a Lyndon word");
  for (int l : lyndon)
    if (l < 0 || l >= static_cast<int>(alphabet.size())) throw std::invalid_argument("letter out of range");
  if (static_cast<int>(lyndon.size()) > cap) throw std::overflow_error("degree overflow");
  LieElement e(alphabet, cap);
  e.terms_[lyndon] = 1;
  return e;
}

LieElement LieElement::from_assoc(const std::vector<std::string>& alphabet, int cap, const AssocPoly& p) {
  LieElement e(alphabet, cap);
  AssocPoly rest = p;
  for (auto it = rest.begin(); it != rest.end();)
    it = it->second == 0 ? rest.erase(it) : std::next(it);
  // the least word of a Lie polynomial is Lyndon and leads its basis expansion
  while (!rest.empty()) {
    Word w = rest.begin()->first;
    Rational c = rest.begin()->second;
    if (static_cast<int>(w.size()) > cap) throw std::overflow_error("degree overflow");
    if (!is_lyndon(w)) throw std::invalid_argument("not a Lie element");
    e.terms_[w] = c;
    assoc_add(rest, expand(w), -c);
  }
  return e;
}

void LieElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word");
  if (static_cast<int>(w.size()) > cap_) throw std::overflow_error("degree overflow");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LieElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

LieElement LieElement::degree_part(int k) const {
  LieElement e(alphabet_, cap_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == k) e.terms_.emplace(w, c);
  return e;
}

LieElement LieElement::letter_count_part(int letter, int count) const {
  LieElement e(alphabet_, cap_);
  for (const auto& [w, c] : terms_)
    if (std::count(w.begin(), w.end(), letter) == count) e.terms_.emplace(w, c);
  return e;
}

bool LieElement::is_homogeneous(int& degree) const {
  degree = terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) != degree) return false;
  return true;
}

LieElement LieElement::with_cap(int cap) const {
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) > cap) throw std::overflow_error("degree overflow");
  LieElement e = *this;
  e.cap_ = cap;
  return e;
}

AssocPoly LieElement::to_assoc() const {
  AssocPoly r;
  for (const auto& [w, c] : terms_) assoc_add(r, expand(w), c);
  return r;
}

namespace {

std::string bracket_text(const Word& w, const std::vector<std::string>& alphabet) {
  if (w.size() == 1) return alphabet[w[0]];
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_text(u, alphabet) + "," + bracket_text(v, alphabet) + "]";
}

void require_same(const LieElement& a, const LieElement& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

std::string LieElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (a != 1) os << a.get_str() << "*";
    os << bracket_text(w, alphabet_);
    first = false;
  }
  return os.str();
}

LieElement& LieElement::operator+=(const LieElement& o) {
  require_same(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  require_same(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement e = *this;
  e *= -1;
  return e;
}

LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

LieElement bracket(const LieElement& a, const LieElement& b) {
  require_same(a, b);
  int cap = std::max(a.cap(), b.cap());
  return LieElement::from_assoc(a.alphabet(), cap, assoc_commutator(a.to_assoc(), b.to_assoc(), -1));
}

LieElement ad_power(const LieElement& x, const LieElement& y, int k) {
  LieElement r = y;
  for (int i = 0; i < k; ++i) r = bracket(x, r);
  return r;
}

LieElement substitute(const LieElement& a, const std::vector<LieElement>& images) {
  if (images.size() != a.alphabet().size()) throw std::invalid_argument("one image per letter");
  const auto& target = images.front().alphabet();
  int cap = images.front().cap();
  for (const auto& im : images) require_same(im, images.front());
  std::vector<AssocPoly> img;
  for (const auto& im : images) img.push_back(im.to_assoc());
  AssocPoly r;
  for (const auto& [w, c] : a.to_assoc()) {
    AssocPoly p{{Word{}, c}};
    for (int l : w) p = assoc_mul(p, img[l], -1);
    assoc_add(r, p);
  }
  return LieElement::from_assoc(target, cap, r);
}

LieElement apply_derivation(const LieElement& a, const std::vector<LieElement>& letter_images) {
  if (letter_images.size() != a.alphabet().size()) throw std::invalid_argument("one image per letter");
  std::vector<AssocPoly> img;
  for (const auto& im : letter_images) {
    require_same(a, im);
    img.push_back(im.to_assoc());
  }
  AssocPoly r;
  for (const auto& [w, c] : a.to_assoc())
    for (std::size_t k = 0; k < w.size(); ++k) {
      AssocPoly left{{Word(w.begin(), w.begin() + k), c}};
      AssocPoly right{{Word(w.begin() + k + 1, w.end()), 1}};
      assoc_add(r, assoc_mul(assoc_mul(left, img[w[k]], -1), right, -1));
    }
  int cap = a.cap();
  for (const auto& im : letter_images) cap = std::max(cap, im.cap());
  return LieElement::from_assoc(a.alphabet(), cap, r);
}

namespace {

// A parsed value is either a scalar or a Lie element.
struct Value {
  bool scalar = true;
  Rational q;
  LieElement lie;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& alphabet, int cap)
      : s_(text), alphabet_(alphabet), cap_(cap) {}

  LieElement run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (v.scalar) {
      if (v.q != 0) fail("a nonzero constant is not a Lie element");
      return LieElement(alphabet_, cap_);
    }
    return v.lie;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& alphabet_;
  int cap_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Value lie(LieElement e) { return Value{false, 0, std::move(e)}; }

  Value add(Value a, const Value& b, int sign) {
    if (a.scalar && b.scalar) {
      a.q += sign * b.q;
      return a;
    }
    if (a.scalar || b.scalar) {
      const Value& s = a.scalar ? a : b;
      if (s.q != 0) fail("cannot add a constant to a Lie element");
      if (a.scalar) return lie(sign < 0 ? -b.lie : b.lie);
      return a;
    }
    if (sign < 0)
      a.lie -= b.lie;
    else
      a.lie += b.lie;
    return a;
  }

  Value mul(Value a, const Value& b) {
    if (a.scalar && b.scalar) {
      a.q *= b.q;
      return a;
    }
    if (!a.scalar && !b.scalar) fail("use brackets to multiply Lie elements");
    if (a.scalar) return lie(a.q * b.lie);
    a.lie *= b.q;
    return a;
  }

  Value expr() {
    Value v{true, 0, {}};
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    v = add(v, term(), sign);
    for (;;) {
      if (eat('+')) v = add(v, term(), 1);
      else if (eat('-')) v = add(v, term(), -1);
      else return v;
    }
  }

  Value term() {
    Value v = factor();
    while (eat('*')) v = mul(v, factor());
    return v;
  }

  Value factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (eat('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (eat('[')) {
      Value a = expr();
      expect(',');
      Value b = expr();
      expect(']');
      if (a.scalar || b.scalar) {
        if ((a.scalar && a.q != 0) || (b.scalar && b.q != 0)) fail("bracket of a constant");
        return Value{true, 0, {}};
      }
      return lie(bracket(a.lie, b.lie));
    }
    if (eat('-')) {
      Value v = factor();
      return mul(Value{true, -1, {}}, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        Rational q(s_.substr(start, pos_ - start));
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return Value{true, q, {}};
      } catch (const std::exception&) {
        fail("bad number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (std::find(alphabet_.begin(), alphabet_.end(), name) == alphabet_.end()) fail("unknown generator " + name);
      return lie(LieElement::generator(alphabet_, cap_, name));
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

LieElement parse(const std::string& text, const std::vector<std::string>& alphabet, int cap) {
  return Parser(text, alphabet, cap).run();
}

}  // namespace gca::lie
