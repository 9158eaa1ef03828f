#pragma once

// The first Weyl algebra A = Q<x, d>/(dx - xd - 1), elements kept in normal
// order sum c_{a,b} x^a d^b, with the weighted filtration deg x = w1,
// deg d = w2 and symbols in the commutative ring gr A = Q[X, Y].

#include <lmweyl/poly.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lmweyl {

/// Exponent pair of x^a d^b (or of X^a Y^b in gr A).
struct Monomial {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Positive integer filtration weight.
struct Weight {
  int w1 = 1;
  int w2 = 1;

  Weight() = default;
  Weight(int x_weight, int d_weight) : w1(x_weight), w2(d_weight) {
    if (w1 < 1 || w2 < 1) throw std::invalid_argument("weights must be positive integers");
  }

  int of(const Monomial& m) const { return m.a * w1 + m.b * w2; }
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string str() const { return std::to_string(w1) + "," + std::to_string(w2); }
};

class WeylEl {
 public:
  using Terms = std::map<Monomial, Rat>;

  WeylEl() = default;
  WeylEl(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[{0, 0}] = c;
  }
  WeylEl(int c) : WeylEl(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static WeylEl term(const Rat& c, int a, int b) {
    WeylEl out;
    if (c != 0) out.terms_[{a, b}] = c;
    return out;
  }
  static WeylEl x() { return term(1, 1, 0); }
  static WeylEl d() { return term(1, 0, 1); }
  /// The operator of multiplication by a polynomial in x.
  static WeylEl from_poly(const Poly& p) {
    WeylEl out;
    for (int e = 0; e <= p.degree(); ++e)
      if (p.coeff(e) != 0) out.terms_[{e, 0}] = p.coeff(e);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Rat& c, Monomial m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  WeylEl& operator+=(const WeylEl& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
  }
  WeylEl& operator-=(const WeylEl& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
  }
  friend WeylEl operator+(WeylEl p, const WeylEl& q) { return p += q; }
  friend WeylEl operator-(WeylEl p, const WeylEl& q) { return p -= q; }
  friend WeylEl operator-(WeylEl p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend WeylEl operator*(const Rat& s, WeylEl p) {
    if (s == 0) return {};
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }
  friend WeylEl operator*(const WeylEl& p, const WeylEl& q);
  friend bool operator==(const WeylEl&, const WeylEl&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// Normal-ordered product, using d^b x^a = sum_i C(b,i) a!/(a-i)! x^{a-i} d^{b-i}.
inline WeylEl operator*(const WeylEl& p, const WeylEl& q) {
  WeylEl out;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) {
      Rat c = cp * cq;
      int top = std::min(mp.b, mq.a);
      for (int i = 0; i <= top; ++i) {
        Int k = binomial(mp.b, i) * falling(mq.a, i);
        out.add_term(c * Rat(k), {mp.a + mq.a - i, mp.b + mq.b - i});
      }
    }
  return out;
}

inline WeylEl mul(const WeylEl& p, const WeylEl& q) { return p * q; }

inline WeylEl pow(const WeylEl& p, unsigned e) {
  WeylEl out = 1;
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

/// Terms printed by descending total degree, then descending x-exponent.
inline std::string WeylEl::str() const {
  std::vector<std::pair<Monomial, Rat>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    int dl = l.first.a + l.first.b, dr = r.first.a + r.first.b;
    if (dl != dr) return dl > dr;
    return l.first.a > r.first.a;
  });
  std::string out;
  for (const auto& [m, c] : ordered) {
    std::string mono = detail::power_string("x", m.a);
    std::string dpart = detail::power_string("d", m.b);
    if (!mono.empty() && !dpart.empty()) mono += "*";
    mono += dpart;
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  WeylEl parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty operator expression");
    WeylEl out;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += sign * parse_term();
      first = false;
    }
    return out;
  }

 private:
  WeylEl parse_term() {
    WeylEl term = 1;
    while (true) {
      skip_ws();
      term = term * parse_factor();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return term;
    }
  }

  WeylEl parse_factor() {
    if (at_end()) fail("unexpected end of input");
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad rational");
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      return WeylEl(parse_rat(s_.substr(start, pos_ - start)));
    }
    if (ch == 'x' || ch == 'd') {
      ++pos_;
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent");
        e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      return ch == 'x' ? WeylEl::term(1, e, 0) : pow(WeylEl::d(), static_cast<unsigned>(e));
    }
    if (ch == '(') {
      ++pos_;
      std::size_t depth = 1, start = pos_;
      while (!at_end() && depth) {
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parenthesis");
      return ExprParser(s_.substr(start, pos_ - start - 1)).parse();
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form "c*x^a*d^b + ..." ("d" is the derivation). Factors in
/// a product are multiplied in the Weyl algebra, so "d*x" reads as x*d + 1.
inline WeylEl parse_weyl(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Parses a polynomial in x using the same grammar.
inline Poly parse_poly(std::string_view text) {
  WeylEl e = parse_weyl(text);
  std::vector<Rat> coeffs;
  for (const auto& [m, c] : e.terms()) {
    if (m.b != 0) throw ParseError("polynomial may not contain d: '" + std::string(text) + "'");
    if (static_cast<int>(coeffs.size()) <= m.a) coeffs.resize(static_cast<std::size_t>(m.a) + 1);
    coeffs[m.a] = c;
  }
  return Poly(std::move(coeffs));
}

/// Action on C[x]: x multiplies, d differentiates.
inline Poly apply_poly(const WeylEl& p, const Poly& f) {
  Poly out;
  int cached_order = 0;
  Poly deriv = f;
  // terms_ are ordered by (a, b); group by b to reuse derivatives.
  std::map<int, std::vector<std::pair<int, Rat>>> by_order;
  for (const auto& [m, c] : p.terms()) by_order[m.b].emplace_back(m.a, c);
  for (const auto& [b, list] : by_order) {
    deriv = deriv.derivative(b - cached_order);
    cached_order = b;
    for (const auto& [a, c] : list) out += (c * deriv).shift_up(a);
  }
  return out;
}

/// The same action extended to rational functions by the quotient rule.
inline RatFunc apply_ratfunc(const WeylEl& p, const RatFunc& r) {
  RatFunc out;
  int cached_order = 0;
  RatFunc deriv = r;
  std::map<int, Poly> by_order;  // b -> polynomial multiplier sum_a c x^a
  for (const auto& [m, c] : p.terms()) by_order[m.b] += Poly::monomial(c, m.a);
  for (const auto& [b, mult] : by_order) {
    for (; cached_order < b; ++cached_order) deriv = deriv.derivative();
    out = out + RatFunc(mult) * deriv;
  }
  return out;
}

/// Weighted degree; kMinusInfinity for zero.
inline int wdegree(const WeylEl& p, const Weight& w) {
  int best = kMinusInfinity;
  for (const auto& [m, c] : p.terms()) best = std::max(best, w.of(m));
  return best;
}

/// Homogeneous element of gr A = Q[X, Y].
class SymbolPoly {
 public:
  using Terms = std::map<Monomial, Rat>;

  SymbolPoly() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  void add_term(const Rat& c, Monomial m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend SymbolPoly operator*(const SymbolPoly& p, const SymbolPoly& q) {
    SymbolPoly out;
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) out.add_term(cp * cq, {mp.a + mq.a, mp.b + mq.b});
    return out;
  }
  friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

  std::string str() const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono = detail::power_string("X", it->first.a);
      std::string y = detail::power_string("Y", it->first.b);
      if (!mono.empty() && !y.empty()) mono += "*";
      detail::append_term(out, it->second, mono + y);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Terms terms_;
};

/// Weighted-degree-k part of p as a commutative polynomial. Requires
/// wdegree(p) <= k; below-top degrees give zero.
inline SymbolPoly top_component(const WeylEl& p, const Weight& w, int k) {
  if (wdegree(p, w) > k)
    throw std::domain_error("top_component: element has weighted degree above " + std::to_string(k));
  SymbolPoly out;
  for (const auto& [m, c] : p.terms())
    if (w.of(m) == k) out.add_term(c, m);
  return out;
}

/// Exponent pairs with a*w1 + b*w2 <= k, ordered by weighted degree and then
/// by descending x-exponent.
inline std::vector<Monomial> monomial_basis(const Weight& w, int k) {
  std::vector<Monomial> out;
  for (int d = 0; d <= k; ++d)
    for (int a = d / w.w1; a >= 0; --a) {
      int rest = d - a * w.w1;
      if (rest % w.w2 == 0) out.push_back({a, rest / w.w2});
    }
  return out;
}

/// Number of monomials of weighted degree at most k (dim of the k-th filtered piece).
inline long dim_A(const Weight& w, int k) {
  if (k < 0) return 0;
  long count = 0;
  for (int b = 0; b * w.w2 <= k; ++b) count += (k - b * w.w2) / w.w1 + 1;
  return count;
}

}  // namespace lmweyl
