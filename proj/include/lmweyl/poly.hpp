#pragma once

// Univariate polynomials over Q and reduced rational functions.

#include <lmweyl/rational.hpp>

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lmweyl {

namespace detail {

// Appends "c*mono" to a sum being printed, folding signs and unit coefficients.
inline void append_term(std::string& out, const Rat& c, const std::string& mono) {
  bool negative = sgn(c) < 0;
  Rat mag = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (mono.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += to_string(mag) + "*" + mono;
  }
}

inline std::string power_string(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Polynomial in x with rational coefficients. Coefficients are stored
/// densely by exponent with no trailing zeros, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly x() { return Poly{0, 1}; }
  static Poly monomial(const Rat& c, int e) {
    if (c == 0) return {};
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }
  /// (x - c)^e
  static Poly shifted_power(const Rat& c, int e) {
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1);
    for (int j = 0; j <= e; ++j)
      v[j] = Rat(binomial(e, j)) * rat_pow(-c, e - j);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^e (zero outside the stored range).
  Rat coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[e];
  }
  const Rat& leading() const { return coeffs_.back(); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  Rat eval(const Rat& at) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t e = 1; e < coeffs_.size(); ++e) v[e - 1] = coeffs_[e] * static_cast<long>(e);
    return Poly(std::move(v));
  }

  Poly derivative(int order) const {
    Poly out = *this;
    for (int i = 0; i < order && !out.is_zero(); ++i) out = out.derivative();
    return out;
  }

  Poly monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    Rat lead = leading();
    for (auto& c : out.coeffs_) c /= lead;
    return out;
  }

  Poly pow(unsigned e) const {
    Poly out = 1, base = *this;
    while (e) {
      if (e & 1u) out *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& a : coeffs_) a *= c;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Multiplies by x^e.
  Poly shift_up(int e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Rat> v(static_cast<std::size_t>(e), Rat(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  std::string str() const {
    std::string out;
    for (int e = degree(); e >= 0; --e)
      if (coeffs_[e] != 0) detail::append_term(out, coeffs_[e], detail::power_string("x", e));
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// a = quotient*b + remainder with deg(remainder) < deg(b).
inline PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int db = b.degree();
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rat& lead = b.leading();
  auto bc = b.coeffs();
  for (int e = a.degree(); e >= db; --e) {
    if (rem[e] == 0) continue;
    Rat q = rem[e] / lead;
    quo[e - db] = q;
    for (int j = 0; j <= db; ++j) rem[e - db + j] -= q * bc[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Reduced fraction numerator/denominator with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// ratfunc_reduce: brings n/d to lowest terms with monic denominator.
  static RatFunc reduce(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc out;
    if (n.is_zero()) return out;
    Poly g = poly_gcd(n, d);
    Poly nn = poly_divmod(n, g).quotient;
    Poly dd = poly_divmod(d, g).quotient;
    Rat lead = dd.leading();
    out.num_ = nn * (Rat(1) / lead);
    out.den_ = dd.monic();
    return out;
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative());
    return reduce(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return reduce(a.num_ + b.num_, a.den_);
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + RatFunc(-b.num_, b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  // Caller guarantees the pair is already reduced.
  RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}

  Poly num_;
  Poly den_;
};

}  // namespace lmweyl
