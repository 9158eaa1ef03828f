#pragma once

// Exact scalars. Rat is GMP's mpq_class, which keeps values in lowest terms
// with a positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lmweyl {

using Rat = mpq_class;
using Int = mpz_class;

/// Degree of the zero polynomial / zero operator.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw ParseError("malformed rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Int n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational: '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// n!/(n-k)!, zero when k > n.
inline Int falling(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n - i;
  return out;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

}  // namespace lmweyl
