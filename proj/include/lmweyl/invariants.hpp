#pragma once

// Hilbert sequences of A, M_V and hom spaces, their eventual quadratic fits,
// and the invariants read off from them:
//   p_D  = dim A_k - dim D_k for k >> 0 (codimension of gr D in gr A),
//   n    = constant in dim M_k = (k+a+1)(k+a+2)/2 - n,
//   p_12 = constant in the same fit of Hom(M_1, M_2).

#include <lmweyl/graded.hpp>

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lmweyl {

/// k_max too small to see the eventual behaviour of a sequence.
class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tail of a sequence cannot be a Hilbert function of a rank-1 object.
class NonPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a Hilbert sequence counts.
struct HilbertSource {
  enum class Kind { Algebra, Module, Hom };
  Kind kind = Kind::Algebra;
  SubspaceSpec first;
  SubspaceSpec second;

  static HilbertSource algebra() { return {}; }
  static HilbertSource module(const SubspaceSpec& v) { return {Kind::Module, v, {}}; }
  static HilbertSource hom(const SubspaceSpec& v1, const SubspaceSpec& v2) { return {Kind::Hom, v1, v2}; }

  std::string str() const {
    switch (kind) {
      case Kind::Algebra:
        return "A";
      case Kind::Module:
        return "module(" + first.name() + ")";
      case Kind::Hom:
        return "hom(" + first.name() + "," + second.name() + ")";
    }
    return {};
  }

  long dim(const Weight& w, int k) const {
    switch (kind) {
      case Kind::Algebra:
        return dim_A(w, k);
      case Kind::Module:
        return module_dim(first, w, k);
      case Kind::Hom:
        return hom_dim(first, second, w, k);
    }
    return 0;
  }
};

struct HilbertSeq {
  Weight weight;
  int k_min = 0;
  int k_max = 0;
  std::vector<long> values;
  std::string source;

  long at(int k) const { return values.at(static_cast<std::size_t>(k - k_min)); }
  std::size_t size() const { return values.size(); }
};

namespace detail {

// Evaluates fn(i) for i in [0, n) on worker threads; results keep index order.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(n);
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  // Largest indices are the most expensive; hand them out first, round robin.
  std::vector<std::future<void>> tasks;
  for (std::size_t t = 0; t < workers; ++t)
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t j = t; j < n; j += workers) {
        std::size_t i = n - 1 - j;
        out[i] = fn(i);
      }
    }));
  for (auto& f : tasks) f.get();
  return out;
}

inline long triangle(long m) { return (m + 1) * (m + 2) / 2; }

}  // namespace detail

inline HilbertSeq hilbert_seq(const HilbertSource& src, const Weight& w, int k_min, int k_max) {
  if (k_min > k_max) throw std::invalid_argument("hilbert_seq: k_min > k_max");
  HilbertSeq h{w, k_min, k_max, {}, src.str()};
  h.values = detail::parallel_map(static_cast<std::size_t>(k_max - k_min + 1),
                                  [&](std::size_t i) { return src.dim(w, k_min + static_cast<int>(i)); });
  return h;
}

/// value(k) = (k+shift+1)(k+shift+2)/2 - constant on [window_lo, window_hi].
struct FitResult {
  int shift = 0;
  long constant = 0;
  int window_lo = 0;
  int window_hi = 0;
  bool exact = false;

  long predict(int k) const { return detail::triangle(k + shift) - constant; }
  int window_length() const { return window_hi - window_lo + 1; }
};

/// Fits the tail of h to (k+a+1)(k+a+2)/2 - c, with a read from the last
/// difference; the window is the maximal suffix where the formula is exact.
inline FitResult fit_euler(const HilbertSeq& h) {
  if (h.size() < 5)
    throw NotStabilized("fit needs at least 5 values (k_max - k_min >= 4); raise --kmax");
  const int big_k = h.k_max;
  const long diff = h.at(big_k) - h.at(big_k - 1);
  FitResult fit;
  fit.shift = static_cast<int>(diff - big_k - 1);
  fit.constant = detail::triangle(big_k + fit.shift) - h.at(big_k);
  fit.window_hi = big_k;
  fit.window_lo = big_k;
  while (fit.window_lo > h.k_min && fit.predict(fit.window_lo - 1) == h.at(fit.window_lo - 1)) --fit.window_lo;
  fit.exact = fit.window_length() >= 3;
  if (!fit.exact) {
    if (h.at(big_k) < h.at(big_k - 1) || h.at(big_k - 1) < h.at(big_k - 2))
      throw NonPolynomial("sequence " + h.source + " decreases at its tail");
    throw NotStabilized("Hilbert sequence of " + h.source + " has not reached its quadratic regime by k = " +
                        std::to_string(big_k) + "; raise --kmax");
  }
  return fit;
}

/// Number of trailing entries that must agree before a codimension sequence
/// counts as stable. Plateaus in the middle are longer for larger weights.
inline int stable_window(const Weight& w) { return std::max(3, w.w1 + w.w2 + 1); }

struct LmResult {
  long p_D = 0;
  int stable_from = 0;
  std::vector<long> p_sequence;  // k = 0..k_max
  HilbertSeq d_seq;
};

/// p(k) = dim A_k - dim D_k; its stable value is the LM invariant.
inline LmResult lm_invariant(const SubspaceSpec& v, const Weight& w, int k_max) {
  if (k_max < 4) throw std::invalid_argument("lm_invariant requires k_max >= 4");
  LmResult out;
  out.d_seq = hilbert_seq(HilbertSource::hom(v, v), w, 0, k_max);
  for (int k = 0; k <= k_max; ++k) out.p_sequence.push_back(dim_A(w, k) - out.d_seq.at(k));
  for (std::size_t i = 1; i < out.p_sequence.size(); ++i)
    if (out.p_sequence[i] < out.p_sequence[i - 1])
      throw std::logic_error("codimension dim A_k - dim D_k decreased at k = " + std::to_string(i) + " for " +
                             v.name());
  const long last = out.p_sequence.back();
  int from = k_max;
  while (from > 0 && out.p_sequence[from - 1] == last) --from;
  out.stable_from = from;
  if (k_max - from + 1 < stable_window(w))
    throw NotStabilized("codimension sequence for " + v.name() + " at weight (" + w.str() +
                        ") not constant over its last " + std::to_string(stable_window(w)) +
                        " entries by k = " + std::to_string(k_max) + "; raise --kmax");
  out.p_D = last;
  return out;
}

struct ChernResult {
  long n = 0;
  int shift = 0;
  bool negative = false;
  FitResult fit;
  HilbertSeq m_seq;
};

/// n from the fit of dim M_k at weight (1,1); the shift absorbs the choice of embedding.
inline ChernResult chern_n(const SubspaceSpec& v, int k_max) {
  ChernResult out;
  out.m_seq = hilbert_seq(HilbertSource::module(v), Weight{1, 1}, 0, k_max);
  out.fit = fit_euler(out.m_seq);
  out.n = out.fit.constant;
  out.shift = out.fit.shift;
  out.negative = out.n < 0;
  return out;
}

struct T2Result {
  ChernResult chern;
  LmResult lm;
  FitResult d_fit;
  bool d_fit_canonical = false;  // shift 0 and constant p_D
  bool ok = false;               // p_D == 2n
};

/// Checks p_D = 2n at weight (1,1), and that D's own fit has shift 0 and constant p_D.
inline T2Result verify_t2(const SubspaceSpec& v, int k_max) {
  T2Result out;
  out.chern = chern_n(v, k_max);
  out.lm = lm_invariant(v, Weight{1, 1}, k_max);
  out.d_fit = fit_euler(out.lm.d_seq);
  out.d_fit_canonical = out.d_fit.shift == 0 && out.d_fit.constant == out.lm.p_D;
  out.ok = out.d_fit_canonical && !out.chern.negative && out.lm.p_D == 2 * out.chern.n;
  return out;
}

struct RelativeResult {
  long p_12 = 0;
  int shift = 0;
  long n1 = 0;
  long n2 = 0;
  FitResult fit;
  HilbertSeq hom_seq;
  bool ok = false;
};

/// p_12 from the fit of Hom(M_1, M_2), compared with n_1 + n_2.
inline RelativeResult relative_invariant(const SubspaceSpec& v1, const SubspaceSpec& v2, int k_max) {
  RelativeResult out;
  out.hom_seq = hilbert_seq(HilbertSource::hom(v1, v2), Weight{1, 1}, 0, k_max);
  out.fit = fit_euler(out.hom_seq);
  out.p_12 = out.fit.constant;
  out.shift = out.fit.shift;
  out.n1 = chern_n(v1, k_max).n;
  out.n2 = chern_n(v2, k_max).n;
  out.ok = out.p_12 == out.n1 + out.n2;
  return out;
}

struct DualResult {
  long n = 0;
  long dual_constant = 0;
  int dual_shift = 0;
  HilbertSeq dual_seq;
  bool ok = false;
};

/// The dual Hom(M_V, A) must have the same fitted constant as M_V.
inline DualResult dual_check(const SubspaceSpec& v, int k_max) {
  DualResult out;
  out.n = chern_n(v, k_max).n;
  out.dual_seq = hilbert_seq(HilbertSource::hom(v, trivial_spec()), Weight{1, 1}, 0, k_max);
  FitResult fit = fit_euler(out.dual_seq);
  out.dual_constant = fit.constant;
  out.dual_shift = fit.shift;
  out.ok = out.dual_constant == out.n;
  return out;
}

struct WeightResult {
  std::vector<std::pair<Weight, LmResult>> per_weight;
  bool ok = false;
};

/// p_D computed at each weight; ok iff all agree. Throws NotStabilized naming
/// every weight that did not settle.
inline WeightResult weight_independence(const SubspaceSpec& v, const std::vector<Weight>& weights, int k_max) {
  if (weights.size() < 2) throw std::invalid_argument("weight_independence needs at least two weights");
  WeightResult out;
  std::string unstable;
  for (const auto& w : weights) {
    try {
      out.per_weight.emplace_back(w, lm_invariant(v, w, k_max));
    } catch (const NotStabilized&) {
      unstable += (unstable.empty() ? "(" : ", (") + w.str() + ")";
    }
  }
  if (!unstable.empty())
    throw NotStabilized("p_D for " + v.name() + " not stabilized by k = " + std::to_string(k_max) +
                        " at weights " + unstable + "; raise --kmax");
  out.ok = std::all_of(out.per_weight.begin(), out.per_weight.end(),
                       [&](const auto& p) { return p.second.p_D == out.per_weight.front().second.p_D; });
  return out;
}

/// sum_{i<=k} (dim gr_i A - dim gr_i D) == dim A_k - dim D_k for all k <= k_max,
/// with the sums started below the lowest degree where D can be nonzero.
inline bool telescoping_check(const SubspaceSpec& v, const Weight& w, int k_max) {
  const int lo = -w.w1 * std::max(v.conductor().degree(), 0) - 1;
  HilbertSeq d = hilbert_seq(HilbertSource::hom(v, v), w, lo, k_max);
  if (d.at(lo) != 0) return false;
  long partial = 0;
  for (int k = lo + 1; k <= k_max; ++k) {
    long gr_a = dim_A(w, k) - dim_A(w, k - 1);
    long gr_d = d.at(k) - d.at(k - 1);
    partial += gr_a - gr_d;
    if (partial != dim_A(w, k) - d.at(k)) return false;
  }
  return true;
}

}  // namespace lmweyl
