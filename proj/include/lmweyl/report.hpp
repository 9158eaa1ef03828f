#pragma once

// Full verification report for one spec and its JSON / CSV / text forms.

#include <lmweyl/invariants.hpp>

#include <json.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lmweyl {

inline const std::vector<Weight>& default_weights() {
  static const std::vector<Weight> w{{1, 1}, {1, 2}, {2, 1}, {2, 3}};
  return w;
}

/// True iff gr_inclusion_check holds for every 0 <= k <= k_max.
inline bool gr_inclusion_through(const SubspaceSpec& v, const Weight& w, int k_max) {
  auto pieces = detail::parallel_map(static_cast<std::size_t>(k_max + 2),
                                     [&](std::size_t i) { return endo_piece(v, w, static_cast<int>(i) - 1); });
  const int dg = std::max(v.conductor().degree(), 0);
  for (int k = 0; k <= k_max; ++k)
    for (const auto& s : gr_symbol_space(pieces[k + 1], pieces[k]))
      for (const auto& [m, c] : s.terms())
        if (m.a < dg) return false;
  return true;
}

struct Verdicts {
  std::optional<bool> t2;
  std::optional<bool> dual;
  std::optional<bool> weights;
  std::optional<bool> gr_inclusion;
  std::optional<bool> telescoping;

  bool all() const {
    for (const auto& v : {t2, dual, weights, gr_inclusion, telescoping})
      if (v && !*v) return false;
    return true;
  }
};

struct Report {
  std::string name;
  Weight weight{1, 1};
  int kmax = 0;
  std::vector<long> hilbert_M;
  std::vector<long> hilbert_D;
  std::vector<long> hilbert_dual;
  std::vector<long> p_sequence;
  int shift_a = 0;
  long n = 0;
  long p_D = 0;
  long dual_constant = 0;
  bool d_fit_canonical = false;
  std::optional<long> p_12;
  std::vector<std::pair<Weight, long>> weight_p_D;
  Verdicts verdicts;
  std::optional<double> elapsed_ms;

  bool ok() const { return verdicts.all(); }
};

/// Runs every check for v. Weight-dependent checks use `weights`; the weight
/// independence verdict is only produced for two or more weights.
inline Report build_report(const SubspaceSpec& v, const std::vector<Weight>& weights, int k_max) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.name = v.name();
  r.kmax = k_max;
  T2Result t2 = verify_t2(v, k_max);
  r.hilbert_M = t2.chern.m_seq.values;
  r.hilbert_D = t2.lm.d_seq.values;
  r.p_sequence = t2.lm.p_sequence;
  r.shift_a = t2.chern.shift;
  r.n = t2.chern.n;
  r.p_D = t2.lm.p_D;
  r.d_fit_canonical = t2.d_fit_canonical;
  r.verdicts.t2 = t2.ok;

  DualResult dual = dual_check(v, k_max);
  r.hilbert_dual = dual.dual_seq.values;
  r.dual_constant = dual.dual_constant;
  r.verdicts.dual = dual.ok;

  if (weights.size() >= 2) {
    WeightResult wr = weight_independence(v, weights, k_max);
    for (const auto& [w, lm] : wr.per_weight) r.weight_p_D.emplace_back(w, lm.p_D);
    r.verdicts.weights = wr.ok && wr.per_weight.front().second.p_D == r.p_D;
  }
  bool incl = true, tele = true;
  for (const auto& w : weights) {
    incl = incl && gr_inclusion_through(v, w, k_max);
    tele = tele && telescoping_check(v, w, k_max);
  }
  r.verdicts.gr_inclusion = incl;
  r.verdicts.telescoping = tele;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline nlohmann::ordered_json weight_json(const Weight& w) { return nlohmann::ordered_json::array({w.w1, w.w2}); }

inline nlohmann::ordered_json report_to_json(const Report& r, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = r.name;
  j["weight"] = weight_json(r.weight);
  j["kmax"] = r.kmax;
  j["hilbert_M"] = r.hilbert_M;
  j["hilbert_D"] = r.hilbert_D;
  j["hilbert_dual"] = r.hilbert_dual;
  j["p_sequence"] = r.p_sequence;
  j["shift_a"] = r.shift_a;
  j["n"] = r.n;
  j["p_D"] = r.p_D;
  j["dual_constant"] = r.dual_constant;
  j["d_fit_canonical"] = r.d_fit_canonical;
  if (r.p_12) j["p_12"] = *r.p_12;
  ordered_json per = ordered_json::array();
  for (const auto& [w, p] : r.weight_p_D) per.push_back({{"weight", weight_json(w)}, {"p_D", p}});
  j["weights_p_D"] = std::move(per);
  ordered_json v;
  auto put = [&v](const char* key, const std::optional<bool>& b) {
    v[key] = b ? ordered_json(*b) : ordered_json(nullptr);
  };
  put("t2", r.verdicts.t2);
  put("dual", r.verdicts.dual);
  put("weights", r.verdicts.weights);
  put("gr_inclusion", r.verdicts.gr_inclusion);
  put("telescoping", r.verdicts.telescoping);
  j["verdicts"] = std::move(v);
  j["ok"] = r.ok();
  if (with_timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

/// Recomputes the t2, dual and weights verdicts from the sequences embedded in
/// a serialized report; true iff they match the stored booleans.
inline bool revalidate_report(const nlohmann::ordered_json& j) {
  auto seq = [&](const char* key) {
    HilbertSeq h{Weight{1, 1}, 0, j.at("kmax").get<int>(), j.at(key).get<std::vector<long>>(), key};
    return h;
  };
  HilbertSeq m = seq("hilbert_M"), d = seq("hilbert_D"), dual = seq("hilbert_dual");
  FitResult fm = fit_euler(m), fd = fit_euler(d), fdual = fit_euler(dual);
  const int k_max = m.k_max;
  long p_D = dim_A(Weight{1, 1}, k_max) - d.at(k_max);
  bool t2 = fd.shift == 0 && fd.constant == p_D && fm.constant >= 0 && p_D == 2 * fm.constant;
  bool dual_ok = fdual.constant == fm.constant;
  const auto& v = j.at("verdicts");
  if (v.at("t2").get<bool>() != t2 || v.at("dual").get<bool>() != dual_ok) return false;
  if (j.at("n").get<long>() != fm.constant || j.at("p_D").get<long>() != p_D) return false;
  if (!v.at("weights").is_null()) {
    bool same = true;
    for (const auto& e : j.at("weights_p_D")) same = same && e.at("p_D").get<long>() == p_D;
    if (v.at("weights").get<bool>() != same) return false;
  }
  return true;
}

/// Columns k, dim_A, dim_M, dim_D, p_k at weight (1,1).
inline std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "k,dim_A,dim_M,dim_D,p_k\n";
  for (int k = 0; k <= r.kmax; ++k)
    os << k << ',' << dim_A(Weight{1, 1}, k) << ',' << r.hilbert_M[k] << ',' << r.hilbert_D[k] << ','
       << r.p_sequence[k] << '\n';
  return os.str();
}

inline std::string report_to_text(const Report& r, bool with_timing) {
  std::ostringstream os;
  auto verdict = [](const std::optional<bool>& b) { return b ? (*b ? "ok" : "FAILED") : "n/a"; };
  os << r.name << ": n = " << r.n << " (shift " << r.shift_a << "), p_D = " << r.p_D
     << ", dual constant = " << r.dual_constant << "\n";
  os << "  p_D = 2n: " << verdict(r.verdicts.t2) << "; dual: " << verdict(r.verdicts.dual)
     << "; weights: " << verdict(r.verdicts.weights) << "; gr inclusion: " << verdict(r.verdicts.gr_inclusion)
     << "; telescoping: " << verdict(r.verdicts.telescoping) << "\n";
  if (!r.weight_p_D.empty()) {
    os << "  p_D by weight:";
    for (const auto& [w, p] : r.weight_p_D) os << " (" << w.str() << ")=" << p;
    os << "\n";
  }
  if (with_timing && r.elapsed_ms) os << "  elapsed: " << *r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace lmweyl
