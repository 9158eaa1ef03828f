#pragma once

// lmtool command-line front end. Exit codes:
//   0 success, 1 an identity failed, 2 usage or input error, 3 not stabilized.

#include <lmweyl/catalog.hpp>
#include <lmweyl/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace lmweyl::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsage = 2, kNotStabilized = 3 };

/// "w1,w2[;w1,w2...]"
inline std::vector<Weight> parse_weights(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("weight '" + item + "' is not of the form w1,w2");
    try {
      std::size_t used1 = 0, used2 = 0;
      std::string a = item.substr(0, comma), b = item.substr(comma + 1);
      int w1 = std::stoi(a, &used1), w2 = std::stoi(b, &used2);
      if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument("trailing characters");
      out.emplace_back(w1, w2);
    } catch (const std::invalid_argument&) {
      throw ParseError("weight '" + item + "' must be two positive integers");
    } catch (const std::out_of_range&) {
      throw ParseError("weight '" + item + "' out of range");
    }
  }
  if (out.empty()) throw ParseError("empty weight list");
  return out;
}

/// A path to a spec document, or "catalog:NAME" for a built-in entry.
inline SubspaceSpec load_spec(const std::string& where) {
  const std::string prefix = "catalog:";
  if (where.rfind(prefix, 0) == 0) {
    auto spec = catalog_spec(where.substr(prefix.size()));
    if (!spec) throw ParseError("no catalog entry named '" + where.substr(prefix.size()) + "'");
    return *spec;
  }
  std::ifstream in(where);
  if (!in) throw ParseError("cannot open spec file '" + where + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

struct Options {
  std::vector<std::string> specs;
  std::string weights;
  int kmax = 12;
  std::string format = "json";
  std::string out_path;
  bool timing = false;
};

namespace detail {

using nlohmann::ordered_json;

inline std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string seq_csv(const std::vector<std::pair<std::string, std::vector<long>>>& cols, int k_max) {
  std::ostringstream os;
  os << "k";
  for (const auto& c : cols) os << ',' << c.first;
  os << '\n';
  for (int k = 0; k <= k_max; ++k) {
    os << k;
    for (const auto& c : cols) os << ',' << c.second[k];
    os << '\n';
  }
  return os.str();
}

inline std::vector<long> dims_A(int k_max) {
  std::vector<long> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(dim_A(Weight{1, 1}, k));
  return out;
}

struct Outcome {
  std::string text;
  int code = kOk;
};

inline Outcome cmd_invariant(const Options& o, const std::vector<Weight>& weights) {
  Outcome res;
  ordered_json all = ordered_json::array();
  for (const auto& path : o.specs) {
    SubspaceSpec v = load_spec(path);
    ordered_json entry;
    entry["name"] = v.name();
    entry["kmax"] = o.kmax;
    ordered_json per = ordered_json::array();
    std::vector<long> values;
    std::ostringstream text;
    for (const auto& w : weights) {
      LmResult lm = lm_invariant(v, w, o.kmax);
      values.push_back(lm.p_D);
      per.push_back({{"weight", weight_json(w)},
                     {"p_D", lm.p_D},
                     {"stable_from", lm.stable_from},
                     {"p_sequence", lm.p_sequence}});
      text << v.name() << " weight (" << w.str() << "): p_D = " << lm.p_D << " (stable from k = " << lm.stable_from
           << ")\n";
      if (o.format == "csv") {
        res.text += "# " + v.name() + " weight " + w.str() + "\n";
        std::vector<long> a;
        for (int k = 0; k <= o.kmax; ++k) a.push_back(dim_A(w, k));
        res.text += seq_csv({{"dim_A", a}, {"dim_D", lm.d_seq.values}, {"p_k", lm.p_sequence}}, o.kmax);
      }
    }
    bool agree = std::all_of(values.begin(), values.end(), [&](long p) { return p == values.front(); });
    entry["invariants"] = std::move(per);
    entry["weights_agree"] = agree;
    if (!agree) res.code = kVerdictFailed;
    if (o.format == "text") res.text += text.str();
    all.push_back(std::move(entry));
  }
  if (o.format == "json") res.text = dump(all.size() == 1 ? all[0] : all);
  return res;
}

inline Outcome cmd_chern(const Options& o) {
  Outcome res;
  ordered_json all = ordered_json::array();
  for (const auto& path : o.specs) {
    SubspaceSpec v = load_spec(path);
    ChernResult c = chern_n(v, o.kmax);
    all.push_back({{"name", v.name()},
                   {"kmax", o.kmax},
                   {"hilbert_M", c.m_seq.values},
                   {"shift_a", c.shift},
                   {"n", c.n},
                   {"window", {c.fit.window_lo, c.fit.window_hi}},
                   {"negative_chern", c.negative}});
    if (c.negative) res.code = kVerdictFailed;
    if (o.format == "csv")
      res.text += "# " + v.name() + "\n" + seq_csv({{"dim_A", dims_A(o.kmax)}, {"dim_M", c.m_seq.values}}, o.kmax);
    if (o.format == "text")
      res.text += v.name() + ": n = " + std::to_string(c.n) + ", shift a = " + std::to_string(c.shift) +
                  (c.negative ? " (NEGATIVE)" : "") + "\n";
  }
  if (o.format == "json") res.text = dump(all.size() == 1 ? all[0] : all);
  return res;
}

inline Outcome cmd_relative(const Options& o) {
  if (o.specs.size() != 2) throw ParseError("relative needs exactly two --spec arguments");
  Outcome res;
  SubspaceSpec v1 = load_spec(o.specs[0]), v2 = load_spec(o.specs[1]);
  RelativeResult r = relative_invariant(v1, v2, o.kmax);
  if (!r.ok) res.code = kVerdictFailed;
  if (o.format == "json") {
    res.text = dump({{"source", v1.name()},
                     {"target", v2.name()},
                     {"kmax", o.kmax},
                     {"hilbert_hom", r.hom_seq.values},
                     {"shift_b", r.shift},
                     {"p_12", r.p_12},
                     {"n1", r.n1},
                     {"n2", r.n2},
                     {"window", {r.fit.window_lo, r.fit.window_hi}},
                     {"ok", r.ok}});
  } else if (o.format == "csv") {
    res.text = seq_csv({{"dim_A", dims_A(o.kmax)}, {"dim_hom", r.hom_seq.values}}, o.kmax);
  } else {
    res.text = "hom(" + v1.name() + "," + v2.name() + "): p_12 = " + std::to_string(r.p_12) + ", n1 + n2 = " +
               std::to_string(r.n1 + r.n2) + " (" + (r.ok ? "ok" : "FAILED") + ")\n";
  }
  return res;
}

inline Outcome cmd_dual(const Options& o) {
  Outcome res;
  ordered_json all = ordered_json::array();
  for (const auto& path : o.specs) {
    SubspaceSpec v = load_spec(path);
    DualResult d = dual_check(v, o.kmax);
    if (!d.ok) res.code = kVerdictFailed;
    all.push_back({{"name", v.name()},
                   {"kmax", o.kmax},
                   {"hilbert_dual", d.dual_seq.values},
                   {"dual_shift", d.dual_shift},
                   {"dual_constant", d.dual_constant},
                   {"n", d.n},
                   {"ok", d.ok}});
    if (o.format == "csv")
      res.text += "# " + v.name() + "\n" + seq_csv({{"dim_A", dims_A(o.kmax)}, {"dim_dual", d.dual_seq.values}}, o.kmax);
    if (o.format == "text")
      res.text += v.name() + ": dual constant = " + std::to_string(d.dual_constant) + ", n = " + std::to_string(d.n) +
                  " (" + (d.ok ? "ok" : "FAILED") + ")\n";
  }
  if (o.format == "json") res.text = dump(all.size() == 1 ? all[0] : all);
  return res;
}

inline Outcome cmd_verify(const Options& o, const std::vector<Weight>& weights, std::ostream& err) {
  Outcome res;
  std::vector<SubspaceSpec> specs;
  if (o.specs.empty()) {
    specs = catalog();
  } else {
    for (const auto& p : o.specs) specs.push_back(load_spec(p));
  }
  ordered_json all = ordered_json::array();
  for (const auto& v : specs) {
    Report r = build_report(v, weights, o.kmax);
    if (!r.ok()) {
      res.code = kVerdictFailed;
      err << "identity violated for " << r.name << "\n" << dump(report_to_json(r, false));
    }
    all.push_back(report_to_json(r, o.timing));
    if (o.format == "csv") res.text += (specs.size() > 1 ? "# " + r.name + "\n" : "") + report_to_csv(r);
    if (o.format == "text") res.text += report_to_text(r, o.timing);
  }
  if (o.format == "json") res.text = dump(all.size() == 1 ? all[0] : all);
  return res;
}

inline Outcome cmd_catalog(const Options& o) {
  Outcome res;
  if (o.format == "text") {
    for (const auto& e : catalog_documents()) res.text += e.name + "\n";
    return res;
  }
  ordered_json all = ordered_json::array();
  for (const auto& e : catalog_documents()) all.push_back(ordered_json::parse(e.document));
  res.text = dump(all);
  return res;
}

}  // namespace detail

/// Runs one invocation. All diagnostics go to `err`; results go to `out`
/// unless --out names a file.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of endomorphism rings of ideals of the first Weyl algebra", "lmtool"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool specs, bool multi_weights) {
    if (specs) sub->add_option("--spec", o.specs, "Spec file, or catalog:NAME (repeatable)");
    if (multi_weights) sub->add_option("--weights", o.weights, "Weights w1,w2[;w1,w2...]");
    sub->add_option("--kmax", o.kmax, "Largest filtration degree")->check(CLI::Range(4, 200));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
    sub->add_flag("--timing", o.timing, "Include elapsed time in reports");
  };
  auto* invariant = app.add_subcommand("invariant", "LM invariant p_D at one or more weights");
  auto* chern = app.add_subcommand("chern", "Second Chern class n from the module Hilbert function");
  auto* relative = app.add_subcommand("relative", "Relative invariant p_12 for two specs");
  auto* dual = app.add_subcommand("dual", "Compare the dual hom space with n");
  auto* verify = app.add_subcommand("verify", "Run every identity check (catalog when no --spec)");
  auto* cat = app.add_subcommand("catalog", "List built-in specs");
  add_common(invariant, true, true);
  add_common(chern, true, false);
  add_common(relative, true, false);
  add_common(dual, true, false);
  add_common(verify, true, true);
  add_common(cat, false, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lmtool: " << e.what() << "\n";
    return kUsage;
  }

  detail::Outcome result;
  try {
    bool needs_spec = invariant->parsed() || chern->parsed() || relative->parsed() || dual->parsed();
    if (needs_spec && o.specs.empty()) throw ParseError("--spec is required");
    std::vector<Weight> weights;
    if (!o.weights.empty())
      weights = parse_weights(o.weights);
    else
      weights = verify->parsed() ? default_weights() : std::vector<Weight>{{1, 1}};

    if (invariant->parsed()) result = detail::cmd_invariant(o, weights);
    if (chern->parsed()) result = detail::cmd_chern(o);
    if (relative->parsed()) result = detail::cmd_relative(o);
    if (dual->parsed()) result = detail::cmd_dual(o);
    if (verify->parsed()) result = detail::cmd_verify(o, weights, err);
    if (cat->parsed()) result = detail::cmd_catalog(o);
  } catch (const ParseError& e) {
    err << "lmtool: " << e.what() << "\n";
    return kUsage;
  } catch (const NotStabilized& e) {
    err << "lmtool: not stabilized: " << e.what() << "\n";
    return kNotStabilized;
  } catch (const NonPolynomial& e) {
    err << "lmtool: " << e.what() << "\n";
    return kVerdictFailed;
  } catch (const std::invalid_argument& e) {
    err << "lmtool: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "lmtool: identity violated: " << e.what() << "\n";
    return kVerdictFailed;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "lmtool: cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  return result.code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace lmweyl::cli
