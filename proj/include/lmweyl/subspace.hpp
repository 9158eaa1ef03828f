#pragma once

// Subspaces V of Q[x] cut out by finitely many linear conditions, each
// supported at one rational point. V determines the right ideal
// M_V = {q in A : q Q[x] in V}, the representative of an ideal class.

#include <lmweyl/matrix.hpp>
#include <lmweyl/poly.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lmweyl {

/// l(f) = sum_e coeff_e * f^(e)(point).
struct Functional {
  Rat point;
  std::map<int, Rat> terms;

  int max_order() const { return terms.empty() ? -1 : terms.rbegin()->first; }

  Rat apply(const Poly& f) const {
    Rat out = 0;
    Poly deriv = f;
    int order = 0;
    for (const auto& [e, c] : terms) {
      deriv = deriv.derivative(e - order);
      order = e;
      out += c * deriv.eval(point);
    }
    return out;
  }

  /// l(x^a (x - point)^t) in closed form.
  Rat on_shifted_monomial(int a, int t) const {
    Rat out = 0;
    for (const auto& [e, c] : terms) {
      int j = e - t;
      if (j < 0 || j > a) continue;
      out += c * Rat(factorial(e) * binomial(a, j)) * rat_pow(point, a - j);
    }
    return out;
  }

  friend bool operator==(const Functional&, const Functional&) = default;
};

inline Rat functional_apply(const Functional& l, const Poly& f) { return l.apply(f); }

/// All functionals sharing one support point.
struct PointConditions {
  Rat point;
  std::vector<Functional> functionals;
  int max_order = 0;
};

class SubspaceSpec {
 public:
  SubspaceSpec() : conductor_(1) {}

  /// Validates and normalizes: merges duplicate points, drops functionals that
  /// are linearly dependent on earlier ones at the same point, and derives the
  /// conductor and a basis of V modulo conductor * Q[x].
  SubspaceSpec(std::string name, const std::vector<Functional>& functionals) : name_(std::move(name)) {
    std::map<Rat, std::vector<Functional>> by_point;
    for (const auto& f : functionals) {
      Functional clean{f.point, {}};
      for (const auto& [e, c] : f.terms) {
        if (e < 0) throw ParseError("negative derivative order in functional");
        if (c != 0) clean.terms[e] = c;
      }
      if (clean.terms.empty()) throw ParseError("functional has no nonzero term");
      by_point[clean.point].push_back(std::move(clean));
    }
    for (auto& [point, list] : by_point) {
      PointConditions group{point, {}, 0};
      int top = 0;
      for (const auto& f : list) top = std::max(top, f.max_order());
      QMatrix kept;
      for (const auto& f : list) {
        std::vector<Rat> row(static_cast<std::size_t>(top) + 1);
        for (const auto& [e, c] : f.terms) row[e] = c;
        QMatrix trial = kept;
        trial.append_row(row);
        if (rank(trial) > kept.rows()) {
          kept = std::move(trial);
          group.functionals.push_back(f);
          group.max_order = std::max(group.max_order, f.max_order());
        }
      }
      groups_.push_back(std::move(group));
    }
    conductor_ = 1;
    for (const auto& g : groups_) conductor_ *= Poly::shifted_power(g.point, g.max_order + 1);

    const int n = std::max(conductor_.degree(), 0);
    QMatrix conditions(0, static_cast<std::size_t>(n));
    for (const auto& g : groups_)
      for (const auto& f : g.functionals) {
        std::vector<Rat> row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[i] = f.on_shifted_monomial(i, 0);
        conditions.append_row(row);
      }
    if (n > 0) {
      for (const auto& v : nullspace(conditions)) low_basis_.push_back(Poly(v));
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<PointConditions>& groups() const { return groups_; }
  const Poly& conductor() const { return conductor_; }
  const std::vector<Poly>& low_basis() const { return low_basis_; }
  bool is_trivial() const { return groups_.empty(); }
  /// Set for a monomial gap set whose complement is not closed under addition.
  bool not_semigroup() const { return not_semigroup_; }
  void set_not_semigroup(bool flag) { not_semigroup_ = flag; }

  std::size_t condition_count() const {
    std::size_t n = 0;
    for (const auto& g : groups_) n += g.functionals.size();
    return n;
  }

  /// Membership in V: every functional vanishes.
  bool contains(const Poly& f) const {
    for (const auto& g : groups_)
      for (const auto& l : g.functionals)
        if (l.apply(f) != 0) return false;
    return true;
  }

  std::vector<Functional> functionals() const {
    std::vector<Functional> out;
    for (const auto& g : groups_) out.insert(out.end(), g.functionals.begin(), g.functionals.end());
    return out;
  }

 private:
  std::string name_;
  std::vector<PointConditions> groups_;
  Poly conductor_;
  std::vector<Poly> low_basis_;
  bool not_semigroup_ = false;
};

/// V = Q[x], presenting M = A.
inline SubspaceSpec trivial_spec() { return SubspaceSpec("trivial", {}); }

inline bool contains(const SubspaceSpec& v, const Poly& f) { return v.contains(f); }
inline Poly conductor(const SubspaceSpec& v) { return v.conductor(); }

/// V = {f : f^(g)(0) = 0 for every gap g}.
inline SubspaceSpec monomial_spec(std::string name, const std::vector<int>& gaps) {
  std::set<int> gap_set;
  for (int g : gaps) {
    if (g < 0) throw ParseError("negative gap " + std::to_string(g));
    gap_set.insert(g);
  }
  std::vector<Functional> fs;
  for (int g : gap_set) fs.push_back({Rat(0), {{g, Rat(1)}}});
  SubspaceSpec spec(std::move(name), fs);
  bool broken = false;
  if (!gap_set.empty()) {
    int top = *gap_set.rbegin();
    for (int s1 = 0; s1 <= top && !broken; ++s1)
      for (int s2 = s1; s1 + s2 <= top && !broken; ++s2)
        if (!gap_set.count(s1) && !gap_set.count(s2) && gap_set.count(s1 + s2)) broken = true;
  }
  spec.set_not_semigroup(broken);
  return spec;
}

namespace detail {

inline Rat json_rat(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>()), 10));
  throw ParseError(std::string(what) + " must be a rational string \"p/q\"");
}

inline void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                           const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError("unknown key '" + it.key() + "' in " + where);
  }
}

inline std::string gap_name(const std::vector<int>& gaps) {
  std::string s = "gaps{";
  for (std::size_t i = 0; i < gaps.size(); ++i) s += (i ? "," : "") + std::to_string(gaps[i]);
  return s + "}";
}

}  // namespace detail

/// Reads a spec document (either "monomial" or "conditions" kind).
inline SubspaceSpec spec_from_json(const nlohmann::json& doc) {
  using nlohmann::json;
  if (!doc.is_object()) throw ParseError("spec document must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("spec requires a string 'kind'");
  const std::string kind = doc["kind"].get<std::string>();
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  if (kind == "monomial") {
    detail::reject_unknown(doc, {"name", "kind", "gaps"}, "monomial spec");
    if (!doc.contains("gaps") || !doc["gaps"].is_array()) throw ParseError("monomial spec requires array 'gaps'");
    std::vector<int> gaps;
    for (const auto& g : doc["gaps"]) {
      if (!g.is_number_integer()) throw ParseError("gaps must be integers");
      gaps.push_back(g.get<int>());
    }
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (name.empty()) name = detail::gap_name(gaps);
    return monomial_spec(name, gaps);
  }
  if (kind == "conditions") {
    detail::reject_unknown(doc, {"name", "kind", "points"}, "conditions spec");
    if (!doc.contains("points") || !doc["points"].is_array())
      throw ParseError("conditions spec requires array 'points'");
    std::vector<Functional> fs;
    for (const auto& pt : doc["points"]) {
      if (!pt.is_object()) throw ParseError("each point must be an object");
      detail::reject_unknown(pt, {"c", "functionals"}, "point");
      if (!pt.contains("c")) throw ParseError("point requires 'c'");
      Rat c = detail::json_rat(pt["c"], "point 'c'");
      if (!pt.contains("functionals") || !pt["functionals"].is_array())
        throw ParseError("point requires array 'functionals'");
      for (const auto& fn : pt["functionals"]) {
        if (!fn.is_array() || fn.empty()) throw ParseError("functional must be a nonempty array of terms");
        Functional f{c, {}};
        for (const auto& term : fn) {
          if (!term.is_object()) throw ParseError("functional term must be an object");
          detail::reject_unknown(term, {"order", "coeff"}, "functional term");
          if (!term.contains("order") || !term["order"].is_number_integer())
            throw ParseError("functional term requires integer 'order'");
          int order = term["order"].get<int>();
          if (order < 0) throw ParseError("negative derivative order");
          Rat coeff = term.contains("coeff") ? detail::json_rat(term["coeff"], "coeff") : Rat(1);
          f.terms[order] += coeff;
        }
        fs.push_back(std::move(f));
      }
    }
    if (name.empty()) name = "conditions";
    return SubspaceSpec(name, fs);
  }
  throw ParseError("unknown spec kind '" + kind + "'");
}

inline SubspaceSpec parse_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed spec document: ") + e.what());
  }
  return spec_from_json(doc);
}

/// Canonical "conditions" document for a spec.
inline nlohmann::json spec_to_json(const SubspaceSpec& v) {
  using nlohmann::json;
  json points = json::array();
  for (const auto& g : v.groups()) {
    json fns = json::array();
    for (const auto& f : g.functionals) {
      json terms = json::array();
      for (const auto& [e, c] : f.terms) terms.push_back({{"order", e}, {"coeff", to_string(c)}});
      fns.push_back(std::move(terms));
    }
    points.push_back({{"c", to_string(g.point)}, {"functionals", std::move(fns)}});
  }
  return {{"name", v.name()}, {"kind", "conditions"}, {"points", std::move(points)}};
}

}  // namespace lmweyl
