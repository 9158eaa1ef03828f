#pragma once

// Filtered pieces of M_V and of hom spaces {p in Q : p V1 in V2}.
//
// An element p of a hom space is written p = u * g^{-1} with u in A and g the
// conductor of the source subspace V1. Membership p V1 in V2 splits into
//   (i)  u Q[x] in V2, checked on (x - c)^s for s <= d + b_max at each point c
//        of V2 (higher s vanish to order > d at c automatically), and
//   (ii) u (v / g) is a polynomial in V2 for each v in the low basis of V1,
//        checked over the common denominator g^{b_max + 1}.
// Both are linear in the coefficients of u, so each piece is a nullspace.

#include <lmweyl/matrix.hpp>
#include <lmweyl/subspace.hpp>
#include <lmweyl/weyl.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmweyl {

/// p = u * g^{-1} in the quotient division ring, acting by p f = u (f / g).
struct QFraction {
  WeylEl u;
  Poly g = 1;

  int wdegree(const Weight& w) const {
    if (u.is_zero()) return kMinusInfinity;
    return lmweyl::wdegree(u, w) - w.w1 * g.degree();
  }

  RatFunc apply(const RatFunc& f) const { return apply_ratfunc(u, f * RatFunc::reduce(1, g)); }

  friend bool operator==(const QFraction&, const QFraction&) = default;
};

enum class PieceKind { Module, Hom };

/// Basis of the k-th filtered piece. For Module pieces every g is 1.
struct GradedPiece {
  PieceKind kind = PieceKind::Hom;
  int k = 0;
  Weight weight;
  std::string source;
  Poly g = 1;
  std::vector<QFraction> basis;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

struct HomProblem {
  std::vector<Monomial> unknowns;  // monomials x^a d^b of u
  QMatrix conditions;
};

inline std::string hom_source(const SubspaceSpec& v1, const SubspaceSpec& v2) {
  return "hom(" + v1.name() + "," + v2.name() + ")";
}

// Conditions (i) and (ii) on u with wdegree(u) <= k + w1 deg g1.
inline HomProblem hom_conditions(const SubspaceSpec& v1, const SubspaceSpec& v2, const Weight& w, int k) {
  HomProblem out;
  const Poly& g = v1.conductor();
  const int dg = g.degree();
  const int top = k + w.w1 * dg;
  if (top < 0) return out;
  out.unknowns = monomial_basis(w, top);
  const std::size_t n = out.unknowns.size();
  const int bmax = top / w.w2;
  out.conditions = QMatrix(0, n);
  std::vector<Rat> row(n);

  // (i): u (x - c)^s in V2.
  for (const auto& grp : v2.groups()) {
    for (int s = 0; s <= grp.max_order + bmax; ++s)
      for (const auto& l : grp.functionals) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& m = out.unknowns[j];
          if (m.b > s) {
            row[j] = 0;
            continue;
          }
          row[j] = Rat(falling(s, m.b)) * l.on_shifted_monomial(m.a, s - m.b);
          any = any || row[j] != 0;
        }
        if (any) out.conditions.append_row(row);
      }
  }

  // (ii): pole part of u (v / g) vanishes and the polynomial part lies in V2.
  if (!v1.low_basis().empty()) {
    const Poly big = g.pow(static_cast<unsigned>(bmax + 1));
    const int big_deg = big.degree();
    const Poly dg_poly = g.derivative();
    const auto functionals = v2.functionals();
    std::vector<Poly> g_pows(static_cast<std::size_t>(bmax) + 1);
    g_pows[0] = 1;
    for (int i = 1; i <= bmax; ++i) g_pows[i] = g_pows[i - 1] * g;

    for (const auto& v : v1.low_basis()) {
      // d^b (v/g) = numer[b] / g^{b+1}
      std::vector<Poly> numer{v};
      for (int b = 0; b < bmax; ++b)
        numer.push_back(numer[b].derivative() * g - Rat(b + 1) * dg_poly * numer[b]);

      // Remainders and quotients of x^a numer[b] g^{bmax-b} modulo big.
      std::vector<Poly> rem(n), quo(n);
      std::map<int, std::vector<std::size_t>> by_b;
      for (std::size_t j = 0; j < n; ++j) by_b[out.unknowns[j].b].push_back(j);
      for (auto& [b, cols] : by_b) {
        int max_a = 0;
        for (auto j : cols) max_a = std::max(max_a, out.unknowns[j].a);
        auto [q, r] = poly_divmod(numer[b] * g_pows[bmax - b], big);
        std::vector<Poly> qs{q}, rs{r};
        for (int a = 1; a <= max_a; ++a) {
          Poly xr = rs.back().shift_up(1);
          Rat t = xr.coeff(big_deg) / big.leading();
          rs.push_back(xr - t * big);
          qs.push_back(qs.back().shift_up(1) + Poly(t));
        }
        for (auto j : cols) {
          rem[j] = rs[out.unknowns[j].a];
          quo[j] = qs[out.unknowns[j].a];
        }
      }
      for (int i = 0; i < big_deg; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = rem[j].coeff(i);
          any = any || row[j] != 0;
        }
        if (any) out.conditions.append_row(row);
      }
      for (const auto& l : functionals) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = l.apply(quo[j]);
          any = any || row[j] != 0;
        }
        if (any) out.conditions.append_row(row);
      }
    }
  }
  return out;
}

inline WeylEl assemble(const std::vector<Monomial>& unknowns, const std::vector<Rat>& coords) {
  WeylEl u;
  for (std::size_t j = 0; j < unknowns.size(); ++j) u.add_term(coords[j], unknowns[j]);
  return u;
}

}  // namespace detail

/// dim of the k-th piece of Hom(M_V1, M_V2), by rank only.
inline long hom_dim(const SubspaceSpec& v1, const SubspaceSpec& v2, const Weight& w, int k) {
  auto prob = detail::hom_conditions(v1, v2, w, k);
  return static_cast<long>(prob.unknowns.size() - rank(prob.conditions));
}

/// dim of (M_V)_k = M_V intersected with the k-th filtered piece of A.
inline long module_dim(const SubspaceSpec& v, const Weight& w, int k) {
  return hom_dim(trivial_spec(), v, w, k);
}

inline GradedPiece hom_piece(const SubspaceSpec& v1, const SubspaceSpec& v2, const Weight& w, int k) {
  GradedPiece piece{PieceKind::Hom, k, w, detail::hom_source(v1, v2), v1.conductor(), {}};
  auto prob = detail::hom_conditions(v1, v2, w, k);
  if (prob.unknowns.empty()) return piece;
  for (const auto& vec : nullspace(prob.conditions))
    piece.basis.push_back({detail::assemble(prob.unknowns, vec), v1.conductor()});
  return piece;
}

/// Basis of {u in A : wdegree(u) <= k, u Q[x] in V}.
inline GradedPiece module_piece(const SubspaceSpec& v, const Weight& w, int k) {
  GradedPiece piece = hom_piece(trivial_spec(), v, w, k);
  piece.kind = PieceKind::Module;
  piece.source = "module(" + v.name() + ")";
  return piece;
}

/// Endomorphism piece D_k.
inline GradedPiece endo_piece(const SubspaceSpec& v, const Weight& w, int k) { return hom_piece(v, v, w, k); }

/// Basis of the image of piece k in gr_k, reported as numerator forms: the
/// symbol of u g^{-1} is top(u) / X^{deg g}, and top(u) is returned.
inline std::vector<SymbolPoly> gr_symbol_space(const GradedPiece& at_k, const GradedPiece& below) {
  if (at_k.source != below.source || !(at_k.weight == below.weight) || at_k.kind != below.kind ||
      !(at_k.g == below.g))
    throw std::invalid_argument("gr_symbol_space: pieces come from different spaces");
  if (below.k != at_k.k - 1) throw std::invalid_argument("gr_symbol_space: pieces are not consecutive");
  const Weight& w = at_k.weight;
  const int top = at_k.k + w.w1 * std::max(at_k.g.degree(), 0);
  std::vector<Monomial> cols;
  for (const auto& m : monomial_basis(w, top))
    if (w.of(m) == top) cols.push_back(m);
  QMatrix coords(0, cols.size());
  for (const auto& p : at_k.basis) {
    SymbolPoly s = top_component(p.u, w, top);
    std::vector<Rat> row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = s.coeff(cols[j].a, cols[j].b);
    coords.append_row(row);
  }
  std::vector<SymbolPoly> out;
  if (cols.empty()) {
    if (at_k.dim() != below.dim()) throw std::logic_error("gr_symbol_space: dimension mismatch");
    return out;
  }
  Echelon e = rref(coords);
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
    SymbolPoly s;
    for (std::size_t j = 0; j < cols.size(); ++j) s.add_term(e.reduced(r, j), cols[j]);
    out.push_back(std::move(s));
  }
  if (out.size() != at_k.dim() - below.dim())
    throw std::logic_error("gr_symbol_space: image dimension differs from dim_k - dim_{k-1}");
  return out;
}

/// True iff every symbol of D_k is divisible by X^{deg g}, i.e. lies in gr A.
inline bool gr_inclusion_check(const SubspaceSpec& v, const Weight& w, int k) {
  auto symbols = gr_symbol_space(endo_piece(v, w, k), endo_piece(v, w, k - 1));
  const int dg = std::max(v.conductor().degree(), 0);
  for (const auto& s : symbols)
    for (const auto& [m, c] : s.terms())
      if (m.a < dg) return false;
  return true;
}

inline nlohmann::json piece_to_json(const GradedPiece& p) {
  using nlohmann::json;
  json basis = json::array();
  for (const auto& q : p.basis) {
    if (p.kind == PieceKind::Module)
      basis.push_back(q.u.str());
    else
      basis.push_back({{"u", q.u.str()}, {"g", q.g.str()}});
  }
  return {{"kind", p.kind == PieceKind::Module ? "module" : "hom"},
          {"k", p.k},
          {"weight", {p.weight.w1, p.weight.w2}},
          {"source", p.source},
          {"dim", p.dim()},
          {"basis", std::move(basis)}};
}

}  // namespace lmweyl
