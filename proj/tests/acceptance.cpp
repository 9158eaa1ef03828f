// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <lmweyl/lmweyl.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace lmweyl;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<Weight> kWeights{{1, 1}, {1, 2}, {2, 1}, {2, 3}};

SubspaceSpec spec(const char* name) { return *catalog_spec(name); }

void criterion1(Check& c) {
  auto t0 = Clock::now();
  HilbertSeq h = hilbert_seq(HilbertSource::algebra(), {1, 1}, 0, 12);
  for (int k = 0; k <= 12; ++k) c.expect(h.at(k) == (k + 1) * (k + 2) / 2, "dim A_k wrong at k=" + std::to_string(k));
  T2Result t = verify_t2(spec("trivial"), 12);
  c.expect(t.chern.n == 0 && t.lm.p_D == 0 && t.ok, "trivial n or p_D nonzero");
  c.expect(seconds_since(t0) < 1.0, "runtime over 1 s");
}

void criterion2(Check& c) {
  auto t0 = Clock::now();
  SubspaceSpec v = spec("cusp");
  GradedPiece m2 = module_piece(v, {1, 1}, 2);
  c.expect(m2.dim() == 2 && m2.basis[0].u == parse_weyl("x^2") && m2.basis[1].u == parse_weyl("x*d - 1"),
           "M_2 basis differs from {x^2, x*d - 1}");
  c.expect(module_dim(v, {1, 1}, 3) == 5, "dim M_3 != 5");
  c.expect(hom_dim(v, v, {1, 1}, 1) == 1, "dim D_1 != 1");
  GradedPiece d2 = endo_piece(v, {1, 1}, 2);
  c.expect(d2.dim() == 4, "dim D_2 != 4");
  QMatrix span(0, 0);
  std::vector<Monomial> support;
  for (const auto& q : d2.basis)
    for (const auto& [m, _] : q.u.terms()) support.push_back(m);
  WeylEl target = parse_weyl("x^2*d^2 + 2*x*d - 2");
  for (const auto& [m, _] : target.terms()) support.push_back(m);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto row = [&](const WeylEl& e) {
    std::vector<Rat> r;
    for (const auto& m : support) r.push_back(e.coeff(m.a, m.b));
    return r;
  };
  for (const auto& q : d2.basis) span.append_row(row(q.u));
  std::size_t before = rank(span);
  span.append_row(row(target));
  c.expect(d2.g == Poly::monomial(1, 2) && rank(span) == before, "d^2 - 2x^{-1}d missing from D_2");
  ChernResult ch = chern_n(v, 12);
  c.expect(ch.shift == -1 && ch.n == 1, "chern fit (a,n) != (-1,1)");
  T2Result t = verify_t2(v, 12);
  c.expect(t.lm.p_D == 2 && t.ok, "p_D != 2 or verdict false");
  c.expect(seconds_since(t0) < 5.0, "runtime over 5 s");
}

void criterion3(Check& c) {
  for (const auto& v : catalog()) {
    auto t0 = Clock::now();
    T2Result t = verify_t2(v, 16);
    c.expect(t.lm.p_D == 2 * t.chern.n && t.ok, v.name() + ": p_D != 2n");
    c.expect(seconds_since(t0) <= 60.0, v.name() + ": runtime over 60 s");
  }
}

void criterion4(Check& c) {
  for (const auto& v : catalog()) {
    WeightResult r = weight_independence(v, kWeights, 16);
    std::ostringstream vals;
    for (const auto& [w, lm] : r.per_weight) vals << " " << lm.p_D;
    c.expect(r.ok, v.name() + ": p_D differs across weights:" + vals.str());
  }
}

void criterion5(Check& c) {
  for (const auto& v : catalog())
    for (const auto& w : kWeights)
      c.expect(gr_inclusion_through(v, w, 12), v.name() + " weight " + w.str() + ": gr inclusion fails");
}

void criterion6(Check& c) {
  for (const auto& v : catalog()) {
    DualResult d = dual_check(v, 14);
    c.expect(d.ok && d.dual_constant == d.n, v.name() + ": dual constant != n");
  }
}

void criterion7(Check& c) {
  const std::pair<const char*, const char*> pairs[] = {{"cusp", "trivial"}, {"cusp", "gaps{1,2}"}, {"two-point", "cusp"}};
  for (const auto& [a, b] : pairs) {
    RelativeResult r = relative_invariant(spec(a), spec(b), 14);
    std::string label = std::string(a) + " -> " + b;
    c.expect(r.p_12 == r.n1 + r.n2 && r.ok, label + ": p_12 != n1 + n2");
    c.expect(r.fit.constant == r.n1 + r.n2 && r.fit.window_length() >= 3, label + ": hom fit window too short");
  }
}

void criterion8(Check& c) {
  for (const auto& v : catalog())
    for (Weight w : {Weight{1, 1}, Weight{2, 1}})
      c.expect(telescoping_check(v, w, 12), v.name() + " weight " + w.str() + ": telescoping fails");
}

WeylEl random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3), co(-4, 4);
  WeylEl out;
  for (int i = 0; i < 3; ++i) out.add_term(Rat(co(rng)), {e(rng), e(rng)});
  return out;
}

void criterion9(Check& c) {
  auto t0 = Clock::now();
  const WeylEl x = WeylEl::x(), d = WeylEl::d();
  c.expect(d * x - x * d == WeylEl(1), "defining relation fails");
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    WeylEl p = random_element(rng), q = random_element(rng), r = random_element(rng);
    c.expect((p * q) * r == p * (q * r), "associativity fails");
    if (p.is_zero() || q.is_zero()) continue;
    for (const auto& w : kWeights) {
      int dp = wdegree(p, w), dq = wdegree(q, w);
      c.expect(wdegree(p * q, w) == dp + dq, "degree additivity fails");
      c.expect(top_component(p * q, w, dp + dq) == top_component(p, w, dp) * top_component(q, w, dq),
               "symbol multiplicativity fails");
    }
    Poly f({Rat(i % 5 - 2), Rat(1), Rat(i % 3), Rat(-1, 2), Rat(i % 7)});
    c.expect(apply_poly(p * q, f) == apply_poly(p, apply_poly(q, f)), "action compatibility fails");
    RatFunc g = RatFunc::reduce(f, Poly::shifted_power(Rat(1, 3), 2));
    c.expect(apply_ratfunc(p * q, g) == apply_ratfunc(p, apply_ratfunc(q, g)), "action on fractions fails");
  }
  c.expect(seconds_since(t0) < 10.0, "runtime over 10 s");
}

void criterion10(Check& c) {
  for (const auto& v : catalog())
    for (const auto& w : kWeights) {
      LmResult r = lm_invariant(v, w, 16);
      for (std::size_t i = 1; i < r.p_sequence.size(); ++i)
        c.expect(r.p_sequence[i - 1] <= r.p_sequence[i], v.name() + " weight " + w.str() + ": p(k) decreases");
    }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"trivial module", criterion1},
      {"cusp fixtures", criterion2},
      {"p_D = 2n on the catalog", criterion3},
      {"weight independence", criterion4},
      {"gr inclusion", criterion5},
      {"duality constant", criterion6},
      {"relative identity", criterion7},
      {"telescoping identity", criterion8},
      {"algebra properties", criterion9},
      {"monotone codimension", criterion10},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check c;
    auto t0 = Clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.ok ? "PASS" : "FAIL") << " " << index << " " << name << " (" << seconds_since(t0) << " s)";
    if (!c.ok) line << ": " << c.why.str();
    std::cout << line.str() << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
