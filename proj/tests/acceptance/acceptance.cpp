// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "moduli_atlas/brill_noether.hpp"
#include "moduli_atlas/hn_strata.hpp"
#include "moduli_atlas/oracle.hpp"
#include "moduli_atlas/sweep.hpp"
#include "moduli_atlas/tf_components.hpp"

using namespace moduli_atlas;
using moduli_atlas::testing::Gen;
using moduli_atlas::testing::kPropertyCases;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message; later failures only count.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + " failure(s); first: " + first_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string at(Int h, Int n, Int big_n) {
  std::ostringstream os;
  os << "(h2=" << h << ", n=" << n << ", N=" << big_n << ")";
  return os.str();
}

BnReport bn(Int h, Int n, Int big_n, Int thr = kDefaultThreshold) {
  return classify_bn(BnInput(Surface(h), n, big_n), thr);
}

bool single_beta(const BnReport& r, Int dim) {
  return r.verdict == BnVerdict::Components && r.components.size() == 1 && r.components[0].is_beta() &&
         r.components[0].dimension == dim;
}

template <class F>
void for_grid(F&& f) {
  const auto grid = oracle::GridSpec::default_grid();
  for (Int h : grid.h_squared)
    for (Int n = grid.n_min; n <= grid.n_max; ++n)
      for (Int big_n = grid.length_min; big_n <= grid.length_max; ++big_n) f(h, n, big_n, grid.window_for(n));
}

Outcome ac1() {
  Check c;
  c.expect(single_beta(bn(4, 1, 4), 7), "W(4,1,4) is not a single beta of dimension 7");
  return c.outcome("H^2=4, n=1, N=4: one beta, dim 7");
}

Outcome ac2() {
  Check c;
  const auto r = bn(4, 2, 4);
  c.expect(single_beta(r, 4), "W(4,2,4) is not a single beta of dimension 4");
  c.expect(r.alpha_count() == 0, "W(4,2,4) has alpha components");
  return c.outcome("H^2=4, n=2, N=4: one beta, dim 4, no alpha");
}

Outcome ac3() {
  Check c;
  c.expect(single_beta(bn(2, 1, 2), 2), "W(2,1,2) is not a single beta of dimension 2");
  c.expect(single_beta(bn(2, 2, 2), 2), "W(2,2,2) is not a single beta of dimension 2");
  c.expect(bn(2, 3, 2).verdict == BnVerdict::Empty, "W(2,3,2) is not empty");
  return c.outcome("H^2=2, N=2: n=1,2 one beta of dim 2; n=3 empty");
}

Outcome ac4() {
  Check c;
  const auto r = bn(2, 3, 6);
  c.expect(!r.has_beta(), "exceptional case has a beta component");
  c.expect(r.alpha_count() == 3, "alpha count is " + std::to_string(r.alpha_count()));
  for (const auto& comp : r.components)
    c.expect(comp.dimension == 8, "alpha of dimension " + std::to_string(comp.dimension));
  const auto o = oracle::oracle_bn(Surface(2), 3, 6, kDefaultThreshold);
  c.expect(o == oracle::summarize(r), "oracle disagrees: " + oracle::describe(o));
  return c.outcome("H^2=2, n=3, N=6: no beta, three alpha of dim 8");
}

Outcome ac5() {
  Check c;
  const auto r = bn(2, 1, 5);
  c.expect(r.verdict == BnVerdict::WholeHilbertScheme, "verdict is not whole");
  c.expect(r.hilb_dimension == 10, "hilb_dimension is " + std::to_string(r.hilb_dimension));
  return c.outcome("H^2=2, n=1, N=5: whole Hilb^5, dim 10");
}

Outcome ac6() {
  Check c;
  long types = 0;
  for_grid([&](Int h, Int n, Int big_n, Int m_max) {
    const Surface s(h);
    const MukaiVector v = bn_mukai_vector(BnInput(s, n, big_n));
    for (const HNType& t : enumerate_hn_types(s, v, m_max)) {
      ++types;
      c.expect(dim_hn_stratum(t) == dim_hn_closed_form(t), "closed form mismatch at " + at(h, n, big_n));
    }
  });
  return c.outcome(std::to_string(types) + " HN types on the grid");
}

Outcome ac7() {
  Check c;
  long alpha = 0, beta = 0;
  for_grid([&](Int h, Int n, Int big_n, Int) {
    for (Int thr : {1, -1}) {
      const Surface s(h);
      const auto r = classify_bn(BnInput(s, n, big_n), thr);
      for (const auto& comp : r.components) {
        if (comp.is_alpha()) {
          ++alpha;
          const Int m = comp.type->m();
          c.expect(comp.codimension == m * (n - m) * h, "alpha codimension at " + at(h, n, big_n));
        } else if (mukai_pairing(s, r.mukai_vector, r.mukai_vector) > 0) {
          ++beta;
          c.expect(comp.codimension == h0_line_bundle(s, n) - big_n + 1,
                   "beta codimension at " + at(h, n, big_n));
        }
      }
    }
  });
  return c.outcome(std::to_string(alpha) + " alpha, " + std::to_string(beta) + " beta with <v,v> > 0");
}

Outcome ac8() {
  Check c;
  const auto grid = oracle::GridSpec::default_grid();
  for (Int thr : {1, -1}) {
    const auto d = oracle::sweep(grid, thr);
    c.expect(d.empty(), d.empty() ? "" : "threshold " + std::to_string(thr) + ": " + d.front().check + " at " +
                                             at(d.front().h_squared, d.front().n, d.front().length));
  }
  const auto loose = bn(2, 3, 7, 1).alpha_count();
  const auto strict = bn(2, 3, 7, -1).alpha_count();
  c.expect(loose == 3 && strict == 0,
           "showcase alpha counts " + std::to_string(loose) + " vs " + std::to_string(strict));
  return c.outcome("zero discrepancies at thresholds 1 and -1; showcase alpha 3 vs 0");
}

Outcome ac9() {
  Check c;
  Gen g(0xac09);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Surface s = g.surface();
    const MukaiVector v = g.vector(), w = g.vector(), u = g.vector();
    const Int x = g.uniform(-20, 20), y = g.uniform(-20, 20);
    c.expect(mukai_pairing(s, v, w) == mukai_pairing(s, w, v), "pairing symmetry");
    c.expect(mukai_pairing(s, x * v + y * w, u) == x * mukai_pairing(s, v, u) + y * mukai_pairing(s, w, u),
             "pairing bilinearity");
    c.expect(mukai_pairing(s, v, v) % 2 == 0, "pairing evenness");
    c.expect(euler_characteristic(v) == -mukai_pairing(s, {1, 0, 1}, v), "chi duality");
    const Int ell = g.uniform(0, 60);
    const MukaiVector iz = ideal_sheaf_vector(s, g.uniform(-30, 30), ell);
    c.expect(mukai_pairing(s, iz, iz) == 2 * ell - 2, "ideal-sheaf norm");
  }

  // Dominance axioms on random triples drawn from one window each.
  for (int i = 0; i < kPropertyCases; ++i) {
    const Surface s = g.surface(3);
    const MukaiVector v = g.rank_two(s, 5, 14);
    std::vector<Stratum> all{SemistableStratum{s, v}};
    for (HNType& t : enumerate_hn_types(s, v, minimal_window(v) + 2)) all.emplace_back(std::move(t));
    const auto pick = [&]() -> const Stratum& { return all[g.uniform(0, static_cast<Int>(all.size()) - 1)]; };
    const Stratum &a = pick(), &b = pick(), &d = pick();
    c.expect(hnp_dominates(a, a), "dominance reflexivity");
    if (hnp_dominates(a, b) && hnp_dominates(b, a)) c.expect(a == b, "dominance antisymmetry");
    if (hnp_dominates(a, b) && hnp_dominates(b, d)) c.expect(hnp_dominates(a, d), "dominance transitivity");
    c.expect(hnp_dominates(a, all.front()), "semistable is the minimum");
  }

  // Enumeration: deterministic and monotone in m_max.
  for (int i = 0; i < kPropertyCases; ++i) {
    const Surface s = g.surface(4);
    const MukaiVector v = g.rank_two(s, 6, 30);
    const Int m_max = minimal_window(v) + g.uniform(0, 3);
    const auto first = enumerate_hn_types(s, v, m_max);
    c.expect(first == enumerate_hn_types(s, v, m_max), "enumeration determinism");
    const auto wider = enumerate_hn_types(s, v, m_max + g.uniform(1, 3));
    c.expect(wider.size() >= first.size() && std::equal(first.begin(), first.end(), wider.begin()),
             "enumeration m_max-monotonicity");
  }
  return c.outcome(std::to_string(kPropertyCases) + " random inputs per property");
}

Outcome ac10() {
  Check c;
  long strata = 0, case_c = 0, positive = 0;
  const auto check = [&](const Surface& s, const MukaiVector& v, Int m_max, const std::string& where) {
    const bool ss = mss_nonempty(s, v);
    const Int self = mukai_pairing(s, v, v);
    const MukaiVector v0 = primitive_part(v);
    const Int p0 = mukai_pairing(s, v0, v0);
    const bool is_c = divisibility(v) >= 2 && (p0 == 0 || p0 == -2);
    for (Int thr : {1, -1}) {
      for (const TfComponent& comp : classify_tf_components(s, v, m_max, thr)) {
        const HNType* t = comp.hn_type();
        if (t == nullptr) continue;
        ++strata;
        const Int p = t->sub_quotient_pairing();
        if (ss) c.expect(comp.absorbed == (p > thr), "absorption criterion at " + where);
        else c.expect(!comp.absorbed, "absorbed stratum without semistable sheaves at " + where);
        if (is_c) {
          ++case_c;
          c.expect(p <= 0, "case (c) stratum with <v1,v2> > 0 at " + where);
        }
        if (ss && self > 0) {
          ++positive;
          c.expect(dim_mss(s, v) - dim_hn_stratum(*t) == p - 1, "dim_mss - dim_hn at " + where);
        }
      }
    }
  };
  for_grid([&](Int h, Int n, Int big_n, Int m_max) {
    const Surface s(h);
    check(s, bn_mukai_vector(BnInput(s, n, big_n)), m_max, at(h, n, big_n));
  });
  // Same (h, n) grid in Chern coordinates, odd and negative c2 included.
  for (Int h : {2, 4, 6})
    for (Int n = 0; n <= 8; ++n)
      for (Int c2 = -4; c2 <= 40; ++c2) {
        const Surface s(h);
        check(s, vector_from_chern_data(s, 2, n, c2), n + 4, at(h, n, c2));
      }
  return c.outcome(std::to_string(strata) + " strata, " + std::to_string(case_c) + " in case (c), " +
                   std::to_string(positive) + " with <v,v> > 0");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1  W0_4(H), H^2=4", ac1},
      {"AC2  W0_4(2H), H^2=4", ac2},
      {"AC3  H^2=2, N=2", ac3},
      {"AC4  exceptional v=(2,3H,5)", ac4},
      {"AC5  whole-scheme fallback", ac5},
      {"AC6  closed-form stratum dimension", ac6},
      {"AC7  codimension identities", ac7},
      {"AC8  oracle equivalence", ac8},
      {"AC9  lattice property suite", ac9},
      {"AC10 torsion-free stack invariants", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s [%.0f ms]\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(), ms);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
