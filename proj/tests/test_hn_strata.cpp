#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "generators.hpp"
#include "moduli_atlas/hn_strata.hpp"

using namespace moduli_atlas;
using moduli_atlas::testing::Gen;

namespace {

std::tuple<Int, Int, Int> triple(const HNType& t) { return {t.m(), t.ell1(), t.ell2()}; }

std::size_t count_m(const std::vector<HNType>& ts, Int m) {
  return static_cast<std::size_t>(
      std::count_if(ts.begin(), ts.end(), [m](const HNType& t) { return t.m() == m; }));
}

}  // namespace

TEST_CASE("make_hn_type") {
  const Surface s(2);
  const HNType t = make_hn_type(s, {2, 3, 5}, 2, 0);
  CHECK(triple(t) == std::tuple<Int, Int, Int>{2, 0, 2});
  CHECK(t.sub() + t.quotient() == MukaiVector{2, 3, 5});

  CHECK_THROWS_WITH((void)make_hn_type(s, {2, 3, 5}, 1, 0), "not a Harder-Narasimhan ordering");
  CHECK_THROWS_WITH((void)make_hn_type(s, {2, 3, 5}, 2, 3), "length budget exhausted");
  CHECK_THROWS_WITH((void)make_hn_type(s, {1, 3, 5}, 2, 0), "unsupported rank");

  const HNType eq = make_hn_type(s, {2, 2, 2}, 1, 0);
  CHECK(triple(eq) == std::tuple<Int, Int, Int>{1, 0, 2});
  // (1, 1, 1) has equal slope and equal chi: not an HN ordering.
  CHECK_THROWS_AS((void)make_hn_type(s, {2, 2, 2}, 1, 1), DomainError);
}

TEST_CASE("enumerate_hn_types examples") {
  const Surface s(2);
  const auto a = enumerate_hn_types(s, {2, 3, 5}, 3);
  CHECK(a.size() == 10);
  CHECK(count_m(a, 2) == 3);
  CHECK(count_m(a, 3) == 7);

  CHECK(enumerate_hn_types(s, {2, 3, 9}, 2).empty());

  const auto c = enumerate_hn_types(s, {2, 2, 2}, 2);
  CHECK(c.size() == 6);
  REQUIRE(count_m(c, 1) == 1);
  CHECK(triple(c.front()) == std::tuple<Int, Int, Int>{1, 0, 2});
  CHECK(count_m(c, 2) == 5);

  CHECK_THROWS_WITH((void)enumerate_hn_types(s, {1, 2, 2}, 3), "unsupported rank");
  CHECK_THROWS_AS((void)enumerate_hn_types(s, {2, 5, 2}, 2), DomainError);
}

TEST_CASE("enumeration is sorted, distinct, and satisfies the type invariants") {
  Gen g(0x4e01);
  for (int i = 0; i < 400; ++i) {
    const Surface s = g.surface(4);
    const MukaiVector v = g.rank_two(s);
    const Int m_max = minimal_window(v) + g.uniform(0, 4);
    const auto ts = enumerate_hn_types(s, v, m_max);
    std::set<std::tuple<Int, Int, Int>> seen;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const HNType& t = ts[k];
      REQUIRE(seen.insert(triple(t)).second);
      if (k > 0) REQUIRE(std::pair(ts[k - 1].m(), ts[k - 1].ell1()) < std::pair(t.m(), t.ell1()));
      REQUIRE(t.sub() + t.quotient() == v);
      REQUIRE(t.ell1() >= 0);
      REQUIRE(t.ell2() >= 0);
      REQUIRE(t.m() <= m_max);
      const Int other = v.deg - t.m();
      REQUIRE((t.m() > other || (t.m() == other && t.ell1() < t.ell2())));
      // ell1 + ell2 + m(n-m) H^2 = c2
      REQUIRE(t.ell1() + t.ell2() + t.m() * other * s.h_squared() == second_chern(s, v));
      REQUIRE(make_hn_type(s, v, t.m(), t.ell1()) == t);
    }
  }
}

TEST_CASE("stratum dimension examples") {
  const Surface s2(2);
  const HNType a = make_hn_type(s2, {2, 3, 5}, 2, 0);
  CHECK(dim_hn_stratum(a) == 1);
  CHECK(dim_hn_closed_form(a) == 1);
  for (Int ell1 : {1, 2}) CHECK(dim_hn_closed_form(make_hn_type(s2, {2, 3, 5}, 2, ell1)) == 1);

  const HNType b = make_hn_type(s2, {2, 2, 6}, 2, 0);
  CHECK(triple(b) == std::tuple<Int, Int, Int>{2, 0, 0});
  CHECK(dim_hn_stratum(b) == -8);
  CHECK(dim_hn_closed_form(b) == -8);

  const Surface s4(4);
  // c2 = 8 + 2 - 6 = 4; at m = 1 = n - m the budget is 0, which fails ell1 < ell2.
  CHECK_THROWS_AS((void)make_hn_type(s4, {2, 2, 6}, 1, 0), DomainError);
  const HNType c = make_hn_type(s4, {2, 2, 6}, 2, 0);
  CHECK(dim_hn_stratum(c) == dim_hn_closed_form(c));

  // m = n/2: the square term vanishes.
  const HNType eq = make_hn_type(s2, {2, 2, 2}, 1, 0);
  CHECK(dim_hn_closed_form(eq) == 3 * 4 - 4 - 3 * 4 * 2 / 4);
}

TEST_CASE("property: formula agreement, budget and pairing identities") {
  Gen g(0x4e02);
  for (int i = 0; i < 2000; ++i) {
    const Surface s = g.surface(5);
    const MukaiVector v = g.rank_two(s, 8, 40);
    const Int h = s.h_squared();
    for (const HNType& t : enumerate_hn_types(s, v, minimal_window(v) + 3)) {
      REQUIRE(dim_hn_stratum(t) == dim_hn_closed_form(t));
      const Int shift = 2 * t.m() - v.deg;
      // <v1,v2> = ell1 + ell2 - 2 - (H^2/2)(2m - n)^2, brute pairing on the left
      REQUIRE(mukai_pairing(s, t.sub(), t.quotient()) ==
              t.ell1() + t.ell2() - 2 - h / 2 * shift * shift);
      REQUIRE(t.sub_quotient_pairing() == mukai_pairing(s, t.sub(), t.quotient()));
    }
  }
}

TEST_CASE("closed form grows strictly with m above n/2") {
  Gen g(0x4e03);
  for (int i = 0; i < 500; ++i) {
    const Surface s = g.surface(5);
    const MukaiVector v = g.rank_two(s, 8, 60);
    const auto ts = enumerate_hn_types(s, v, minimal_window(v) + 5);
    for (const HNType& a : ts)
      for (const HNType& b : ts)
        if (2 * b.m() > v.deg && a.m() > b.m()) REQUIRE(dim_hn_closed_form(a) > dim_hn_closed_form(b));
  }
}

TEST_CASE("polygon vertices") {
  const Surface s(2);
  const HNType t = make_hn_type(s, {2, 3, 5}, 3, 0);
  CHECK(hn_polygon(t) == std::vector<PolygonVertex>{{0, 0}, {1, 6}, {2, 6}});
  CHECK(hn_polygon(SemistableStratum{s, {2, 3, 5}}) == std::vector<PolygonVertex>{{0, 0}, {2, 6}});
}

TEST_CASE("dominance examples") {
  const Surface s(2);
  const MukaiVector v{2, 3, 5};
  const Stratum ss = SemistableStratum{s, v};
  const Stratum hi = make_hn_type(s, v, 3, 0);
  const Stratum lo = make_hn_type(s, v, 2, 0);
  CHECK(hnp_dominates(hi, lo));
  CHECK_FALSE(hnp_dominates(lo, hi));
  CHECK(hnp_dominates(hi, hi));
  CHECK(hnp_dominates(ss, ss));
  CHECK(hnp_dominates(lo, ss));
  CHECK_FALSE(hnp_dominates(ss, lo));
  // equal m: smaller ell1 dominates
  CHECK(hnp_dominates(make_hn_type(s, v, 2, 0), make_hn_type(s, v, 2, 1)));
  CHECK_FALSE(hnp_dominates(make_hn_type(s, v, 2, 1), make_hn_type(s, v, 2, 0)));

  const Stratum other = make_hn_type(Surface(4), v, 2, 0);
  CHECK_THROWS_WITH((void)hnp_dominates(hi, other), "incomparable contexts");
  CHECK_THROWS_AS((void)hnp_dominates(SemistableStratum{s, {2, 1, 0}}, hi), DomainError);
}

TEST_CASE("property: dominance is a partial order on each window") {
  Gen g(0x4e04);
  std::size_t pairs = 0;
  for (int i = 0; i < 60; ++i) {
    const Surface s = g.surface(3);
    const MukaiVector v = g.rank_two(s, 5, 12);
    std::vector<Stratum> all{SemistableStratum{s, v}};
    for (HNType& t : enumerate_hn_types(s, v, minimal_window(v) + 2)) all.emplace_back(std::move(t));
    for (const Stratum& a : all) {
      REQUIRE(hnp_dominates(a, a));
      for (const Stratum& b : all) {
        ++pairs;
        if (hnp_dominates(a, b) && hnp_dominates(b, a)) REQUIRE(a == b);
        for (const Stratum& c : all)
          if (hnp_dominates(a, b) && hnp_dominates(b, c)) REQUIRE(hnp_dominates(a, c));
      }
    }
  }
  CHECK(pairs >= 10000);
}
