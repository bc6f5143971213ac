#include "moduli_atlas/hn_strata.hpp"

#include <stdexcept>
#include <type_traits>

namespace moduli_atlas {
namespace {

void require_rank_two(const MukaiVector& v) {
  if (v.rank != 2) throw DomainError("unsupported rank");
}

// Slope order on the two factors; at equal slope chi(v1) > chi(v2), which for
// ideal sheaves of the same twist reads ell1 < ell2.
bool is_hn_ordered(Int m, Int n, Int ell1, Int ell2) {
  const Int other = n - m;
  return m > other || (m == other && ell1 < ell2);
}

const Surface& surface_of(const Stratum& s) {
  return std::visit([](const auto& x) -> const Surface& {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HNType>) return x.surface();
    else return x.surface;
  }, s);
}

const MukaiVector& total_of(const Stratum& s) {
  return std::visit([](const auto& x) -> const MukaiVector& {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HNType>) return x.total();
    else return x.total;
  }, s);
}

}  // namespace

MukaiVector HNType::quotient() const {
  return ideal_sheaf_vector(surface_, ck::sub(total_.deg, m_), ell2_);
}

Int HNType::sub_quotient_pairing() const { return mukai_pairing(surface_, sub(), quotient()); }

Int length_budget(const Surface& s, const MukaiVector& v, Int m) {
  const Int cross = ck::mul(m, ck::sub(v.deg, m), s.h_squared());
  return ck::sub(second_chern(s, v), cross);
}

Int minimal_window(const MukaiVector& v) { return ck::ceil_div(v.deg, 2); }

HNType make_hn_type(const Surface& s, const MukaiVector& v, Int m, Int ell1) {
  require_rank_two(v);
  if (ell1 < 0) throw DomainError("negative subscheme length");
  const Int ell2 = ck::sub(length_budget(s, v, m), ell1);
  if (ell2 < 0) throw DomainError("length budget exhausted");
  if (!is_hn_ordered(m, v.deg, ell1, ell2)) throw DomainError("not a Harder-Narasimhan ordering");
  return HNType(s, v, m, ell1, ell2);
}

std::vector<HNType> enumerate_hn_types(const Surface& s, const MukaiVector& v, Int m_max) {
  require_rank_two(v);
  const Int m_min = minimal_window(v);
  if (m_max < m_min) throw DomainError("window m_max is below ceil(n/2)");

  std::vector<HNType> types;
  for (Int m = m_min; m <= m_max; ++m) {
    const Int budget = length_budget(s, v, m);
    for (Int ell1 = 0; ell1 <= budget; ++ell1) {
      const Int ell2 = budget - ell1;
      if (is_hn_ordered(m, v.deg, ell1, ell2)) types.push_back(HNType(s, v, m, ell1, ell2));
    }
  }
  return types;
}

Int dim_hn_stratum(const HNType& t) {
  const Surface& s = t.surface();
  const MukaiVector v1 = t.sub();
  const MukaiVector v2 = t.quotient();
  return ck::add(mukai_pairing(s, v1, v1), mukai_pairing(s, v2, v2), mukai_pairing(s, v1, v2), 2);
}

Int dim_hn_closed_form(const HNType& t) {
  // 4 * value = H^2 (2m - n)^2 + 12 c2 - 16 - 3 n^2 H^2
  const Int h = t.surface().h_squared();
  const Int n = t.total().deg;
  const Int c2 = second_chern(t.surface(), t.total());
  const Int shift = ck::sub(ck::mul(2, t.m()), n);
  const Int numerator = ck::sub(ck::add(ck::mul(h, shift, shift), ck::mul(12, c2)),
                                ck::add(16, ck::mul(3, n, n, h)));
  if (numerator % 4 != 0) throw std::logic_error("closed-form stratum dimension is not integral");
  return numerator / 4;
}

std::vector<PolygonVertex> hn_polygon(const Stratum& stratum) {
  const Int h = surface_of(stratum).h_squared();
  const PolygonVertex end{2, ck::mul(total_of(stratum).deg, h)};
  if (const auto* t = std::get_if<HNType>(&stratum)) {
    return {{0, 0}, {1, ck::mul(t->m(), h)}, end};
  }
  return {{0, 0}, end};
}

bool hnp_dominates(const Stratum& lhs, const Stratum& rhs) {
  if (!(surface_of(lhs) == surface_of(rhs)) || !(total_of(lhs) == total_of(rhs))) {
    throw DomainError("incomparable contexts");
  }
  const auto* a = std::get_if<HNType>(&lhs);
  const auto* b = std::get_if<HNType>(&rhs);
  if (b == nullptr) return true;   // everything dominates the straight segment
  if (a == nullptr) return false;  // the segment lies strictly below any type
  const Int ya = hn_polygon(lhs)[1].degree;
  const Int yb = hn_polygon(rhs)[1].degree;
  if (ya != yb) return ya > yb;
  return a->ell1() <= b->ell1();
}

}  // namespace moduli_atlas
