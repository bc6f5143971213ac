#include "moduli_atlas/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace moduli_atlas::oracle {

std::vector<Triple> oracle_enumerate(const Surface& s, const MukaiVector& v, Int m_max) {
  if (v.rank != 2) throw DomainError("unsupported rank");
  const Int h = s.h_squared();
  std::vector<Triple> out;
  for (Int m = ck::sub(v.deg, m_max); m <= m_max; ++m) {
    for (Int ell1 = 0;; ++ell1) {
      const MukaiVector v1 = ideal_sheaf_vector(s, m, ell1);
      const MukaiVector v2 = v - v1;
      if (v2.rank != 1) break;
      // v2 = (1, d, d^2 H^2/2 - ell2 + 1)  =>  ell2 = d^2 H^2/2 + 1 - a
      const Int ell2 = ck::sub(ck::add(ck::mul(v2.deg, v2.deg, h) / 2, 1), v2.a);
      if (ell2 < 0) break;  // ell2 only shrinks as ell1 grows
      const bool ordered =
          v1.deg > v2.deg || (v1.deg == v2.deg && euler_characteristic(v1) > euler_characteristic(v2));
      if (ordered) out.push_back({m, ell1, ell2});
    }
  }
  return out;
}

BnSummary oracle_bn(const Surface& s, Int n, Int big_n, Int threshold) {
  const Int h = s.h_squared();
  BnSummary out;

  const Int sections = n < 0 ? 0 : (n == 0 ? 1 : ck::mul(n, n, h) / 2 + 2);
  if (big_n > sections) {
    out.verdict = Verdict::Whole;
    return out;
  }

  const MukaiVector v{2, n, ck::mul(n, n, h) / 2 - big_n + 2};
  const Int chi = 2 + v.a;

  // Alpha: general member of an HN stratum.
  const Int window = std::max<Int>((n + 1) / 2, n - 1);
  for (const Triple& t : oracle_enumerate(s, v, window)) {
    const Int m = t[0];
    const MukaiVector v1{1, m, ck::mul(m, m, h) / 2 - t[1] + 1};
    const MukaiVector v2{1, n - m, ck::mul(n - m, n - m, h) / 2 - t[2] + 1};
    const bool slopes_ok = 2 * m >= n && n > m && m > 0;
    const bool sections_ok = ck::mul(n - m, n - m, h) / 2 + 2 > t[2];
    const Int p12 = mukai_pairing(s, v1, v2);
    if (!slopes_ok || !sections_ok || chi <= 0 || p12 > threshold) continue;
    const Int dim = mukai_pairing(s, v1, v1) + mukai_pairing(s, v2, v2) + p12 + 2;
    out.dimensions.push_back(dim + chi);
    ++out.alpha;
  }

  // Beta: general member semistable.
  const Int l = std::gcd(std::gcd(Int{2}, n), v.a < 0 ? -v.a : v.a);
  const MukaiVector v0{v.rank / l, v.deg / l, v.a / l};
  const Int p0 = mukai_pairing(s, v0, v0);
  const Int pv = mukai_pairing(s, v, v);
  const bool is_exception = h == 2 && n == 3 && v.a == 5;
  if (p0 >= -2 && !is_exception && n > 0 && chi > 0) {
    Int dim = 0;
    if (p0 == -2) dim = pv + l * l;
    else if (pv > 0) dim = pv + 1;
    else dim = l;  // pv == 0 here: p0 >= -2 and p0 != -2 forces p0 >= 0
    out.dimensions.push_back(dim + chi);
    ++out.beta;
  }

  std::sort(out.dimensions.begin(), out.dimensions.end());
  out.verdict = out.dimensions.empty() ? Verdict::Empty : Verdict::Components;
  return out;
}

}  // namespace moduli_atlas::oracle
