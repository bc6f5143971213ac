#include "moduli_atlas/tf_components.hpp"

namespace moduli_atlas {

bool mss_nonempty(const Surface& s, const MukaiVector& v) {
  const MukaiVector v0 = primitive_part(v);
  return mukai_pairing(s, v0, v0) >= -2;
}

Int dim_mss(const Surface& s, const MukaiVector& v) {
  const Int l = divisibility(v);
  const MukaiVector v0 = primitive_part(v);
  const Int self = mukai_pairing(s, v, v);
  // A primitive v with <v,v> = -2 satisfies both the first and the l^2 rule;
  // they agree there (l = 1).
  if (mukai_pairing(s, v0, v0) == -2) return ck::add(self, ck::mul(l, l));
  if (self > 0) return ck::add(self, 1);
  if (self == 0) return l;
  throw DomainError("semistable stack is empty");
}

std::vector<TfComponent> classify_tf_components(const Surface& s, const MukaiVector& v, Int m_max,
                                                Int threshold) {
  if (v.rank != 2) throw DomainError("unsupported rank");
  const bool semistable = mss_nonempty(s, v);

  std::vector<TfComponent> out;
  if (semistable) out.push_back({SemistableStratum{s, v}, dim_mss(s, v), false});

  for (HNType& t : enumerate_hn_types(s, v, m_max)) {
    const bool absorbed = semistable && t.sub_quotient_pairing() > threshold;
    const Int dim = dim_hn_stratum(t);
    out.push_back({std::move(t), dim, absorbed});
  }
  return out;
}

}  // namespace moduli_atlas
