#pragma once

// Irreducible components of the stack of rank-2 torsion-free sheaves with a
// fixed Mukai vector: the closure of the semistable locus (when nonempty)
// together with the HN strata not swallowed by it.

#include <optional>
#include <vector>

#include "moduli_atlas/hn_strata.hpp"

namespace moduli_atlas {

struct TfComponent {
  Stratum stratum;
  Int stack_dimension = 0;
  /// HN stratum contained in the semistable closure; not a component.
  bool absorbed = false;

  [[nodiscard]] bool is_semistable() const noexcept {
    return std::holds_alternative<SemistableStratum>(stratum);
  }
  [[nodiscard]] const HNType* hn_type() const noexcept { return std::get_if<HNType>(&stratum); }
};

/// Semistable sheaves exist iff <v0, v0> >= -2 for v0 the primitive part.
[[nodiscard]] bool mss_nonempty(const Surface& s, const MukaiVector& v);

/// Dimension of the semistable stack, v = l v0:
///   <v0,v0> = -2 : <v,v> + l^2
///   <v,v>  >  0  : <v,v> + 1
///   <v,v>  =  0  : l
/// Throws DomainError("semistable stack is empty") otherwise.
[[nodiscard]] Int dim_mss(const Surface& s, const MukaiVector& v);

inline constexpr Int kDefaultThreshold = 1;

/// Semistable component first (if any), then one entry per enumerated HN type
/// in (m, ell1) order. With a nonempty semistable locus, types whose
/// <v1, v2> exceeds `threshold` are flagged absorbed.
[[nodiscard]] std::vector<TfComponent> classify_tf_components(const Surface& s,
                                                              const MukaiVector& v, Int m_max,
                                                              Int threshold = kDefaultThreshold);

}  // namespace moduli_atlas
