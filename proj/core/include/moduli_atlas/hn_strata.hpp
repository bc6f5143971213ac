#pragma once

// Harder-Narasimhan types of a rank-2 torsion-free sheaf on a Picard-rank-1
// K3, their stratum dimensions, and the polygon dominance order.
//
// A type is a pair (v1, v2) with v1 = v(I_Z1(mH)), v2 = v(I_Z2((n-m)H)),
// v1 + v2 = v = (2, n, a), recorded as the triple (m, ell1, ell2). The
// ordering is by slope, and by Euler characteristic when the slopes agree.

#include <variant>
#include <vector>

#include "moduli_atlas/mukai_lattice.hpp"

namespace moduli_atlas {

class HNType {
 public:
  [[nodiscard]] const Surface& surface() const noexcept { return surface_; }
  [[nodiscard]] const MukaiVector& total() const noexcept { return total_; }
  [[nodiscard]] Int m() const noexcept { return m_; }
  [[nodiscard]] Int ell1() const noexcept { return ell1_; }
  [[nodiscard]] Int ell2() const noexcept { return ell2_; }

  /// v1, the Mukai vector of the destabilising subsheaf.
  [[nodiscard]] MukaiVector sub() const { return ideal_sheaf_vector(surface_, m_, ell1_); }
  /// v2, the Mukai vector of the quotient.
  [[nodiscard]] MukaiVector quotient() const;
  /// <v1, v2>.
  [[nodiscard]] Int sub_quotient_pairing() const;

  [[nodiscard]] bool same_context(const HNType& other) const noexcept {
    return surface_ == other.surface_ && total_ == other.total_;
  }

  friend bool operator==(const HNType&, const HNType&) = default;

 private:
  HNType(const Surface& s, const MukaiVector& v, Int m, Int ell1, Int ell2)
      : surface_(s), total_(v), m_(m), ell1_(ell1), ell2_(ell2) {}

  friend HNType make_hn_type(const Surface&, const MukaiVector&, Int, Int);
  friend std::vector<HNType> enumerate_hn_types(const Surface&, const MukaiVector&, Int);

  Surface surface_;
  MukaiVector total_;
  Int m_;
  Int ell1_;
  Int ell2_;
};

/// The open semistable stratum of the same (surface, v).
struct SemistableStratum {
  Surface surface;
  MukaiVector total;

  friend bool operator==(const SemistableStratum&, const SemistableStratum&) = default;
};

using Stratum = std::variant<SemistableStratum, HNType>;

/// ell1 + ell2 = c2(v) - m (n - m) H^2, the length left for the two ideal sheaves.
[[nodiscard]] Int length_budget(const Surface& s, const MukaiVector& v, Int m);

/// Builds the type (m, ell1, ell2 = budget - ell1). Throws DomainError with
/// "unsupported rank", "length budget exhausted" or
/// "not a Harder-Narasimhan ordering".
[[nodiscard]] HNType make_hn_type(const Surface& s, const MukaiVector& v, Int m, Int ell1);

/// Every type with m <= m_max, sorted by (m, ell1). The full set is infinite,
/// so the window is mandatory; m_max must be at least ceil(n/2).
[[nodiscard]] std::vector<HNType> enumerate_hn_types(const Surface& s, const MukaiVector& v,
                                                     Int m_max);

/// Smallest admissible window for v: ceil(deg/2).
[[nodiscard]] Int minimal_window(const MukaiVector& v);

/// <v1,v1> + <v2,v2> + <v1,v2> + 2.
[[nodiscard]] Int dim_hn_stratum(const HNType& t);

/// H^2 (m - n/2)^2 + 3 c2 - 4 - 3 n^2 H^2 / 4, evaluated exactly over 1/4.
[[nodiscard]] Int dim_hn_closed_form(const HNType& t);

struct PolygonVertex {
  Int rank;
  Int degree;  // deg_H = (coefficient of H) * H^2

  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

/// Vertices of the HN polygon: (0,0), (1, m H^2), (2, n H^2) for a type; the
/// straight segment (0,0), (2, n H^2) for the semistable stratum.
[[nodiscard]] std::vector<PolygonVertex> hn_polygon(const Stratum& s);

/// Polygon dominance. Semistable is the minimum; between types the larger
/// interior vertex wins, and at equal m the smaller ell1 dominates.
/// Throws DomainError("incomparable contexts") if the strata belong to
/// different (surface, v).
[[nodiscard]] bool hnp_dominates(const Stratum& lhs, const Stratum& rhs);

}  // namespace moduli_atlas
