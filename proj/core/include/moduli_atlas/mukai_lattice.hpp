#pragma once

// Arithmetic on the Mukai lattice Z + Z.H + Z of a K3 surface whose Picard
// group is generated by a single ample class H. A divisor class is stored as
// its integer coefficient of H; the self-intersection H.H lives in Surface.

#include <compare>
#include <iosfwd>
#include <string>

#include "moduli_atlas/checked.hpp"

namespace moduli_atlas {

/// A Picard-rank-1 K3 surface, reduced to the one number the lattice needs.
class Surface {
 public:
  /// Throws DomainError unless h_squared is even and >= 2.
  explicit Surface(Int h_squared);

  [[nodiscard]] Int h_squared() const noexcept { return h_squared_; }

  /// k * H^2 / 2, exact for every integer k because H^2 is even.
  [[nodiscard]] Int half_h_squared_times(Int k) const { return ck::mul(k, h_squared_ / 2); }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Int h_squared_;
};

/// (rank, deg, a) standing for (r, deg.H, a) in Z + Pic(X) + Z.
struct MukaiVector {
  Int rank = 0;
  Int deg = 0;
  Int a = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;

  [[nodiscard]] bool is_zero() const noexcept { return rank == 0 && deg == 0 && a == 0; }
  [[nodiscard]] std::string to_string() const;
};

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator*(Int k, const MukaiVector& v);
std::ostream& operator<<(std::ostream& os, const MukaiVector& v);

/// <v, w> = -r(v) a(w) + deg(v) deg(w) H^2 - a(v) r(w).
[[nodiscard]] Int mukai_pairing(const Surface& s, const MukaiVector& v, const MukaiVector& w);

/// chi(v) = rank + a, which equals -<v(O_X), v>.
[[nodiscard]] Int euler_characteristic(const MukaiVector& v);

/// gcd(|rank|, |deg|, |a|). Throws DomainError for the zero vector.
[[nodiscard]] Int divisibility(const MukaiVector& v);

/// v / divisibility(v). Throws DomainError for the zero vector.
[[nodiscard]] MukaiVector primitive_part(const MukaiVector& v);

[[nodiscard]] inline bool is_primitive(const MukaiVector& v) { return divisibility(v) == 1; }

/// Mukai vector of I_Z(mH) with length(Z) = ell: (1, m, m^2 H^2/2 - ell + 1).
[[nodiscard]] MukaiVector ideal_sheaf_vector(const Surface& s, Int m, Int ell);

/// h^0(O(nH)): 0 for n < 0, 1 for n = 0, n^2 H^2/2 + 2 otherwise.
[[nodiscard]] Int h0_line_bundle(const Surface& s, Int n);

/// c_2 = deg^2 H^2/2 + rank - a, defined for rank 1 and 2.
[[nodiscard]] Int second_chern(const Surface& s, const MukaiVector& v);

/// Inverse of second_chern: the vector with the given rank (1 or 2), H-degree and c_2.
[[nodiscard]] MukaiVector vector_from_chern_data(const Surface& s, Int rank, Int deg, Int c2);

}  // namespace moduli_atlas
