#pragma once

// Components of the Brill-Noether locus
//   W0_N(nH) = { Z in Hilb^N(X) : h^1(I_Z(nH)) >= 1 }.
// A component corresponds to a component of the torsion-free stack for
// v = (2, n, n^2 H^2/2 - N + 2) whose general member E, an extension of
// I_Z(nH) by O_X, has no higher cohomology and a section with torsion-free
// cokernel. Its dimension is dim(stack component) + h^0(E), h^0(E) = chi(v).

#include <optional>
#include <vector>

#include "moduli_atlas/hn_strata.hpp"
#include "moduli_atlas/tf_components.hpp"

namespace moduli_atlas {

/// An effective divisor nH together with a subscheme length N.
class BnInput {
 public:
  /// Throws DomainError unless degree >= 0 and length >= 0.
  BnInput(Surface surface, Int degree, Int length);

  [[nodiscard]] const Surface& surface() const noexcept { return surface_; }
  /// n, the multiple of H.
  [[nodiscard]] Int degree() const noexcept { return degree_; }
  /// N, the length of the subschemes.
  [[nodiscard]] Int length() const noexcept { return length_; }

  friend bool operator==(const BnInput&, const BnInput&) = default;

 private:
  Surface surface_;
  Int degree_;
  Int length_;
};

struct BnComponent {
  /// Set for an alpha component (general E has this HN type); empty for beta
  /// (general E semistable).
  std::optional<HNType> type;
  Int dimension = 0;
  Int codimension = 0;
  MukaiVector mukai_vector;
  /// <v1, v2> for alpha components.
  std::optional<Int> pairing;
  /// Alpha component with <v1, v2> in {0, 1}: present under the threshold-1
  /// reading, absent under threshold -1.
  bool threshold_sensitive = false;

  [[nodiscard]] bool is_alpha() const noexcept { return type.has_value(); }
  [[nodiscard]] bool is_beta() const noexcept { return !type.has_value(); }
};

enum class BnVerdict { WholeHilbertScheme, Components, Empty };

[[nodiscard]] const char* to_string(BnVerdict v) noexcept;

struct BnReport {
  BnInput input;
  BnVerdict verdict = BnVerdict::Empty;
  /// Beta first (when present), then alpha in (m, ell1) order.
  std::vector<BnComponent> components;
  Int hilb_dimension = 0;
  MukaiVector mukai_vector;
  Int threshold = kDefaultThreshold;
  /// HN window used for the alpha scan.
  Int window = 0;

  [[nodiscard]] std::size_t alpha_count() const;
  [[nodiscard]] bool has_beta() const;
};

/// (2, n, n^2 H^2/2 - N + 2); its c_2 equals N.
[[nodiscard]] MukaiVector bn_mukai_vector(const BnInput& inp);

/// H^2 = 2 and v = (2, 3, 5): the one semistable case whose general member
/// has no section with torsion-free cokernel.
[[nodiscard]] bool exceptional(const Surface& s, const MukaiVector& v);

/// Window large enough for every alpha candidate (they all have m < n).
[[nodiscard]] Int bn_window(const BnInput& inp);

[[nodiscard]] BnReport classify_bn(const BnInput& inp, Int threshold = kDefaultThreshold);

/// Closed-form dimension predictions for the components of classify_bn:
/// alpha -> 2N - m(n-m) H^2; beta with <v,v> > 0 -> 3N - 3 - n^2 H^2/2.
/// Beta with <v,v> <= 0 has no closed form (nullopt).
struct DimensionIdentity {
  std::optional<HNType> type;
  Int dimension = 0;
  std::optional<Int> predicted_dimension;
  std::optional<Int> predicted_codimension;
};

/// Throws DomainError unless the verdict is Components.
[[nodiscard]] std::vector<DimensionIdentity> bn_component_dimension_identities(
    const BnInput& inp, Int threshold = kDefaultThreshold);

}  // namespace moduli_atlas
