#pragma once

// Brute-force recomputations used to check the classifiers. Only the lattice
// primitives in mukai_lattice.hpp are shared with the code under test.

#include <array>
#include <vector>

#include "moduli_atlas/mukai_lattice.hpp"

namespace moduli_atlas::oracle {

using Triple = std::array<Int, 3>;  // (m, ell1, ell2)

/// Naive scan over m in [n - m_max, m_max] and ell1 >= 0, keeping every
/// splitting v = v(I_Z1(m)) + v(I_Z2(n-m)) that is HN-ordered.
[[nodiscard]] std::vector<Triple> oracle_enumerate(const Surface& s, const MukaiVector& v,
                                                   Int m_max);

enum class Verdict { Whole, Components, Empty };

struct BnSummary {
  Verdict verdict = Verdict::Empty;
  Int alpha = 0;
  Int beta = 0;
  std::vector<Int> dimensions;  // sorted ascending

  friend bool operator==(const BnSummary&, const BnSummary&) = default;
};

[[nodiscard]] BnSummary oracle_bn(const Surface& s, Int n, Int big_n, Int threshold);

}  // namespace moduli_atlas::oracle
