#pragma once

// Grid sweep comparing the classifiers against the brute-force oracles.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moduli_atlas/brill_noether.hpp"
#include "moduli_atlas/oracle.hpp"

namespace moduli_atlas::oracle {

struct GridSpec {
  std::vector<Int> h_squared;
  Int n_min = 0;
  Int n_max = 0;
  Int length_min = 0;
  Int length_max = 0;
  /// HN window per grid point; unset means n + 4.
  std::optional<Int> m_max;

  /// Throws DomainError on an empty range or an invalid H^2.
  void validate() const;
  [[nodiscard]] Int window_for(Int n) const { return m_max.value_or(n + 4); }

  /// h^2 in {2,4,6}, n in [0,8], N in [0,40].
  [[nodiscard]] static GridSpec default_grid();
};

struct Discrepancy {
  Int h_squared = 0;
  Int n = 0;
  Int length = 0;
  std::string check;
  std::string main_output;
  std::string oracle_output;
};

using BnClassifier = std::function<BnReport(const BnInput&, Int)>;

/// Summary of a classifier report in the oracle's terms.
[[nodiscard]] BnSummary summarize(const BnReport& report);
[[nodiscard]] std::string describe(const BnSummary& summary);

/// Runs every check on every grid point; an empty result means full
/// agreement. Output is ordered by (h^2, n, N) whatever the scheduling.
[[nodiscard]] std::vector<Discrepancy> sweep(const GridSpec& grid, Int threshold,
                                             const BnClassifier& classifier = BnClassifier{});

}  // namespace moduli_atlas::oracle
