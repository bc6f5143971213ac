#pragma once

// Brill-Noether scans over an (n, N) rectangle for one surface.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli_atlas/brill_noether.hpp"

namespace moduli_atlas {

struct IntRange {
  Int lo = 0;
  Int hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "A..B" (inclusive). Throws DomainError("empty range") when B < A
/// and DomainError on malformed text.
[[nodiscard]] IntRange parse_range(std::string_view text);

struct ScanRow {
  Int h2 = 0;
  Int n = 0;
  Int length = 0;
  BnVerdict verdict = BnVerdict::Empty;
  Int alpha_count = 0;
  bool beta = false;
  /// Whole Hilbert scheme reports 2N; Empty leaves both unset.
  std::optional<Int> min_dim;
  std::optional<Int> max_dim;
  Int threshold = kDefaultThreshold;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Rows in (n, N) order. Grid points run in parallel.
[[nodiscard]] std::vector<ScanRow> run_scan(const Surface& s, IntRange n_range, IntRange length_range,
                                            Int threshold = kDefaultThreshold);

/// Header: h2,n,N,verdict,alpha_count,beta,min_dim,max_dim,threshold
[[nodiscard]] std::string render_scan_csv(const std::vector<ScanRow>& rows);
[[nodiscard]] std::string render_scan_json(const std::vector<ScanRow>& rows);

}  // namespace moduli_atlas
