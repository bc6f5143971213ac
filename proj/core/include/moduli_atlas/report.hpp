#pragma once

// Serializable classification reports shared by the CLI subcommands.
// JSON output follows schemas/report.schema.json; bump kSchemaVersion on any
// change to the field set.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli_atlas/brill_noether.hpp"
#include "moduli_atlas/tf_components.hpp"

namespace moduli_atlas::report {

inline constexpr int kSchemaVersion = 1;

struct ComponentRecord {
  std::string kind;  // semistable | hn | alpha | beta
  std::optional<std::array<Int, 3>> type;
  Int dimension = 0;
  std::optional<Int> codimension;
  std::optional<Int> pairing;
  bool absorbed = false;
  bool threshold_sensitive = false;

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct ReportRecord {
  int schema_version = kSchemaVersion;
  std::string tool_version;
  std::string command;  // classify-tf | classify-bn
  Int h2 = 0;
  MukaiVector vector;
  std::optional<Int> n;
  std::optional<Int> length;
  Int m_max = 0;
  Int threshold = kDefaultThreshold;
  std::string verdict;
  std::optional<Int> hilb_dimension;
  std::vector<std::string> notes;
  std::vector<ComponentRecord> components;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// `include_absorbed` keeps HN strata lying inside the semistable closure.
[[nodiscard]] ReportRecord make_tf_record(const Surface& s, const MukaiVector& v, Int m_max,
                                          Int threshold, const std::vector<TfComponent>& comps,
                                          bool include_absorbed);
[[nodiscard]] ReportRecord make_bn_record(const BnReport& report);

[[nodiscard]] std::string render_json(const ReportRecord& r);
/// Throws DomainError on malformed input or an unknown schema version.
[[nodiscard]] ReportRecord parse_json(std::string_view text);
[[nodiscard]] std::string render_text(const ReportRecord& r);
[[nodiscard]] std::string render_csv(const ReportRecord& r);

}  // namespace moduli_atlas::report
