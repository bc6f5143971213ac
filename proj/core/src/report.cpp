#include "moduli_atlas/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "moduli_atlas/version.hpp"

namespace moduli_atlas::report {
namespace {

using nlohmann::json;

template <typename T>
json optional_to_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  const json& x = j.at(key);
  if (x.is_null()) return std::nullopt;
  return x.get<T>();
}

std::string window_note(Int m_max) {
  return "window: HN types with m <= " + std::to_string(m_max) +
         " (the full set is infinite; output is truncated)";
}

ComponentRecord from_hn(const HNType& t, Int dim) {
  ComponentRecord c;
  c.kind = "hn";
  c.type = std::array<Int, 3>{t.m(), t.ell1(), t.ell2()};
  c.dimension = dim;
  c.pairing = t.sub_quotient_pairing();
  return c;
}

}  // namespace

ReportRecord make_tf_record(const Surface& s, const MukaiVector& v, Int m_max, Int threshold,
                            const std::vector<TfComponent>& comps, bool include_absorbed) {
  ReportRecord r;
  r.tool_version = kVersion;
  r.command = "classify-tf";
  r.h2 = s.h_squared();
  r.vector = v;
  r.m_max = m_max;
  r.threshold = threshold;
  const bool semistable = mss_nonempty(s, v);
  r.verdict = semistable ? "semistable-nonempty" : "semistable-empty";
  if (!semistable) r.notes.push_back("semistable stack empty");
  r.notes.push_back(window_note(m_max));

  for (const TfComponent& c : comps) {
    if (c.absorbed && !include_absorbed) continue;
    if (c.is_semistable()) {
      ComponentRecord rec;
      rec.kind = "semistable";
      rec.dimension = c.stack_dimension;
      r.components.push_back(rec);
    } else {
      ComponentRecord rec = from_hn(*c.hn_type(), c.stack_dimension);
      rec.absorbed = c.absorbed;
      r.components.push_back(rec);
    }
  }
  return r;
}

ReportRecord make_bn_record(const BnReport& report) {
  ReportRecord r;
  r.tool_version = kVersion;
  r.command = "classify-bn";
  r.h2 = report.input.surface().h_squared();
  r.vector = report.mukai_vector;
  r.n = report.input.degree();
  r.length = report.input.length();
  r.m_max = report.window;
  r.threshold = report.threshold;
  r.verdict = to_string(report.verdict);
  r.hilb_dimension = report.hilb_dimension;
  if (report.verdict == BnVerdict::WholeHilbertScheme) {
    r.notes.push_back("N exceeds h0(O(nH)): every subscheme lies in the locus");
  }
  if (exceptional(report.input.surface(), report.mukai_vector)) {
    r.notes.push_back("exceptional case: no semistable component");
  }
  for (const BnComponent& c : report.components) {
    ComponentRecord rec;
    if (c.type) {
      rec = from_hn(*c.type, c.dimension);
      rec.kind = "alpha";
      rec.threshold_sensitive = c.threshold_sensitive;
    } else {
      rec.kind = "beta";
      rec.dimension = c.dimension;
    }
    rec.codimension = c.codimension;
    r.components.push_back(rec);
  }
  if (std::any_of(report.components.begin(), report.components.end(),
                  [](const BnComponent& c) { return c.threshold_sensitive; })) {
    r.notes.push_back("threshold-sensitive components have <v1,v2> in {0,1}");
  }
  return r;
}

std::string render_json(const ReportRecord& r) {
  json comps = json::array();
  for (const ComponentRecord& c : r.components) {
    comps.push_back({
        {"kind", c.kind},
        {"type", c.type ? json{{"m", (*c.type)[0]}, {"ell1", (*c.type)[1]}, {"ell2", (*c.type)[2]}}
                        : json(nullptr)},
        {"dimension", c.dimension},
        {"codimension", optional_to_json(c.codimension)},
        {"pairing", optional_to_json(c.pairing)},
        {"absorbed", c.absorbed},
        {"threshold_sensitive", c.threshold_sensitive},
    });
  }
  const json j = {
      {"schema_version", r.schema_version},
      {"tool_version", r.tool_version},
      {"command", r.command},
      {"input", {{"h2", r.h2},
                 {"vector", {r.vector.rank, r.vector.deg, r.vector.a}},
                 {"n", optional_to_json(r.n)},
                 {"N", optional_to_json(r.length)}}},
      {"window", {{"m_max", r.m_max}}},
      {"threshold", r.threshold},
      {"verdict", r.verdict},
      {"hilb_dimension", optional_to_json(r.hilb_dimension)},
      {"notes", r.notes},
      {"components", comps},
  };
  return j.dump(2) + "\n";
}

ReportRecord parse_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ReportRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw DomainError("unsupported schema version " + std::to_string(r.schema_version));
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    const json& in = j.at("input");
    r.h2 = in.at("h2").get<Int>();
    const auto vec = in.at("vector").get<std::array<Int, 3>>();
    r.vector = {vec[0], vec[1], vec[2]};
    r.n = optional_from_json<Int>(in, "n");
    r.length = optional_from_json<Int>(in, "N");
    r.m_max = j.at("window").at("m_max").get<Int>();
    r.threshold = j.at("threshold").get<Int>();
    r.verdict = j.at("verdict").get<std::string>();
    r.hilb_dimension = optional_from_json<Int>(j, "hilb_dimension");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const json& c : j.at("components")) {
      ComponentRecord rec;
      rec.kind = c.at("kind").get<std::string>();
      if (const json& t = c.at("type"); !t.is_null()) {
        rec.type = std::array<Int, 3>{t.at("m").get<Int>(), t.at("ell1").get<Int>(),
                                      t.at("ell2").get<Int>()};
      }
      rec.dimension = c.at("dimension").get<Int>();
      rec.codimension = optional_from_json<Int>(c, "codimension");
      rec.pairing = optional_from_json<Int>(c, "pairing");
      rec.absorbed = c.at("absorbed").get<bool>();
      rec.threshold_sensitive = c.at("threshold_sensitive").get<bool>();
      r.components.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const ReportRecord& r) {
  std::ostringstream os;
  os << r.command << "  H^2=" << r.h2 << "  v=" << r.vector;
  if (r.n) os << "  n=" << *r.n << "  N=" << *r.length;
  os << "  threshold=" << r.threshold << "\n";
  os << "verdict: " << r.verdict;
  if (r.hilb_dimension) os << "  (dim Hilb^N = " << *r.hilb_dimension << ")";
  os << "\n";
  for (const std::string& note : r.notes) os << "note: " << note << "\n";
  os << r.components.size() << " component(s)\n";
  for (const ComponentRecord& c : r.components) {
    os << "  " << c.kind;
    if (c.type) os << " (m=" << (*c.type)[0] << ", ell1=" << (*c.type)[1] << ", ell2=" << (*c.type)[2] << ")";
    os << (r.command == "classify-tf" ? "  stack_dimension=" : "  dimension=") << c.dimension;
    if (c.codimension) os << "  codimension=" << *c.codimension;
    if (c.pairing) os << "  <v1,v2>=" << *c.pairing;
    if (c.absorbed) os << "  [absorbed]";
    if (c.threshold_sensitive) os << "  [threshold-sensitive]";
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const ReportRecord& r) {
  std::ostringstream os;
  os << "kind,m,ell1,ell2,dimension,codimension,pairing,absorbed,threshold_sensitive\n";
  for (const ComponentRecord& c : r.components) {
    os << c.kind << ',';
    if (c.type) os << (*c.type)[0] << ',' << (*c.type)[1] << ',' << (*c.type)[2] << ',';
    else os << ",,,";
    os << c.dimension << ',';
    if (c.codimension) os << *c.codimension;
    os << ',';
    if (c.pairing) os << *c.pairing;
    os << ',' << (c.absorbed ? 1 : 0) << ',' << (c.threshold_sensitive ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace moduli_atlas::report
