// moduli-atlas: classify components of rank-2 torsion-free stacks and of
// Brill-Noether loci on Picard-rank-1 K3 surfaces.
//
// Exit codes: 0 ok, 1 verify found discrepancies, 2 usage/domain error,
// 3 arithmetic overflow, 4 I/O error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "moduli_atlas/brill_noether.hpp"
#include "moduli_atlas/config.hpp"
#include "moduli_atlas/polygon_svg.hpp"
#include "moduli_atlas/report.hpp"
#include "moduli_atlas/scan.hpp"
#include "moduli_atlas/sweep.hpp"
#include "moduli_atlas/tf_components.hpp"
#include "moduli_atlas/version.hpp"

namespace ma = moduli_atlas;
using ma::Int;

namespace {

enum ExitCode : int { kOk = 0, kDiscrepancy = 1, kUsage = 2, kOverflow = 3, kIo = 4 };

struct VectorFlags {
  std::optional<Int> h2;
  Int deg = 0;
  std::optional<Int> a;
  std::optional<Int> c2;
  std::optional<Int> m_max;
  Int threshold = ma::kDefaultThreshold;
};

struct TfFlags {
  VectorFlags vec;
  bool verbose = false;
  std::string format;
  std::string out;
};

struct BnFlags {
  std::optional<Int> h2;
  Int n = 0;
  Int length = 0;
  Int threshold = ma::kDefaultThreshold;
  std::string format;
  std::string out;
};

struct ScanFlags {
  std::optional<Int> h2;
  std::string n_range;
  std::string length_range;
  Int threshold = ma::kDefaultThreshold;
  std::string format;
  std::string out;
};

struct PolygonFlags {
  VectorFlags vec;
  std::string out;
};

struct VerifyFlags {
  std::vector<Int> h2;
  std::string n_range = "0..8";
  std::string length_range = "0..40";
  std::optional<Int> m_max;
  std::optional<Int> threshold;
};

void add_vector_flags(CLI::App* cmd, VectorFlags& f) {
  cmd->add_option("--h2", f.h2, "self-intersection H^2 (even, >= 2)");
  cmd->add_option("--deg", f.deg, "H-degree n of v = (2, nH, a)")->required();
  auto* a = cmd->add_option("--a", f.a, "third Mukai coordinate a");
  auto* c2 = cmd->add_option("--c2", f.c2, "second Chern class (alternative to --a)");
  a->excludes(c2);
  cmd->add_option("--m-max", f.m_max, "HN window; default ceil(n/2) + 8");
  cmd->add_option("--threshold", f.threshold, "componenthood bound on <v1,v2> (default 1)");
}

Int resolve_h2(const std::optional<Int>& flag, const ma::CliConfig& cfg) {
  if (flag) return *flag;
  if (cfg.h2) return *cfg.h2;
  throw ma::DomainError("--h2 is required (flag or config)");
}

std::string resolve_format(const std::string& flag, const ma::CliConfig& cfg,
                           std::initializer_list<const char*> allowed, const char* fallback) {
  std::string fmt = !flag.empty() ? flag : cfg.format.value_or(fallback);
  for (const char* ok : allowed)
    if (fmt == ok) return fmt;
  throw ma::DomainError("unsupported format '" + fmt + "'");
}

struct ResolvedVector {
  ma::Surface surface;
  ma::MukaiVector v;
  Int m_max;
};

ResolvedVector resolve_vector(const VectorFlags& f, const ma::CliConfig& cfg) {
  const ma::Surface s(resolve_h2(f.h2, cfg));
  ma::MukaiVector v;
  if (f.a) v = {2, f.deg, *f.a};
  else if (f.c2) v = ma::vector_from_chern_data(s, 2, f.deg, *f.c2);
  else throw ma::DomainError("one of --a or --c2 is required");
  const Int m_max = f.m_max.value_or(ma::ck::add(ma::minimal_window(v), 8));
  return {s, v, m_max};
}

void emit(const std::string& text, const std::string& out, const ma::CliConfig& cfg) {
  if (out.empty()) std::cout << text;
  else ma::write_file(ma::resolve_output(cfg, out), text);
}

std::string render(const ma::report::ReportRecord& r, const std::string& fmt) {
  if (fmt == "json") return ma::report::render_json(r);
  if (fmt == "csv") return ma::report::render_csv(r);
  return ma::report::render_text(r);
}

int run_tf(const TfFlags& f, const ma::CliConfig& cfg) {
  const auto fmt = resolve_format(f.format, cfg, {"text", "json", "csv"}, "text");
  const auto [s, v, m_max] = resolve_vector(f.vec, cfg);
  const auto comps = ma::classify_tf_components(s, v, m_max, f.vec.threshold);
  emit(render(ma::report::make_tf_record(s, v, m_max, f.vec.threshold, comps, f.verbose), fmt), f.out,
       cfg);
  return kOk;
}

int run_bn(const BnFlags& f, const ma::CliConfig& cfg) {
  const auto fmt = resolve_format(f.format, cfg, {"text", "json", "csv"}, "text");
  const ma::BnInput inp(ma::Surface(resolve_h2(f.h2, cfg)), f.n, f.length);
  emit(render(ma::report::make_bn_record(ma::classify_bn(inp, f.threshold)), fmt), f.out, cfg);
  return kOk;
}

int run_scan(const ScanFlags& f, const ma::CliConfig& cfg) {
  const auto fmt = resolve_format(f.format, cfg, {"csv", "json"}, "csv");
  const ma::Surface s(resolve_h2(f.h2, cfg));
  const auto rows =
      ma::run_scan(s, ma::parse_range(f.n_range), ma::parse_range(f.length_range), f.threshold);
  const std::string text = fmt == "json" ? ma::render_scan_json(rows) : ma::render_scan_csv(rows);
  ma::write_file(ma::resolve_output(cfg, f.out), text);
  std::cout << rows.size() << " rows written to " << ma::resolve_output(cfg, f.out).string() << "\n";
  return kOk;
}

int run_polygon(const PolygonFlags& f, const ma::CliConfig& cfg) {
  const auto [s, v, m_max] = resolve_vector(f.vec, cfg);
  const auto comps = ma::classify_tf_components(s, v, m_max, f.vec.threshold);
  ma::write_file(ma::resolve_output(cfg, f.out), ma::render_polygon_svg(s, v, m_max, comps));
  return kOk;
}

int run_verify(const VerifyFlags& f) {
  namespace mo = ma::oracle;
  mo::GridSpec grid = mo::GridSpec::default_grid();
  if (!f.h2.empty()) grid.h_squared = f.h2;
  const auto nr = ma::parse_range(f.n_range);
  const auto lr = ma::parse_range(f.length_range);
  grid.n_min = nr.lo;
  grid.n_max = nr.hi;
  grid.length_min = lr.lo;
  grid.length_max = lr.hi;
  grid.m_max = f.m_max;

  std::vector<Int> thresholds = f.threshold ? std::vector<Int>{*f.threshold} : std::vector<Int>{1, -1};
  std::size_t total = 0;
  for (Int thr : thresholds) {
    const auto found = mo::sweep(grid, thr);
    std::cout << "threshold " << thr << ": " << found.size() << " discrepancies\n";
    for (const auto& d : found) {
      std::cout << "  h2=" << d.h_squared << " n=" << d.n << " N=" << d.length << " [" << d.check
                << "] main: " << d.main_output << " | oracle: " << d.oracle_output << "\n";
    }
    total += found.size();
  }
  return total == 0 ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moduli-atlas: component classification for rank-2 sheaves on K3 surfaces"};
  app.set_version_flag("--version", std::string(ma::kVersion));
  app.require_subcommand(1);

  TfFlags tf;
  auto* tf_cmd = app.add_subcommand("classify-tf", "components of the torsion-free stack M^tf(v)");
  add_vector_flags(tf_cmd, tf.vec);
  tf_cmd->add_flag("--verbose", tf.verbose, "also list HN strata absorbed by the semistable closure");
  tf_cmd->add_option("--format", tf.format, "text | json | csv");
  tf_cmd->add_option("--out", tf.out, "write to file instead of stdout");

  BnFlags bn;
  auto* bn_cmd = app.add_subcommand("classify-bn", "components of the Brill-Noether locus W0_N(nH)");
  bn_cmd->add_option("--h2", bn.h2, "self-intersection H^2 (even, >= 2)");
  bn_cmd->add_option("--n", bn.n, "multiple n of H")->required();
  bn_cmd->add_option("--N", bn.length, "length N of the subschemes")->required();
  bn_cmd->add_option("--threshold", bn.threshold, "alpha bound on <v1,v2> (default 1)");
  bn_cmd->add_option("--format", bn.format, "text | json | csv");
  bn_cmd->add_option("--out", bn.out, "write to file instead of stdout");

  ScanFlags scan;
  auto* scan_cmd = app.add_subcommand("scan", "Brill-Noether table over an (n, N) grid");
  scan_cmd->add_option("--h2", scan.h2, "self-intersection H^2 (even, >= 2)");
  scan_cmd->add_option("--n-range", scan.n_range, "A..B")->required();
  scan_cmd->add_option("--N-range", scan.length_range, "A..B")->required();
  scan_cmd->add_option("--threshold", scan.threshold, "alpha bound on <v1,v2> (default 1)");
  scan_cmd->add_option("--format", scan.format, "csv | json");
  scan_cmd->add_option("--out", scan.out, "output file")->required();

  PolygonFlags poly;
  auto* poly_cmd = app.add_subcommand("polygon", "SVG of the HN polygons of all components");
  add_vector_flags(poly_cmd, poly.vec);
  poly_cmd->add_option("--out", poly.out, "output SVG file")->required();

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare classifiers with brute-force oracles");
  verify_cmd->add_option("--h2", verify.h2, "H^2 values (default 2 4 6)");
  verify_cmd->add_option("--n-range", verify.n_range, "A..B (default 0..8)");
  verify_cmd->add_option("--N-range", verify.length_range, "A..B (default 0..40)");
  verify_cmd->add_option("--m-max", verify.m_max, "HN window (default n + 4)");
  verify_cmd->add_option("--threshold", verify.threshold, "single threshold (default: both 1 and -1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ma::CliConfig cfg = ma::load_config_from_env();
    if (*tf_cmd) return run_tf(tf, cfg);
    if (*bn_cmd) return run_bn(bn, cfg);
    if (*scan_cmd) return run_scan(scan, cfg);
    if (*poly_cmd) return run_polygon(poly, cfg);
    if (*verify_cmd) return run_verify(verify);
  } catch (const ma::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const ma::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ma::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
