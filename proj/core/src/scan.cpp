#include "moduli_atlas/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "moduli_atlas/report.hpp"

namespace moduli_atlas {
namespace {

Int parse_int(std::string_view text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw OverflowError();
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("malformed range bound '" + std::string(text) + "'");
  }
  return value;
}

ScanRow scan_point(const Surface& s, Int n, Int length, Int threshold) {
  const BnReport report = classify_bn(BnInput(s, n, length), threshold);
  ScanRow row{s.h_squared(), n, length, report.verdict, static_cast<Int>(report.alpha_count()),
              report.has_beta(), std::nullopt, std::nullopt, threshold};
  if (report.verdict == BnVerdict::WholeHilbertScheme) {
    row.min_dim = row.max_dim = report.hilb_dimension;
  } else if (!report.components.empty()) {
    const auto [lo, hi] = std::minmax_element(
        report.components.begin(), report.components.end(),
        [](const BnComponent& a, const BnComponent& b) { return a.dimension < b.dimension; });
    row.min_dim = lo->dimension;
    row.max_dim = hi->dimension;
  }
  return row;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto sep = text.find("..");
  if (sep == std::string_view::npos) throw DomainError("range must look like A..B");
  const IntRange r{parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
  if (r.hi < r.lo) throw DomainError("empty range");
  return r;
}

std::vector<ScanRow> run_scan(const Surface& s, IntRange n_range, IntRange length_range,
                              Int threshold) {
  if (n_range.hi < n_range.lo || length_range.hi < length_range.lo) throw DomainError("empty range");
  if (n_range.lo < 0 || length_range.lo < 0) throw DomainError("scan ranges must be nonnegative");

  std::vector<std::pair<Int, Int>> points;
  for (Int n = n_range.lo; n <= n_range.hi; ++n)
    for (Int len = length_range.lo; len <= length_range.hi; ++len) points.emplace_back(n, len);

  std::vector<ScanRow> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = scan_point(s, points[i].first, points[i].second, threshold);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < workers; ++k) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string render_scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "h2,n,N,verdict,alpha_count,beta,min_dim,max_dim,threshold\n";
  for (const ScanRow& r : rows) {
    os << r.h2 << ',' << r.n << ',' << r.length << ',' << to_string(r.verdict) << ','
       << r.alpha_count << ',' << (r.beta ? 1 : 0) << ',';
    if (r.min_dim) os << *r.min_dim;
    os << ',';
    if (r.max_dim) os << *r.max_dim;
    os << ',' << r.threshold << "\n";
  }
  return os.str();
}

std::string render_scan_json(const std::vector<ScanRow>& rows) {
  using nlohmann::json;
  json arr = json::array();
  for (const ScanRow& r : rows) {
    arr.push_back({{"h2", r.h2},
                   {"n", r.n},
                   {"N", r.length},
                   {"verdict", to_string(r.verdict)},
                   {"alpha_count", r.alpha_count},
                   {"beta", r.beta},
                   {"min_dim", r.min_dim ? json(*r.min_dim) : json(nullptr)},
                   {"max_dim", r.max_dim ? json(*r.max_dim) : json(nullptr)},
                   {"threshold", r.threshold}});
  }
  const json j = {{"schema_version", report::kSchemaVersion}, {"rows", arr}};
  return j.dump(2) + "\n";
}

}  // namespace moduli_atlas
