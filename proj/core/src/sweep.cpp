#include "moduli_atlas/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <sstream>
#include <thread>
#include <tuple>

namespace moduli_atlas::oracle {

void GridSpec::validate() const {
  if (h_squared.empty()) throw DomainError("empty range");
  for (Int h : h_squared) (void)Surface(h);
  if (n_min > n_max || length_min > length_max) throw DomainError("empty range");
  if (n_min < 0 || length_min < 0) throw DomainError("grid ranges must be nonnegative");
  if (m_max && *m_max < ck::ceil_div(n_max, 2)) throw DomainError("window m_max is below ceil(n/2)");
}

GridSpec GridSpec::default_grid() { return GridSpec{{2, 4, 6}, 0, 8, 0, 40, std::nullopt}; }

BnSummary summarize(const BnReport& report) {
  BnSummary out;
  switch (report.verdict) {
    case BnVerdict::WholeHilbertScheme: out.verdict = Verdict::Whole; break;
    case BnVerdict::Components: out.verdict = Verdict::Components; break;
    case BnVerdict::Empty: out.verdict = Verdict::Empty; break;
  }
  for (const BnComponent& c : report.components) {
    (c.is_alpha() ? out.alpha : out.beta) += 1;
    out.dimensions.push_back(c.dimension);
  }
  std::sort(out.dimensions.begin(), out.dimensions.end());
  return out;
}

std::string describe(const BnSummary& summary) {
  std::ostringstream os;
  const char* verdict = summary.verdict == Verdict::Whole        ? "whole"
                        : summary.verdict == Verdict::Components ? "components"
                                                                 : "empty";
  os << verdict << " alpha=" << summary.alpha << " beta=" << summary.beta << " dims=[";
  for (std::size_t i = 0; i < summary.dimensions.size(); ++i) {
    os << (i ? "," : "") << summary.dimensions[i];
  }
  os << ']';
  return os.str();
}

namespace {

struct GridPoint {
  Int h;
  Int n;
  Int length;
};

std::string describe(const std::vector<Triple>& triples) {
  std::ostringstream os;
  os << triples.size() << " types";
  for (const Triple& t : triples) os << " (" << t[0] << ',' << t[1] << ',' << t[2] << ')';
  return os.str();
}

std::vector<Discrepancy> check_point(const GridPoint& p, Int m_max, Int threshold,
                                     const BnClassifier& classifier) {
  std::vector<Discrepancy> out;
  auto record = [&](std::string check, std::string main, std::string oracle) {
    out.push_back({p.h, p.n, p.length, std::move(check), std::move(main), std::move(oracle)});
  };

  const Surface s(p.h);
  const BnInput inp(s, p.n, p.length);

  const BnReport report = classifier ? classifier(inp, threshold) : classify_bn(inp, threshold);
  const BnSummary main_summary = summarize(report);
  const BnSummary oracle_summary = oracle_bn(s, p.n, p.length, threshold);
  if (!(main_summary == oracle_summary)) {
    record("classify_bn", describe(main_summary), describe(oracle_summary));
  }

  const MukaiVector v = bn_mukai_vector(inp);
  const std::vector<HNType> types = enumerate_hn_types(s, v, m_max);
  std::vector<Triple> main_triples;
  main_triples.reserve(types.size());
  for (const HNType& t : types) {
    main_triples.push_back({t.m(), t.ell1(), t.ell2()});
    const Int direct = dim_hn_stratum(t);
    const Int closed = dim_hn_closed_form(t);
    if (direct != closed) {
      record("dim_hn_closed_form", std::to_string(direct), std::to_string(closed));
    }
  }
  const std::vector<Triple> oracle_triples = oracle_enumerate(s, v, m_max);
  if (main_triples != oracle_triples) {
    record("enumerate_hn_types", describe(main_triples), describe(oracle_triples));
  }

  if (report.verdict == BnVerdict::Components) {
    for (std::size_t i = 0; i < report.components.size(); ++i) {
      const BnComponent& c = report.components[i];
      if (c.codimension < 1) record("codimension", std::to_string(c.codimension), ">= 1");
      std::optional<Int> predicted;
      if (c.type) {
        predicted = 2 * p.length - c.type->m() * (p.n - c.type->m()) * p.h;
      } else if (mukai_pairing(s, v, v) > 0) {
        predicted = 3 * p.length - 3 - p.n * p.n * p.h / 2;
      }
      if (predicted && *predicted != c.dimension) {
        record("dimension_identity", std::to_string(c.dimension), std::to_string(*predicted));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Discrepancy> sweep(const GridSpec& grid, Int threshold, const BnClassifier& classifier) {
  grid.validate();
  std::vector<GridPoint> points;
  for (Int h : grid.h_squared)
    for (Int n = grid.n_min; n <= grid.n_max; ++n)
      for (Int len = grid.length_min; len <= grid.length_max; ++len) points.push_back({h, n, len});
  std::sort(points.begin(), points.end(), [](const GridPoint& a, const GridPoint& b) {
    return std::tie(a.h, a.n, a.length) < std::tie(b.h, b.n, b.length);
  });

  std::vector<std::vector<Discrepancy>> per_point(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const GridPoint& p = points[i];
      try {
        per_point[i] = check_point(p, grid.window_for(p.n), threshold, classifier);
      } catch (const std::exception& e) {
        per_point[i] = {Discrepancy{p.h, p.n, p.length, "exception", e.what(), ""}};
      }
    }
  };
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<Discrepancy> out;
  for (auto& batch : per_point) std::move(batch.begin(), batch.end(), std::back_inserter(out));
  return out;
}

}  // namespace moduli_atlas::oracle
