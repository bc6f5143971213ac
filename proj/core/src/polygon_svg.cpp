#include "moduli_atlas/polygon_svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace moduli_atlas {
namespace {

constexpr int kCanvasWidth = 840;
constexpr int kCanvasHeight = 520;
constexpr int kPlotSize = 480;
constexpr std::size_t kLegendTriples = 4;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string points_attr(const std::vector<PolygonVertex>& vs, Int x_scale) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << (i ? " " : "") << ck::mul(vs[i].rank, x_scale) << ',' << vs[i].degree;
  }
  return os.str();
}

}  // namespace

std::string render_polygon_svg(const Surface& s, const MukaiVector& v, Int m_max,
                               const std::vector<TfComponent>& components) {
  bool semistable = false;
  std::map<Int, std::vector<const HNType*>> by_m;
  for (const TfComponent& c : components) {
    if (c.absorbed) continue;
    if (c.is_semistable()) semistable = true;
    else by_m[c.hn_type()->m()].push_back(c.hn_type());
  }

  const Int h = s.h_squared();
  Int y_lo = std::min<Int>(0, ck::mul(v.deg, h));
  Int y_hi = std::max<Int>(0, ck::mul(v.deg, h));
  for (const auto& [m, _] : by_m) {
    y_lo = std::min(y_lo, ck::mul(m, h));
    y_hi = std::max(y_hi, ck::mul(m, h));
  }
  const Int span = std::max<Int>(ck::sub(y_hi, y_lo), 2);
  const Int x_scale = span / 2;
  const Int pad = std::max<Int>(span / 20, 1);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasWidth << "\" height=\""
     << kCanvasHeight << "\" viewBox=\"0 0 " << kCanvasWidth << ' ' << kCanvasHeight << "\">\n"
     << "  <title>HN polygons, H^2=" << h << ", v=" << v << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight
     << "\" fill=\"white\"/>\n";

  // Model space: x = rank * x_scale, y = deg_H; flipped so degree grows upward.
  os << "  <svg x=\"20\" y=\"20\" width=\"" << kPlotSize << "\" height=\"" << kPlotSize
     << "\" viewBox=\"" << -pad << ' ' << -(y_hi + pad) << ' ' << 2 * x_scale + 2 * pad << ' '
     << span + 2 * pad << "\" preserveAspectRatio=\"none\">\n"
     << "    <g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"2\">\n";
  if (semistable) {
    os << "      <polyline class=\"semistable\" stroke=\"black\" stroke-dasharray=\"6 4\" "
          "vector-effect=\"non-scaling-stroke\" points=\""
       << points_attr(hn_polygon(SemistableStratum{s, v}), x_scale) << "\"/>\n";
  }
  std::size_t colour = 0;
  for (const auto& [m, types] : by_m) {
    os << "      <polyline class=\"hn\" data-m=\"" << m << "\" stroke=\""
       << kPalette[colour++ % std::size(kPalette)] << "\" vector-effect=\"non-scaling-stroke\" points=\""
       << points_attr(hn_polygon(*types.front()), x_scale) << "\"/>\n";
  }
  os << "    </g>\n  </svg>\n";

  // Legend in canvas pixels.
  int y = 40;
  os << "  <g font-family=\"monospace\" font-size=\"13\">\n"
     << "    <text x=\"520\" y=\"" << y << "\">H^2=" << h << "  v=" << v << "</text>\n";
  y += 20;
  os << "    <text x=\"520\" y=\"" << y << "\">window m &lt;= " << m_max << "</text>\n";
  y += 28;
  if (!semistable && by_m.empty()) {
    os << "    <text x=\"520\" y=\"" << y << "\">no components in window</text>\n";
  }
  if (semistable) {
    os << "    <text x=\"520\" y=\"" << y << "\">- - semistable segment</text>\n";
    y += 20;
  }
  colour = 0;
  for (const auto& [m, types] : by_m) {
    os << "    <text x=\"520\" y=\"" << y << "\" fill=\"" << kPalette[colour++ % std::size(kPalette)]
       << "\">m=" << m << ":";
    for (std::size_t i = 0; i < types.size() && i < kLegendTriples; ++i) {
      os << " (" << types[i]->m() << ',' << types[i]->ell1() << ',' << types[i]->ell2() << ')';
    }
    if (types.size() > kLegendTriples) os << " +" << types.size() - kLegendTriples << " more";
    os << "</text>\n";
    y += 20;
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace moduli_atlas
