#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "poetics/report.hpp"

namespace poetics {
namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_boxplot_svg(const std::vector<std::pair<std::string, LengthSummary>>& boxes,
                               const std::string& title) {
  constexpr double kRow = 28, kLeft = 140, kWidth = 520, kTop = 40;
  double hi = 1;
  for (const auto& [_, b] : boxes) {
    hi = std::max(hi, b.whisker_high);
    for (double o : b.outliers) hi = std::max(hi, o);
  }
  hi = std::ceil(hi * 1.05);
  auto x = [&](double v) { return kLeft + kWidth * v / hi; };
  double height = kTop + kRow * static_cast<double>(boxes.size()) + 30;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\" "
      "font-size=\"11\">\n<text x=\"10\" y=\"20\" font-size=\"14\">{}</text>\n",
      kLeft + kWidth + 20, height, escape_xml(title));
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& [label, b] = boxes[i];
    double y = kTop + kRow * static_cast<double>(i);
    double mid = y + kRow / 2;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n", kLeft - 8, mid + 4,
                       escape_xml(label));
    svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#444\"/>\n",
                       x(b.whisker_low), mid, x(b.whisker_high), mid);
    svg += fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"#cfd8e3\" stroke=\"#444\"/>\n",
        x(b.q1), y + 6, std::max(1.0, x(b.q3) - x(b.q1)), kRow - 12);
    svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#000\" "
                       "stroke-width=\"2\"/>\n",
                       x(b.median), y + 6, y + kRow - 6);
    for (double o : b.outliers)
      svg += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"2.5\" fill=\"none\" stroke=\"#a33\"/>\n", x(o), mid);
  }
  double axis_y = kTop + kRow * static_cast<double>(boxes.size()) + 8;
  svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#888\"/>\n", kLeft,
                     axis_y, kLeft + kWidth, axis_y);
  for (int t = 0; t <= 4; ++t) {
    double v = hi * t / 4;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.0f}</text>\n", x(v), axis_y + 14,
                       v);
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_heatmap_svg(const OccupancyGrid& grid, const std::string& title) {
  constexpr double kCell = 6, kTop = 30, kLeft = 10;
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\">\n"
      "<text x=\"10\" y=\"20\" font-size=\"14\">{}</text>\n",
      kLeft * 2 + kCell * static_cast<double>(grid.cols), kTop + 10 + kCell * static_cast<double>(grid.rows),
      escape_xml(title));
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      auto shade = static_cast<int>(std::lround(255.0 * (1.0 - grid.at(r, c))));
      svg += fmt::format("<rect x=\"{:.0f}\" y=\"{:.0f}\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"rgb({},{},{})\"/>\n",
                         kLeft + kCell * static_cast<double>(c), kTop + kCell * static_cast<double>(r), kCell, kCell,
                         shade, shade, shade);
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace poetics
