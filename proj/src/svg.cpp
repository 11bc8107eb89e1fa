#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "stablestrain/sweep.hpp"

namespace stablestrain {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

void write_svg(const SweepTable& table, const std::string& title, std::ostream& os) {
  double xlo = std::numeric_limits<double>::max(), xhi = 0;
  double ylo = std::numeric_limits<double>::max(), yhi = 0;
  for (const auto& row : table.rows) {
    xlo = std::min(xlo, row[0]);
    xhi = std::max(xhi, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c] > 0) {
        ylo = std::min(ylo, row[c]);
        yhi = std::max(yhi, row[c]);
      }
  }
  if (yhi == 0) ylo = 1e-17, yhi = 1;
  const double lx0 = std::floor(std::log10(xlo)), lx1 = std::ceil(std::log10(xhi));
  const double ly0 = std::floor(std::log10(ylo)), ly1 = std::max(std::ceil(std::log10(yhi)), ly0 + 1);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (std::log10(x) - lx0) / (lx1 - lx0) * pw; };
  auto py = [&](double y) { return kTop + (ly1 - std::log10(y)) / (ly1 - ly0) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
     << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double d = lx0; d <= lx1; d += 1) {
    const double x = kLeft + (d - lx0) / (lx1 - lx0) * pw;
    os << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\"" << kTop + ph
       << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  const double ystep = std::max(1.0, std::ceil((ly1 - ly0) / 10));
  for (double d = ly0; d <= ly1; d += ystep) {
    const double y = kTop + (ly1 - d) / (ly1 - ly0) * ph;
    os << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + pw << "\" y2=\"" << y
       << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 18 << "\" text-anchor=\"middle\">eps</text>\n";
  os << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << kTop + ph / 2 << ")\">relative error</text>\n";

  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    const char* color = kColors[(c - 1) % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : table.rows)
      if (row[c] > 0) os << px(row[0]) << "," << py(row[c]) << " ";
    os << "\"/>\n";
    const double ly = kTop + 20 * static_cast<double>(c);
    os << "<line x1=\"" << kLeft + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 30 << "\" y2=\"" << ly
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kLeft + pw + 35 << "\" y=\"" << ly + 4 << "\">" << table.columns[c] << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace stablestrain
