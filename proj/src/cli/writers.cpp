#include "lollipop/writers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace lollipop::io {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr double kPlotWidth = kWidth - kMarginLeft - kMarginRight;
constexpr double kPlotHeight = kHeight - kMarginTop - kMarginBottom;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* source_name(Source s) { return s == Source::quantum ? "quantum" : "classical"; }

void svg_open(std::ostream& os, const std::string& title, const std::string& x_label, double y_max) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  os << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << title << "</text>\n";
  const double x0 = kMarginLeft, y0 = kMarginTop + kPlotHeight;
  os << "<line x1=\"" << coord(x0) << "\" y1=\"" << coord(y0) << "\" x2=\"" << coord(x0 + kPlotWidth)
     << "\" y2=\"" << coord(y0) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << coord(x0) << "\" y1=\"" << coord(kMarginTop) << "\" x2=\"" << coord(x0)
     << "\" y2=\"" << coord(y0) << "\" stroke=\"black\"/>\n";
  os << "<text x=\"400\" y=\"490\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << x_label << "</text>\n";
  os << "<text x=\"" << coord(x0 - 6) << "\" y=\"" << coord(kMarginTop + 4)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << format_number(y_max)
     << "</text>\n";
  os << "<text x=\"" << coord(x0 - 6) << "\" y=\"" << coord(y0)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">0</text>\n";
}

std::string title_for(const PositionDistribution& dist, const char* region) {
  return std::string(source_name(dist.source)) + " walk, " + region + ", t = " +
         std::to_string(dist.time);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::int64_t halfline_extent(const PositionDistribution& dist) {
  for (auto i = static_cast<std::int64_t>(dist.halfline_probs.size()); i >= 1; --i) {
    if (dist.halfline_probs[static_cast<std::size_t>(i - 1)] > kHalfLineCutoff) return i;
  }
  return 0;
}

void write_distribution_csv(std::ostream& os, const PositionDistribution& dist) {
  os << "region,site,probability\n";
  for (std::size_t k = 0; k < dist.cycle_probs.size(); ++k) {
    os << "cycle," << k << ',' << format_number(dist.cycle_probs[k]) << '\n';
  }
  const std::int64_t last = halfline_extent(dist);
  for (std::int64_t x = 1; x <= last; ++x) {
    os << "halfline," << x << ',' << format_number(dist.halfline_probs[static_cast<std::size_t>(x - 1)])
       << '\n';
  }
}

void write_summary_csv(std::ostream& os, std::span<const SummaryRecord> records) {
  os << "time,cycle_total,halfline_total,spike_site,spike_height,halfline_mean,halfline_std\n";
  for (const SummaryRecord& r : records) {
    os << r.time << ',' << format_number(r.cycle_total) << ',' << format_number(r.halfline_total) << ','
       << r.spike_site << ',' << format_number(r.spike_height) << ',' << format_number(r.halfline_mean)
       << ',' << format_number(r.halfline_std) << '\n';
  }
}

void write_distribution_json(std::ostream& os, const PositionDistribution& dist) {
  const std::int64_t last = halfline_extent(dist);
  ordered_json j;
  j["time"] = dist.time;
  j["source"] = source_name(dist.source);
  j["cycle"] = dist.cycle_probs;
  j["halfline"] = std::vector<double>(dist.halfline_probs.begin(), dist.halfline_probs.begin() + last);
  os << j.dump(1) << '\n';
}

void write_summary_json(std::ostream& os, std::span<const SummaryRecord> records) {
  ordered_json arr = ordered_json::array();
  for (const SummaryRecord& r : records) {
    ordered_json j;
    j["time"] = r.time;
    j["cycle_total"] = r.cycle_total;
    j["halfline_total"] = r.halfline_total;
    j["spike_site"] = r.spike_site;
    j["spike_height"] = r.spike_height;
    // NaN moments serialize as null.
    j["halfline_mean"] = r.halfline_mean;
    j["halfline_std"] = r.halfline_std;
    arr.push_back(std::move(j));
  }
  os << arr.dump(1) << '\n';
}

void write_cycle_svg(std::ostream& os, const PositionDistribution& dist) {
  const auto n = dist.cycle_probs.size();
  double y_max = 0.0;
  for (double p : dist.cycle_probs) y_max = std::max(y_max, p);
  if (y_max <= 0.0) y_max = 1.0;
  svg_open(os, title_for(dist, "cycle"), "cycle node", y_max);

  const double slot = kPlotWidth / static_cast<double>(n);
  const double y0 = kMarginTop + kPlotHeight;
  for (std::size_t k = 0; k < n; ++k) {
    const double h = kPlotHeight * dist.cycle_probs[k] / y_max;
    const double x = kMarginLeft + slot * static_cast<double>(k) + 0.1 * slot;
    os << "<rect x=\"" << coord(x) << "\" y=\"" << coord(y0 - h) << "\" width=\"" << coord(0.8 * slot)
       << "\" height=\"" << coord(h) << "\" fill=\"steelblue\"/>\n";
    os << "<text x=\"" << coord(x + 0.4 * slot) << "\" y=\"" << coord(y0 + 16)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << k << "</text>\n";
  }
  os << "</svg>\n";
}

void write_halfline_svg(std::ostream& os, const PositionDistribution& dist) {
  const std::int64_t last = halfline_extent(dist);
  // One point per pixel column, keeping the column maximum so narrow peaks survive.
  const std::int64_t columns = std::min<std::int64_t>(last, static_cast<std::int64_t>(kPlotWidth));
  std::vector<double> binned(static_cast<std::size_t>(columns), 0.0);
  for (std::int64_t x = 1; x <= last; ++x) {
    const std::int64_t c = (x - 1) * columns / last;
    auto& slot = binned[static_cast<std::size_t>(c)];
    slot = std::max(slot, dist.halfline_probs[static_cast<std::size_t>(x - 1)]);
  }
  double y_max = 0.0;
  for (double p : binned) y_max = std::max(y_max, p);
  if (y_max <= 0.0) y_max = 1.0;
  svg_open(os, title_for(dist, "half-line"), "half-line site (1 to " + std::to_string(last) + ")",
           y_max);

  if (columns > 0) {
    const double y0 = kMarginTop + kPlotHeight;
    const double dx = columns > 1 ? kPlotWidth / static_cast<double>(columns - 1) : 0.0;
    os << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1\" points=\"";
    for (std::int64_t c = 0; c < columns; ++c) {
      if (c > 0) os << ' ';
      os << coord(kMarginLeft + dx * static_cast<double>(c)) << ','
         << coord(y0 - kPlotHeight * binned[static_cast<std::size_t>(c)] / y_max);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace lollipop::io
