#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "liouville/summatory.hpp"

namespace liouville {

struct WaveSvgOptions {
  int width = 1000;
  int band_height = 28;
  int margin_left = 90;   // room for the m:p:u labels
  int margin_right = 20;
  int top_height = 90;    // band for the L(N) trace
};

namespace detail {

inline std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace detail

/// Renders tower waves as an SVG step plot: one horizontal band per trace in
/// the order given (ascending base by convention), each a rectangular wave
/// stepping between 0 and lambda(base) at its member integers, plus the
/// cumulative L(n) trace across the top. `l_trace[i]` must hold L(i + 1).
inline void write_wave_svg(std::ostream& os, u64 max_n, const std::vector<WaveTrace>& traces,
                           const std::vector<i64>& l_trace, const WaveSvgOptions& opt = {}) {
  if (max_n < 1) throw std::invalid_argument("write_wave_svg: max_n must be >= 1");
  if (l_trace.size() < max_n)
    throw std::invalid_argument("write_wave_svg: l_trace must cover 1..max_n");
  const double plot_w = opt.width - opt.margin_left - opt.margin_right;
  const auto x_of = [&](double n) {
    if (max_n == 1) return static_cast<double>(opt.margin_left);
    return opt.margin_left + (n - 1.0) * plot_w / (static_cast<double>(max_n) - 1.0);
  };
  const int total_h = opt.top_height + static_cast<int>(traces.size()) * opt.band_height + 30;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
     << total_h << "\" viewBox=\"0 0 " << opt.width << " " << total_h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // L(n) trace, autoscaled to its extrema.
  i64 lmin = 0, lmax = 0;
  for (u64 i = 0; i < max_n; ++i) {
    lmin = std::min(lmin, l_trace[i]);
    lmax = std::max(lmax, l_trace[i]);
  }
  const double lspan = static_cast<double>(lmax - lmin == 0 ? 1 : lmax - lmin);
  const double ltop = 12.0, lbot = opt.top_height - 18.0;
  const auto y_of_l = [&](i64 l) {
    return lbot - (static_cast<double>(l - lmin) / lspan) * (lbot - ltop);
  };
  os << "<text x=\"4\" y=\"" << detail::fmt1((ltop + lbot) / 2) << "\" font-size=\"11\">L(N)</text>\n";
  os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" d=\"";
  for (u64 n = 1; n <= max_n; ++n) {
    const double x = x_of(static_cast<double>(n));
    const double y = y_of_l(l_trace[n - 1]);
    if (n == 1)
      os << "M" << detail::fmt1(x) << " " << detail::fmt1(y);
    else
      os << " H" << detail::fmt1(x) << " V" << detail::fmt1(y);
  }
  os << "\"/>\n";
  if (lmin <= 0 && lmax >= 0)
    os << "<line x1=\"" << opt.margin_left << "\" y1=\"" << detail::fmt1(y_of_l(0)) << "\" x2=\""
       << detail::fmt1(x_of(static_cast<double>(max_n))) << "\" y2=\"" << detail::fmt1(y_of_l(0))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";

  // One band per tower wave.
  int band = 0;
  for (const WaveTrace& trace : traces) {
    const double y0 = opt.top_height + band * opt.band_height;  // band top
    const double mid = y0 + opt.band_height / 2.0;
    const double amp = opt.band_height / 2.0 - 3.0;
    const auto y_of = [&](int level) { return mid - level * amp; };
    os << "<text x=\"4\" y=\"" << detail::fmt1(mid + 4) << "\" font-size=\"11\">"
       << format_label(trace.label) << "</text>\n";
    os << "<line x1=\"" << opt.margin_left << "\" y1=\"" << detail::fmt1(mid) << "\" x2=\""
       << detail::fmt1(x_of(static_cast<double>(max_n))) << "\" y2=\"" << detail::fmt1(mid)
       << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    if (trace.steps.empty()) {
      ++band;
      continue;
    }
    os << "<path fill=\"none\" stroke=\"#1f5fad\" stroke-width=\"1.2\" d=\"M"
       << detail::fmt1(x_of(1.0)) << " " << detail::fmt1(y_of(0));
    for (const auto& [n, cumulative] : trace.steps)
      os << " H" << detail::fmt1(x_of(static_cast<double>(n))) << " V"
         << detail::fmt1(y_of(cumulative));
    os << " H" << detail::fmt1(x_of(static_cast<double>(max_n))) << "\"/>\n";
    ++band;
  }
  os << "</svg>\n";
}

}  // namespace liouville
