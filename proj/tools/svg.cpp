#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rnls_cli {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 160, kTop = 40, kBottom = 60;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (hi == lo) lo -= 0.5, hi += 0.5;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

class Frame {
 public:
  Frame(const Axes& axes, Range xr, Range yr) : axes_(axes), xr_(xr), yr_(yr) {}

  double px(double x) const { return kLeft + (x - xr_.lo) / (xr_.hi - xr_.lo) * plot_w(); }
  double py(double y) const {
    return kTop + plot_h() - (transform(y) - yr_.lo) / (yr_.hi - yr_.lo) * plot_h();
  }
  double transform(double y) const { return axes_.log_y ? std::log10(y) : y; }
  static double plot_w() { return kWidth - kLeft - kRight; }
  static double plot_h() { return kHeight - kTop - kBottom; }

  void open(std::ostringstream& out) const {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w()
        << "\" height=\"" << plot_h() << "\" fill=\"none\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft + plot_w() / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-size=\"14\">" << escape(axes_.title) << "</text>\n"
        << "<text x=\"" << kLeft + plot_w() / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\">" << escape(axes_.xlabel) << "</text>\n"
        << "<text x=\"18\" y=\"" << kTop + plot_h() / 2 << "\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 18 " << kTop + plot_h() / 2 << ")\">" << escape(axes_.ylabel)
        << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
      const double fx = xr_.lo + (xr_.hi - xr_.lo) * i / 4.0;
      const double fy = yr_.lo + (yr_.hi - yr_.lo) * i / 4.0;
      const double x = kLeft + plot_w() * i / 4.0;
      const double y = kTop + plot_h() - plot_h() * i / 4.0;
      out << "<text x=\"" << x << "\" y=\"" << kTop + plot_h() + 18
          << "\" text-anchor=\"middle\">" << num(fx) << "</text>\n"
          << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
          << (axes_.log_y ? "1e" + num(fy) : num(fy)) << "</text>\n";
    }
  }

  void legend(std::ostringstream& out, const std::vector<Series>& series) const {
    for (std::size_t i = 0; i < series.size(); ++i) {
      const double y = kTop + 14 + 18.0 * static_cast<double>(i);
      const double x = kLeft + plot_w() + 12;
      out << "<rect x=\"" << x << "\" y=\"" << y - 8 << "\" width=\"14\" height=\"8\" fill=\""
          << kPalette[i % 6] << "\"/>\n"
          << "<text x=\"" << x + 20 << "\" y=\"" << y << "\">" << escape(series[i].label)
          << "</text>\n";
    }
  }

 private:
  Axes axes_;
  Range xr_, yr_;
};

std::pair<Range, Range> ranges(const Axes& axes, const std::vector<Series>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw std::runtime_error("plot: series '" + s.label + "' x/y mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (axes.log_y && !(s.y[i] > 0.0)) continue;
      xr.include(s.x[i]);
      yr.include(axes.log_y ? std::log10(s.y[i]) : s.y[i]);
    }
  }
  xr.finish();
  yr.finish();
  return {xr, yr};
}

void save(const std::string& path, const std::ostringstream& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("plot: cannot open " + path + " for writing");
  out << body.str() << "</svg>\n";
  if (!out) throw std::runtime_error("plot: write to " + path + " failed");
}

}  // namespace

void write_line_plot(const std::string& path, const Axes& axes, const std::vector<Series>& series) {
  const auto [xr, yr] = ranges(axes, series);
  const Frame frame(axes, xr, yr);
  std::ostringstream out;
  frame.open(out);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kPalette[k % 6]
        << "\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i]) || (axes.log_y && !(s.y[i] > 0.0))) continue;
      out << num(frame.px(s.x[i])) << ',' << num(frame.py(s.y[i])) << ' ';
    }
    out << "\"/>\n";
  }
  frame.legend(out, series);
  save(path, out);
}

void write_scatter_plot(const std::string& path, const Axes& axes,
                        const std::vector<Series>& series) {
  const auto [xr, yr] = ranges(axes, series);
  const Frame frame(axes, xr, yr);
  std::ostringstream out;
  frame.open(out);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out << "<g fill=\"" << kPalette[k % 6] << "\">\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      out << "<circle r=\"2\" cx=\"" << num(frame.px(s.x[i])) << "\" cy=\""
          << num(frame.py(s.y[i])) << "\"/>\n";
    }
    out << "</g>\n";
  }
  frame.legend(out, series);
  save(path, out);
}

void write_heatmap(const std::string& path, const Axes& axes, const std::vector<double>& x,
                   const std::vector<double>& y, const std::vector<std::vector<double>>& values) {
  if (values.size() != y.size()) throw std::runtime_error("heatmap: row count mismatch");
  Range xr, yr, vr;
  for (double v : x) xr.include(v);
  for (double v : y) yr.include(v);
  for (const auto& row : values) {
    if (row.size() != x.size()) throw std::runtime_error("heatmap: column count mismatch");
    for (double v : row) vr.include(v);
  }
  xr.finish();
  yr.finish();
  vr.finish();
  const double span = std::max(std::abs(vr.lo), std::abs(vr.hi));
  const Frame frame(axes, xr, yr);
  std::ostringstream out;
  frame.open(out);
  // Columns are thinned so the file stays small on fine grids.
  const std::size_t cstep = std::max<std::size_t>(1, x.size() / 200);
  const std::size_t rstep = std::max<std::size_t>(1, y.size() / 200);
  const double cw = Frame::plot_w() / std::ceil(static_cast<double>(x.size()) / cstep);
  const double rh = Frame::plot_h() / std::ceil(static_cast<double>(y.size()) / rstep);
  for (std::size_t r = 0; r < y.size(); r += rstep) {
    for (std::size_t c = 0; c < x.size(); c += cstep) {
      // Diverging blue-white-red scale symmetric about zero.
      const double s = span > 0 ? std::clamp(values[r][c] / span, -1.0, 1.0) : 0.0;
      const int red = s > 0 ? 255 : static_cast<int>(255 * (1 + s));
      const int blue = s < 0 ? 255 : static_cast<int>(255 * (1 - s));
      const int green = static_cast<int>(255 * (1 - std::abs(s)));
      out << "<rect x=\"" << num(frame.px(x[c]) - cw / 2) << "\" y=\"" << num(frame.py(y[r]) - rh / 2)
          << "\" width=\"" << num(cw) << "\" height=\"" << num(rh) << "\" fill=\"rgb(" << red << ','
          << green << ',' << blue << ")\"/>\n";
    }
  }
  out << "<text x=\"" << kLeft + Frame::plot_w() + 12 << "\" y=\"" << kTop + 14
      << "\">|max| = " << num(span) << "</text>\n";
  save(path, out);
}

}  // namespace rnls_cli
