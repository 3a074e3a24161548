#include "giantatom/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace giantatom {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kLeft = 64;
constexpr int kRight = 20;
constexpr int kTop = 36;
constexpr int kBottom = 48;
constexpr std::size_t kMaxPoints = 2000;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double nice_tick(double span) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0}) {
        if (raw <= mult * mag) return mult * mag;
    }
    return 10.0 * mag;
}

struct Range {
    double lo{0.0};
    double hi{1.0};
    double scale(double v, double px_lo, double px_hi) const {
        return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
    }
};

Range span_of(const std::vector<PlotSeries>& series, bool use_x) {
    Range r{1e300, -1e300};
    for (const auto& s : series) {
        const auto& vals = use_x ? s.x : s.y;
        for (double v : vals) {
            if (!std::isfinite(v)) continue;
            r.lo = std::min(r.lo, v);
            r.hi = std::max(r.hi, v);
        }
    }
    if (r.lo > r.hi) {
        r.lo = 0.0;
        r.hi = 1.0;
    }
    if (r.hi - r.lo < 1e-300) {
        r.lo -= 0.5;
        r.hi += 0.5;
    }
    const double pad = 0.04 * (r.hi - r.lo);
    r.lo -= pad;
    r.hi += pad;
    return r;
}

} // namespace

void write_line_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<PlotSeries>& series) {
    const Range xr = span_of(series, true);
    const Range yr = span_of(series, false);
    const double px0 = kLeft;
    const double px1 = kWidth - kRight;
    const double py0 = kHeight - kBottom; // y grows downward in SVG
    const double py1 = kTop;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"14\">"
       << title << "</text>\n";

    // frame
    os << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << (px1 - px0)
       << "\" height=\"" << (py0 - py1) << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double xt = nice_tick(xr.hi - xr.lo);
    for (double v = std::ceil(xr.lo / xt) * xt; v <= xr.hi + 1e-9 * xt; v += xt) {
        const double px = xr.scale(v, px0, px1);
        os << "<line x1=\"" << num(px) << "\" y1=\"" << py0 << "\" x2=\"" << num(px)
           << "\" y2=\"" << py0 + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(px) << "\" y=\"" << py0 + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(v)
           << "</text>\n";
    }
    const double yt = nice_tick(yr.hi - yr.lo);
    for (double v = std::ceil(yr.lo / yt) * yt; v <= yr.hi + 1e-9 * yt; v += yt) {
        const double py = yr.scale(v, py0, py1);
        os << "<line x1=\"" << px0 - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << px0
           << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px0 - 8 << "\" y=\"" << num(py + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(v)
           << "</text>\n";
    }
    os << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << (py0 + py1) / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
          "transform=\"rotate(-90 16 "
       << (py0 + py1) / 2 << ")\">" << y_label << "</text>\n";

    std::size_t color = 0;
    for (const auto& s : series) {
        const std::size_t n = std::min(s.x.size(), s.y.size());
        if (n == 0) continue;
        const std::size_t stride = std::max<std::size_t>(1, n / kMaxPoints);
        os << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 8]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < n; i += stride) {
            os << num(xr.scale(s.x[i], px0, px1)) << ',' << num(yr.scale(s.y[i], py0, py1))
               << ' ';
        }
        if ((n - 1) % stride != 0) {
            os << num(xr.scale(s.x[n - 1], px0, px1)) << ','
               << num(yr.scale(s.y[n - 1], py0, py1));
        }
        os << "\"/>\n";
        ++color;
    }

    // legend
    double ly = py1 + 14;
    color = 0;
    for (const auto& s : series) {
        if (s.label.empty()) {
            ++color;
            continue;
        }
        os << "<line x1=\"" << px1 - 150 << "\" y1=\"" << ly << "\" x2=\"" << px1 - 120
           << "\" y2=\"" << ly << "\" stroke=\"" << kPalette[color % 8]
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << px1 - 114 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
        ly += 16;
        ++color;
    }
    os << "</svg>\n";
}

} // namespace giantatom
