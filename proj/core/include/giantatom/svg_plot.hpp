// svg_plot.hpp — minimal self-contained SVG line plots (regression artifacts)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace giantatom {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Axes, ticks, a legend and one polyline per series. Long series are thinned
// to at most ~2000 points.
void write_line_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<PlotSeries>& series);

} // namespace giantatom
