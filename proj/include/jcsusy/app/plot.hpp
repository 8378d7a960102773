#pragma once

#include <string>
#include <vector>

namespace jcsusy::app {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal SVG line chart: framed axes, min/max tick labels, one polyline per series.
std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<PlotSeries>& series);

void write_svg(const std::string& path, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace jcsusy::app
