#pragma once

#include <span>
#include <string>
#include <vector>

namespace citeswing::chart {

enum class LineStyle { Line, Dashed };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One polyline. Points must be ascending in x, at least two of them.
struct ChartSeries {
    std::string label;
    std::vector<Point> points;
    LineStyle style = LineStyle::Line;
};

struct Axes {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Static SVG line chart: linear axes padded 5%, five ticks per axis, one
/// polyline per series and a legend. Output depends only on the input.
/// Throws EmptyChart for no series or a series with fewer than two points.
[[nodiscard]] std::string render_chart(std::span<const ChartSeries> series, const Axes& axes);

}  // namespace citeswing::chart
