#include "citeswing/chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "citeswing/error.hpp"

namespace citeswing::chart {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;  // room for the legend
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v, const char* fmt = "%.2f") {
    if (v == 0.0) v = 0.0;  // no "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    std::string s(buf);
    if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Span {
    double lo;
    double hi;
};

Span padded(double lo, double hi) {
    double pad = 0.05 * (hi - lo);
    if (pad == 0.0) pad = lo != 0.0 ? 0.05 * std::abs(lo) : 1.0;
    return {lo - pad, hi + pad};
}

}  // namespace

std::string render_chart(std::span<const ChartSeries> series, const Axes& axes) {
    if (series.empty()) throw Error(ErrorCode::EmptyChart, "no series to plot");

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series) {
        if (s.points.size() < 2) {
            throw Error(ErrorCode::EmptyChart, "series '" + s.label + "' has fewer than 2 points");
        }
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const auto& p = s.points[i];
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw Error(ErrorCode::InvalidArgument, "series '" + s.label + "' has a non-finite point");
            }
            if (i > 0 && p.x < s.points[i - 1].x) {
                throw Error(ErrorCode::InvalidArgument, "series '" + s.label + "' is not sorted by x");
            }
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const Span xs = padded(xmin, xmax);
    const Span ys = padded(ymin, ymax);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xs.lo) / (xs.hi - xs.lo) * plot_w; };
    auto py = [&](double y) { return kTop + (ys.hi - y) / (ys.hi - ys.lo) * plot_h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth, "%.0f") +
           "\" height=\"" + num(kHeight, "%.0f") + "\" viewBox=\"0 0 " + num(kWidth, "%.0f") + " " +
           num(kHeight, "%.0f") + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth, "%.0f") + "\" height=\"" +
           num(kHeight, "%.0f") + "\" fill=\"white\"/>\n";
    if (!axes.title.empty()) {
        svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
               escape(axes.title) + "</text>\n";
    }

    // axes frame
    svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) +
           "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
           num(kTop + plot_h) + "\"/>\n";
    svg += "</g>\n";

    // ticks
    svg += "<g font-size=\"11\">\n";
    for (int i = 0; i < kTicks; ++i) {
        const double t = static_cast<double>(i) / (kTicks - 1);
        const double xv = xs.lo + t * (xs.hi - xs.lo);
        const double yv = ys.lo + t * (ys.hi - ys.lo);
        const double tx = px(xv);
        const double ty = py(yv);
        svg += "<line x1=\"" + num(tx) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(tx) + "\" y2=\"" +
               num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(tx) + "\" y=\"" + num(kTop + plot_h + 18) + "\" text-anchor=\"middle\">" +
               num(xv, "%.4g") + "</text>\n";
        svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(ty) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
               num(ty) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(ty + 4) + "\" text-anchor=\"end\">" +
               num(yv, "%.4g") + "</text>\n";
    }
    svg += "</g>\n";
    if (!axes.x_label.empty()) {
        svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 15) +
               "\" text-anchor=\"middle\">" + escape(axes.x_label) + "</text>\n";
    }
    if (!axes.y_label.empty()) {
        const std::string cx = num(18.0);
        const std::string cy = num(kTop + plot_h / 2);
        svg += "<text x=\"" + cx + "\" y=\"" + cy + "\" text-anchor=\"middle\" transform=\"rotate(-90 " + cx +
               " " + cy + ")\">" + escape(axes.y_label) + "</text>\n";
    }

    // data
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        std::string pts;
        for (const auto& p : s.points) {
            if (!pts.empty()) pts += ' ';
            pts += num(px(p.x)) + "," + num(py(p.y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[i % kPalette.size()]) +
               "\" stroke-width=\"2\"";
        if (s.style == LineStyle::Dashed) svg += " stroke-dasharray=\"6 4\"";
        svg += " points=\"" + pts + "\"/>\n";
    }

    // legend
    svg += "<g class=\"legend\">\n";
    const double lx = kLeft + plot_w + 20;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 28) + "\" y2=\"" + num(ly) +
               "\" stroke=\"" + kPalette[i % kPalette.size()] + "\" stroke-width=\"2\"";
        if (series[i].style == LineStyle::Dashed) svg += " stroke-dasharray=\"6 4\"";
        svg += "/>\n";
        svg += "<text x=\"" + num(lx + 34) + "\" y=\"" + num(ly + 4) + "\">" + escape(series[i].label) +
               "</text>\n";
    }
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace citeswing::chart
