#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rht::cli {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

std::string format_set(const std::vector<int>& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(values[i]);
    }
    out += '}';
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to '" + temp + "'");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for '" + temp + "'");
    }
    if (std::rename(temp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename '" + temp + "' to '" + path + "'");
    }
}

namespace {

std::string format_tick(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value);
    return buffer;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<PlotSeries>& series) {
    const double width = 800, height = 500;
    const double left = 70, right = 30, top = 40, bottom = 55;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (!(x_min <= x_max)) {  // no data at all
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    double y_pad = (y_max - y_min) * 0.05;
    if (y_pad == 0.0) y_pad = std::max(1.0, std::abs(y_max)) * 0.05;
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };
    auto coord = [](double v) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.2f", v);
        return std::string(buffer);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
           "font-family=\"sans-serif\">"
        << title << "</text>\n";

    // Axes and ticks.
    svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        double fx = x_min + (x_max - x_min) * i / ticks;
        double px = sx(fx);
        svg << "<line x1=\"" << coord(px) << "\" y1=\"" << top + plot_h << "\" x2=\"" << coord(px)
            << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(px) << "\" y=\"" << top + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
            << format_tick(fx) << "</text>\n";
        double fy = y_min + (y_max - y_min) * i / ticks;
        double py = sy(fy);
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << coord(py) << "\" x2=\"" << left
            << "\" y2=\"" << coord(py) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << coord(py + 4)
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
            << format_tick(fy) << "</text>\n";
        if (i > 0) {
            svg << "<line x1=\"" << left << "\" y1=\"" << coord(py) << "\" x2=\"" << left + plot_w
                << "\" y2=\"" << coord(py) << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        }
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 18 "
        << top + plot_h / 2 << ")\">" << y_label << "</text>\n";

    // Series: polyline segments (split on gaps implied by missing x values are
    // the caller's concern — each series here is drawn as one run of points).
    for (size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const auto& points = series[s].points;
        if (!points.empty()) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (size_t i = 0; i < points.size(); ++i) {
                if (i > 0) svg << ' ';
                svg << coord(sx(points[i].first)) << ',' << coord(sy(points[i].second));
            }
            svg << "\"/>\n";
            for (const auto& [x, y] : points) {
                svg << "<circle cx=\"" << coord(sx(x)) << "\" cy=\"" << coord(sy(y))
                    << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
            }
        }
        double ly = top + 16 + 18 * static_cast<double>(s);
        svg << "<line x1=\"" << left + plot_w - 130 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << left + plot_w - 105 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << left + plot_w - 100 << "\" y=\"" << ly
            << "\" font-size=\"12\" font-family=\"sans-serif\">" << series[s].label
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rht::cli
