#pragma once

// Deterministic output formatting: fixed-precision numbers, {a;b;c} set
// notation, atomic file writes, and a dependency-free SVG line plot.

#include <string>
#include <vector>

namespace rht::cli {

// Fixed 4-decimal formatting used by every CSV number (matches the published
// table precision and keeps output byte-stable).
std::string format_number(double value);

// {12;13;12;13} — semicolons keep the set inside one CSV cell.
std::string format_set(const std::vector<int>& values);

// Write-to-temp then rename, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // sorted by x; gaps allowed
};

// Self-contained SVG line plot, one polyline per series. Infeasible axis
// values are simply absent from a series, which breaks the line there.
std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<PlotSeries>& series);

}  // namespace rht::cli
