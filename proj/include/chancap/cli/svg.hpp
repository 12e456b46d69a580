// svg.hpp - minimal line charts: one polyline per series, axis ticks, legend.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace chancap::cli {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<std::optional<double>> y;  // gaps break the polyline
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

// "Nice" tick positions (1, 2, 5 x 10^k steps) covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 5);

std::string render_svg(const Plot& plot, int width = 640, int height = 420);
void write_svg(const std::filesystem::path& path, const Plot& plot);

} // namespace chancap::cli
