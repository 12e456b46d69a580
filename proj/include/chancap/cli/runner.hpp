// runner.hpp - executes a run plan and writes its CSV/SVG artifacts.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chancap/cli/config.hpp"
#include "chancap/cli/csv.hpp"
#include "chancap/measures.hpp"

namespace chancap::cli {

struct CurveResult {
    Quantity quantity;
    TimeGrid grid;
    std::vector<std::string> labels;        // one per series
    std::vector<std::vector<Cell>> columns;  // one per series
};

struct MeasureResult {
    Quantity quantity;
    std::string series;
    std::optional<double> sweep_value;
    MeasureReport report;
};

struct RunResult {
    std::vector<CurveResult> curves;
    std::vector<MeasureResult> measures;
};

RunResult execute(const RunPlan& plan);

struct EmitOptions {
    std::filesystem::path directory;
    std::string prefix;
    bool svg = false;
};

// Writes <prefix>_<quantity>.csv per quantity and <prefix>_summary.csv when measures
// were requested. Returns the written paths in emission order.
std::vector<std::filesystem::path> emit(const RunResult& result, const RunPlan& plan, const EmitOptions& options);

// n' = (n - 1) * factor + 1, rounded to the nearest integer.
RunConfig scale_grid(RunConfig config, double factor);

std::string time_axis_label(const Environment& env);

} // namespace chancap::cli
