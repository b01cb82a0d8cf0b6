// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinsim/sweep.hpp"

namespace spinsim {

// Lightweight SVG rendering of a sweep: analytic references as polylines,
// estimates as dot markers, error bars where stderr > 0. The model keeps
// data-space values so tests can compare dots against curves before any
// pixel mapping.

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;  // half-length of the error bar; 0 = none
};

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<PlotPoint> curve;   // analytic polyline
    std::vector<PlotPoint> points;  // estimates
};

struct PlotModel {
    std::string x_label;
    std::string title;
    std::vector<PlotSeries> series;
};

/// Builds one series per estimator that has an analytic reference.
/// Throws std::invalid_argument on empty rows.
PlotModel build_plot_model(const std::vector<SweepRow>& rows, const SweepConfig& cfg);

std::string render_svg(const PlotModel& model);

/// build_plot_model + render_svg + write. No file is created on error.
void render_plot(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                 const std::string& path);

}  // namespace spinsim
