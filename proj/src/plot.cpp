// SPDX-License-Identifier: Apache-2.0
#include "spinsim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinsim {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

PlotSeries make_series(const std::string& label, const std::string& color) {
    PlotSeries s;
    s.label = label;
    s.color = color;
    return s;
}

}  // namespace

PlotModel build_plot_model(const std::vector<SweepRow>& rows, const SweepConfig& cfg) {
    if (rows.empty()) throw std::invalid_argument("render_plot: no rows to plot");
    PlotModel model;
    const bool magfield = cfg.experiment == Experiment::magfield;
    model.x_label = magfield ? "omega*t [rad]" : "J*t [rad]";
    model.title = magfield ? "spin-1 in a transverse field" : "spin-1 x spin-1/2 Ising evolution";

    struct Extractor {
        std::string label;
        double (*analytic)(const SweepRow&);
        const Estimate& (*estimate)(const SweepRow&);
    };
    std::vector<Extractor> extractors;
    if (magfield) {
        extractors = {
            {"p_plus1", [](const SweepRow& r) { return r.analytic_prob[0]; },
             [](const SweepRow& r) -> const Estimate& { return r.prob_m[0]; }},
            {"p_0", [](const SweepRow& r) { return r.analytic_prob[1]; },
             [](const SweepRow& r) -> const Estimate& { return r.prob_m[1]; }},
            {"p_minus1", [](const SweepRow& r) { return r.analytic_prob[2]; },
             [](const SweepRow& r) -> const Estimate& { return r.prob_m[2]; }},
            {"mean_x", [](const SweepRow& r) { return r.analytic_mean[0]; },
             [](const SweepRow& r) -> const Estimate& { return r.mean[0]; }},
            {"mean_y", [](const SweepRow& r) { return r.analytic_mean[1]; },
             [](const SweepRow& r) -> const Estimate& { return r.mean[1]; }},
            {"mean_z", [](const SweepRow& r) { return r.analytic_mean[2]; },
             [](const SweepRow& r) -> const Estimate& { return r.mean[2]; }},
            {"mean_magnitude", [](const SweepRow& r) { return r.analytic_magnitude; },
             [](const SweepRow& r) -> const Estimate& { return r.mean_magnitude; }},
        };
    } else {
        extractors = {
            {"mean_magnitude", [](const SweepRow& r) { return r.analytic_magnitude; },
             [](const SweepRow& r) -> const Estimate& { return r.mean_magnitude; }},
            {"corr_xx", [](const SweepRow& r) { return r.analytic_corr; },
             [](const SweepRow& r) -> const Estimate& { return r.corr_xx; }},
        };
    }

    for (std::size_t i = 0; i < extractors.size(); ++i) {
        PlotSeries s = make_series(extractors[i].label, kPalette[i % std::size(kPalette)]);
        for (const SweepRow& r : rows) {
            s.curve.push_back({r.param, extractors[i].analytic(r), 0.0});
            const Estimate& e = extractors[i].estimate(r);
            s.points.push_back({r.param, e.value, e.stderr_});
        }
        model.series.push_back(std::move(s));
    }
    return model;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const PlotModel& model) {
    // Fixed canvas with margins for axes and a right-hand legend.
    const double width = 760, height = 480;
    const double ml = 64, mr = 160, mt = 40, mb = 56;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const auto& s : model.series) {
        for (const auto& p : s.curve) {
            if (first) {
                x_min = x_max = p.x;
                y_min = y_max = p.y;
                first = false;
            }
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
        for (const auto& p : s.points) {
            y_min = std::min(y_min, p.y - p.err);
            y_max = std::max(y_max, p.y + p.err);
        }
    }
    if (x_max - x_min < 1e-12) x_max = x_min + 1.0;
    if (y_max - y_min < 1e-12) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return mt + (y_max - y) / (y_max - y_min) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">"
        << model.title << "</text>\n";

    // Axes with 5 ticks per side.
    out << "<g stroke=\"#333\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\"/>\n";
    out << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_min + (y_max - y_min) * i / 5.0;
        out << "<line x1=\"" << fmt(sx(xv)) << "\" y1=\"" << mt + ph << "\" x2=\"" << fmt(sx(xv))
            << "\" y2=\"" << mt + ph + 4 << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        out << "<line x1=\"" << ml - 4 << "\" y1=\"" << fmt(sy(yv)) << "\" x2=\"" << ml
            << "\" y2=\"" << fmt(sy(yv)) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(sy(yv) + 4)
            << "\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">" << model.x_label << "</text>\n";
    out << "</g>\n";

    for (const auto& s : model.series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : s.curve) out << fmt(sx(p.x)) << "," << fmt(sy(p.y)) << " ";
        out << "\"/>\n";
        for (const auto& p : s.points) {
            if (p.err > 0.0) {
                out << "<line class=\"errbar\" x1=\"" << fmt(sx(p.x)) << "\" y1=\""
                    << fmt(sy(p.y - p.err)) << "\" x2=\"" << fmt(sx(p.x)) << "\" y2=\""
                    << fmt(sy(p.y + p.err)) << "\" stroke=\"" << s.color
                    << "\" stroke-width=\"1\"/>\n";
            }
            out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
                << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
        }
    }

    double ly = mt + 10;
    for (const auto& s : model.series) {
        out << "<line x1=\"" << ml + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw + 34
            << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
        ly += 18;
    }
    out << "</svg>\n";
    return out.str();
}

void render_plot(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                 const std::string& path) {
    const PlotModel model = build_plot_model(rows, cfg);  // throws before any file I/O
    const std::string svg = render_svg(model);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open SVG output file: " + path);
    out << svg;
    if (!out) throw std::runtime_error("failed writing SVG output file: " + path);
}

}  // namespace spinsim
