#include "qaoaplus/errors.hpp"
#include "qaoaplus/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

namespace qaoaplus {

namespace {

using SeriesKey = std::tuple<unsigned, std::string, std::string>;
using Series = std::map<unsigned, double>; // p -> mean success probability

constexpr const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(std::string_view text) {
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

std::map<SeriesKey, Series> collect_series(const SweepResult &csv) {
    std::map<SeriesKey, Series> series;
    if (!csv.aggregates.empty()) {
        for (const auto &r : csv.aggregates)
            series[{r.n, r.strategy, r.variant}][r.p] = r.success_prob;
        return series;
    }
    for (const auto &r : aggregate_rows(csv.rows))
        series[{r.n, r.strategy, r.variant}][r.p] = r.success_prob;
    return series;
}

} // namespace

std::string emit_plot(std::string_view csv_text, const PlotSpec &spec) {
    const auto csv = parse_csv(csv_text);
    const auto series = collect_series(csv);
    if (series.empty())
        throw ShapeError("CSV has no successful data rows to plot");

    unsigned p_lo = ~0u, p_hi = 0;
    for (const auto &[key, points] : series) {
        p_lo = std::min(p_lo, points.begin()->first);
        p_hi = std::max(p_hi, points.rbegin()->first);
    }
    if (p_hi == p_lo)
        ++p_hi; // single level: still give the x axis some width

    const double left = 70, right = 190, top = 40, bottom = 60;
    const double plot_w = spec.width - left - right;
    const double plot_h = spec.height - top - bottom;
    auto x_of = [&](unsigned p) {
        return left + plot_w * static_cast<double>(p - p_lo) / (p_hi - p_lo);
    };
    auto y_of = [&](double prob) {
        return top + plot_h * (1.0 - std::clamp(prob, 0.0, 1.0));
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" + escape(spec.title) + "</text>\n";

    // Axis box and grid.
    svg += "<rect class=\"axis-box\" x=\"" + num(left) + "\" y=\"" + num(top) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        const double prob = k / 5.0;
        const double y = y_of(prob);
        svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(left + plot_w) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(left - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(prob).substr(0, 3) + "</text>\n";
    }
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        const double x = x_of(p);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(top + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               std::to_string(p) + "</text>\n";
    }
    svg += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(spec.height - 18.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">p</text>\n";
    svg += "<text x=\"18\" y=\"" + num(top + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num(top + plot_h / 2) +
           ")\">mean success probability</text>\n";

    std::size_t index = 0;
    for (const auto &[key, points] : series) {
        const char *color = kPalette[index % std::size(kPalette)];
        const auto &[n, strategy, variant] = key;
        const std::string label =
            "n=" + std::to_string(n) + " " + strategy + " " + variant;
        std::string coords;
        for (const auto &[p, prob] : points) {
            if (!coords.empty())
                coords += ' ';
            coords += num(x_of(p)) + "," + num(y_of(prob));
        }
        svg += "<polyline class=\"series\" data-label=\"" + escape(label) +
               "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" +
               coords + "\"/>\n";
        for (const auto &[p, prob] : points)
            svg += "<circle cx=\"" + num(x_of(p)) + "\" cy=\"" + num(y_of(prob)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        const double ly = top + 14 + 18.0 * static_cast<double>(index);
        const double lx = left + plot_w + 14;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 20) +
               "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(lx + 26) + "\" y=\"" + num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(label) +
               "</text>\n";
        ++index;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace qaoaplus
