#include "bidi/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bidi {

std::string csv_double(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string report_csv_header() {
    return "graph_id,n,m,k,c_hat,estimated_exponent,mean_c_rel,"
           "mean_predicted_exponent_thm,mean_predicted_exponent_exp,mean_delta_rho,band";
}

std::string report_csv_row(const ReportRow& r) {
    std::string row = r.graph_id;
    row += "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.k);
    row += "," + csv_double(r.c_hat) + "," + csv_double(r.estimated_exponent);
    row += "," + csv_double(r.mean_c_rel);
    row += "," + csv_double(r.mean_predicted_exponent_thm);
    row += "," + csv_double(r.mean_predicted_exponent_exp);
    row += "," + csv_double(r.mean_delta_rho);
    row += "," + r.band;
    return row;
}

std::string report_csv_text(std::vector<ReportRow> rows) {
    if (rows.empty()) throw std::invalid_argument("report: no rows");
    std::sort(rows.begin(), rows.end(),
              [](const ReportRow& a, const ReportRow& b) { return a.graph_id < b.graph_id; });
    std::string text = report_csv_header();
    text += '\n';
    for (const auto& r : rows) {
        text += report_csv_row(r);
        text += '\n';
    }
    return text;
}

void emit_report_csv(std::vector<ReportRow> rows, const std::string& path) {
    std::string text = report_csv_text(std::move(rows));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write csv: " + path);
    out << text;
}

namespace {

std::string fmt_svg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string scatter_svg(const std::vector<ScatterPoint>& points, const AxesConfig& axes) {
    if (points.empty()) throw std::invalid_argument("scatter_svg: no points");
    if (axes.width <= 80 || axes.height <= 80)
        throw std::invalid_argument("scatter_svg: implausible canvas size");

    double xmin = points[0].x, xmax = points[0].x;
    double ymin = points[0].y, ymax = points[0].y;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    for (double mx : axes.x_markers) {
        xmin = std::min(xmin, mx);
        xmax = std::max(xmax, mx);
    }
    if (axes.zero_line) {
        ymin = std::min(ymin, 0.0);
        ymax = std::max(ymax, 0.0);
    }
    if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
    if (ymax == ymin) { ymin -= 0.5; ymax += 0.5; }
    const double xpad = 0.05 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

    const double ml = 60, mr = 20, mt = axes.title.empty() ? 20 : 40, mb = 50;
    const double pw = axes.width - ml - mr, ph = axes.height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << axes.width
        << "\" height=\"" << axes.height << "\" viewBox=\"0 0 " << axes.width << ' '
        << axes.height << "\">\n";
    svg << "<rect width=\"" << axes.width << "\" height=\"" << axes.height
        << "\" fill=\"white\"/>\n";
    if (!axes.title.empty())
        svg << "<text x=\"" << axes.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"15\">" << axes.title << "</text>\n";

    // frame
    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        svg << "<line x1=\"" << fmt_svg(px(fx)) << "\" y1=\"" << mt + ph << "\" x2=\""
            << fmt_svg(px(fx)) << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt_svg(px(fx)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_svg(fx) << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt_svg(py(fy)) << "\" x2=\"" << ml
            << "\" y2=\"" << fmt_svg(py(fy)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt_svg(py(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_svg(fy) << "</text>\n";
    }

    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << axes.height - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << axes.x_label << "</text>\n";
    svg << "<text x=\"15\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 15 " << mt + ph / 2 << ")\">" << axes.y_label
        << "</text>\n";

    for (double mx : axes.x_markers)
        svg << "<line x1=\"" << fmt_svg(px(mx)) << "\" y1=\"" << mt << "\" x2=\""
            << fmt_svg(px(mx)) << "\" y2=\"" << mt + ph
            << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    if (axes.zero_line && ymin < 0 && ymax > 0)
        svg << "<line x1=\"" << ml << "\" y1=\"" << fmt_svg(py(0)) << "\" x2=\"" << ml + pw
            << "\" y2=\"" << fmt_svg(py(0)) << "\" stroke=\"gray\"/>\n";
    if (axes.diagonal) {
        const double lo = std::max(xmin, ymin), hi = std::min(xmax, ymax);
        if (lo < hi)
            svg << "<line x1=\"" << fmt_svg(px(lo)) << "\" y1=\"" << fmt_svg(py(lo))
                << "\" x2=\"" << fmt_svg(px(hi)) << "\" y2=\"" << fmt_svg(py(hi))
                << "\" stroke=\"silver\"/>\n";
    }

    for (const auto& p : points)
        svg << "<circle cx=\"" << fmt_svg(px(p.x)) << "\" cy=\"" << fmt_svg(py(p.y))
            << "\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.7\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

void emit_scatter_svg(const std::vector<ScatterPoint>& points, const AxesConfig& axes,
                      const std::string& path) {
    std::string text = scatter_svg(points, axes);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write svg: " + path);
    out << text;
}

}  // namespace bidi
