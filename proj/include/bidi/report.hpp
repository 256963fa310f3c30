#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bidi {

// One aggregated line per analyzed graph; column order is fixed and
// guarded by a golden test.
struct ReportRow {
    std::string graph_id;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    int k = 0;
    double c_hat = 0;
    double estimated_exponent = 0;
    double mean_c_rel = 0;                 // NaN -> empty cell
    double mean_predicted_exponent_thm = 0;
    double mean_predicted_exponent_exp = 0;
    double mean_delta_rho = 0;
    std::string band;
};

// RFC-4180-style: header, LF endings, floats at 12 significant digits,
// rows sorted by graph_id. Throws on empty input or unwritable path.
void emit_report_csv(std::vector<ReportRow> rows, const std::string& path);
std::string report_csv_text(std::vector<ReportRow> rows);
std::string report_csv_header();
std::string report_csv_row(const ReportRow& row);

std::string csv_double(double v);  // %.12g, empty for non-finite

struct ScatterPoint {
    double x, y;
};

struct AxesConfig {
    std::string x_label = "x";
    std::string y_label = "y";
    std::string title;
    int width = 640;
    int height = 480;
    bool diagonal = false;          // y = x reference line
    bool zero_line = false;         // horizontal line at y = 0
    std::vector<double> x_markers;  // vertical markers (e.g. 0.8 / 0.85 bands)
};

// Self-contained static SVG scatter plot, no external dependencies.
std::string scatter_svg(const std::vector<ScatterPoint>& points, const AxesConfig& axes);
void emit_scatter_svg(const std::vector<ScatterPoint>& points, const AxesConfig& axes,
                      const std::string& path);

}  // namespace bidi
