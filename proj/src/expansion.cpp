#include "bidi/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace bidi {

namespace {

constexpr double kThresholdSlack = 1e-12;

// c <= m^alpha, with integer c and the relative slack that makes the
// breakpoint alphas (computed as log_m of these very sums) self-consistent.
bool within_budget(std::uint64_t c, double alpha, double ln_m) {
    return std::log(static_cast<double>(c)) <= alpha * ln_m * (1.0 + kThresholdSlack);
}

// c_next >= b * c_prev as integers; b reduced, values bounded by 2m so the
// products stay far from overflow for any graph this tool handles.
bool expands(std::uint64_t c_prev, std::uint64_t c_next, const Rational& b) {
    return c_next * b.den >= c_prev * b.num;
}

double format_guard(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::uint64_t n = std::stoull(text.substr(0, slash));
        std::uint64_t d = std::stoull(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoull(text), 1);
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 9) frac = frac.substr(0, 9);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string digits = text.substr(0, dot) + frac;
    return Rational(std::stoull(digits.empty() ? "0" : digits), den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CheapLandmarks compute_cheap(const LayerCostProfile& profile, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("compute_cheap: alpha must be in [0,1)");
    const double ln_m = std::log(static_cast<double>(profile.m));
    CheapLandmarks lm;

    std::uint64_t prefix = 0;
    for (int j = 1; j <= profile.d; ++j) {
        prefix += profile.cs_at(j);
        if (within_budget(prefix, alpha, ln_m))
            lm.cheap_s = j;
        else
            break;
    }
    std::uint64_t suffix = 0;
    for (int j = profile.d; j >= 1; --j) {
        suffix += profile.ct_at(j);
        if (within_budget(suffix, alpha, ln_m))
            lm.cheap_t = j;
        else
            break;
    }
    return lm;
}

ExpanLandmarks compute_expan(const LayerCostProfile& profile, const Rational& b) {
    if (b.num < b.den) throw std::invalid_argument("compute_expan: b must be >= 1");
    ExpanLandmarks lm{1, profile.d};
    for (int k = 1; k < profile.d; ++k) {
        if (!expands(profile.cs_at(k), profile.cs_at(k + 1), b)) break;
        lm.expan_s = k + 1;
    }
    for (int k = profile.d; k > 1; --k) {
        if (!expands(profile.ct_at(k), profile.ct_at(k - 1), b)) break;
        lm.expan_t = k - 1;
    }
    return lm;
}

double highest_expansion(const LayerCostProfile& profile, const Rational& b) {
    double best = b.value();
    for (int k = 1; k < profile.d; ++k) {
        best = std::max(best, static_cast<double>(profile.cs_at(k + 1)) /
                                  static_cast<double>(profile.cs_at(k)));
        best = std::max(best, static_cast<double>(profile.ct_at(k)) /
                                  static_cast<double>(profile.ct_at(k + 1)));
    }
    return best;
}

double rho_max_threshold(double alpha, double b, double b_plus) {
    if (alpha == 0.0) return 1.0;
    const double log_ratio = std::log(b_plus) / std::log(b);
    return (1.0 - alpha) / (1.0 - alpha + alpha * log_ratio);
}

std::optional<ExpansionParams> compute_params(const LayerCostProfile& profile, double alpha,
                                              const Rational& b) {
    CheapLandmarks cheap = compute_cheap(profile, alpha);
    if (!cheap.cheap_s || !cheap.cheap_t) return std::nullopt;

    ExpanLandmarks expan = compute_expan(profile, b);

    ExpansionParams p;
    p.alpha = alpha;
    p.b = b;
    p.d = profile.d;
    p.cheap_s = *cheap.cheap_s;
    p.cheap_t = *cheap.cheap_t;
    p.expan_s = expan.expan_s;
    p.expan_t = expan.expan_t;
    p.b_plus = highest_expansion(profile, b);
    p.overlap = p.expan_s - p.expan_t + 1;
    p.d_alpha = p.cheap_t - p.cheap_s - 1;
    p.covered = p.d_alpha <= 0;

    p.S1 = p.expan_s;
    p.S2 = p.cheap_t - p.expan_s - 1;
    p.T1 = p.d - p.expan_t + 1;
    p.T2 = p.expan_t - p.cheap_s - 1;
    p.rho = static_cast<double>(std::max(p.S2, p.T2)) /
            static_cast<double>(std::min(p.S1, p.T1));
    p.rho_max = rho_max_threshold(alpha, b.value(), p.b_plus);
    // The transform maps rho in [0,inf) to (0,1]; negative rho (expansions
    // reaching past the cheap landmarks) is clamped to 0 so the sign of
    // delta_rho still matches the rho < rho_max criterion.
    p.delta_rho = 1.0 / (1.0 + std::max(p.rho, 0.0)) - 1.0 / (1.0 + p.rho_max);

    if (p.d_alpha > 0)
        p.c_rel = static_cast<double>(p.overlap) / static_cast<double>(p.d_alpha);
    const double c = std::max(p.c_rel.value_or(0.0), 0.0);
    const double log_ratio = std::log(p.b_plus) / std::log(b.value());
    p.eps = c > 0 ? c * (1.0 - alpha) / (log_ratio + c) : 0.0;
    p.predicted_exponent_thm = 1.0 - p.eps;
    p.predicted_exponent_exp = 1.0 - p.eps / 2.0;
    return p;
}

double overlap_cost_bound(double b, double c, std::uint64_t m) {
    const double dm = static_cast<double>(m);
    const double log_b_2m = std::log(2.0 * dm) / std::log(b);
    return 8.0 * log_b_2m * (b * b / (b - 1.0)) * std::pow(dm, 1.0 - c / 2.0);
}

std::optional<PredictedExponents> predicted_exponents(const ExpansionParams& params) {
    if (!params.c_rel || *params.c_rel <= 0) return std::nullopt;
    const double c = *params.c_rel;
    const double log_ratio = std::log(params.b_plus) / std::log(params.b.value());
    const double eps = c * (1.0 - params.alpha) / (log_ratio + c);
    return PredictedExponents{1.0 - eps, 1.0 - eps / 2.0};
}

double degree_bounded_exponent(std::uint64_t deg_s, std::uint64_t deg_t, std::uint64_t m,
                           double c, double b, double b_plus) {
    if (deg_t > deg_s) throw std::invalid_argument("degree_bounded_exponent: deg_t > deg_s");
    if (deg_s > m) throw std::invalid_argument("degree_bounded_exponent: deg_s > m");
    if (c <= 0 || c > 1) throw std::invalid_argument("degree_bounded_exponent: c out of (0,1]");
    const double delta =
        std::log(static_cast<double>(deg_s)) / std::log(static_cast<double>(m));
    const double log_ratio = std::log(b_plus) / std::log(b);
    return 1.0 - c * (1.0 - delta) / (log_ratio + c);
}

std::vector<double> alpha_breakpoints(const LayerCostProfile& profile) {
    if (profile.m <= 1) return {0.0};
    const double ln_m = std::log(static_cast<double>(profile.m));
    std::vector<double> points;

    std::uint64_t prefix = 0;
    for (int j = 1; j <= profile.d; ++j) {
        prefix += profile.cs_at(j);
        double a = std::log(static_cast<double>(prefix)) / ln_m;
        if (a < 1.0) points.push_back(a);
    }
    std::uint64_t suffix = 0;
    for (int j = profile.d; j >= 1; --j) {
        suffix += profile.ct_at(j);
        double a = std::log(static_cast<double>(suffix)) / ln_m;
        if (a < 1.0) points.push_back(a);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::optional<AlphaChoice> optimize_alpha(const LayerCostProfile& profile, const Rational& b,
                                          AlphaObjective objective,
                                          std::optional<double> alpha_cap) {
    std::optional<AlphaChoice> best;
    for (double a : alpha_breakpoints(profile)) {
        if (alpha_cap && a > *alpha_cap) break;
        auto params = compute_params(profile, a, b);
        if (!params) continue;
        double value = 0;
        switch (objective) {
            case AlphaObjective::min_exponent:
                // the exponent formula needs a positive relevant distance;
                // covered breakpoints carry no prediction to minimize
                if (params->covered) continue;
                value = params->predicted_exponent_exp;
                break;
            case AlphaObjective::min_rho_gap:
                value = params->rho_max - params->rho;
                break;
        }
        if (!best || value < best->objective_value)
            best = AlphaChoice{a, value, *params};
    }
    return best;
}

Dichotomy dichotomy_classify(const ExpansionParams& params) {
    return params.rho < params.rho_max ? Dichotomy::sublinear_guaranteed
                                       : Dichotomy::no_guarantee;
}

DichotomyWitness dichotomy_classify_over_breakpoints(const LayerCostProfile& profile,
                                                     const Rational& b) {
    std::optional<AlphaChoice> best;
    for (double a : alpha_breakpoints(profile)) {
        auto params = compute_params(profile, a, b);
        if (!params) continue;
        double gap = params->rho_max - params->rho;
        if (!best || gap > best->objective_value)
            best = AlphaChoice{a, gap, *params};
    }
    if (best && best->objective_value > 0)
        return {Dichotomy::sublinear_guaranteed, best};
    return {Dichotomy::no_guarantee, best};
}

std::string params_to_json(const ExpansionParams& p) {
    nlohmann::json j;
    j["alpha"] = p.alpha;
    j["b"] = p.b.value();
    j["d"] = p.d;
    j["cheap_s"] = p.cheap_s;
    j["cheap_t"] = p.cheap_t;
    j["expan_s"] = p.expan_s;
    j["expan_t"] = p.expan_t;
    j["b_plus"] = p.b_plus;
    j["overlap"] = p.overlap;
    j["d_alpha"] = p.d_alpha;
    j["covered"] = p.covered;
    j["S1"] = p.S1;
    j["S2"] = p.S2;
    j["T1"] = p.T1;
    j["T2"] = p.T2;
    j["rho"] = format_guard(p.rho);
    j["rho_max"] = p.rho_max;
    j["delta_rho"] = format_guard(p.delta_rho);
    if (p.c_rel)
        j["c_rel"] = *p.c_rel;
    else
        j["c_rel"] = nullptr;
    j["eps"] = p.eps;
    j["predicted_exponent_thm"] = p.predicted_exponent_thm;
    j["predicted_exponent_exp"] = p.predicted_exponent_exp;
    return j.dump(2);
}

std::string params_csv_header() {
    return "alpha,b,d,cheap_s,cheap_t,expan_s,expan_t,b_plus,overlap,d_alpha,covered,"
           "S1,S2,T1,T2,rho,rho_max,delta_rho,c_rel,eps,"
           "predicted_exponent_thm,predicted_exponent_exp";
}

namespace {
std::string fmt12(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}
}  // namespace

std::string params_csv_row(const ExpansionParams& p) {
    std::string row;
    row += fmt12(p.alpha) + "," + p.b.str() + "," + std::to_string(p.d) + ",";
    row += std::to_string(p.cheap_s) + "," + std::to_string(p.cheap_t) + ",";
    row += std::to_string(p.expan_s) + "," + std::to_string(p.expan_t) + ",";
    row += fmt12(p.b_plus) + "," + std::to_string(p.overlap) + "," +
           std::to_string(p.d_alpha) + ",";
    row += std::string(p.covered ? "1" : "0") + ",";
    row += std::to_string(p.S1) + "," + std::to_string(p.S2) + "," + std::to_string(p.T1) +
           "," + std::to_string(p.T2) + ",";
    row += fmt12(p.rho) + "," + fmt12(p.rho_max) + "," + fmt12(p.delta_rho) + ",";
    row += (p.c_rel ? fmt12(*p.c_rel) : "") + ",";
    row += fmt12(p.eps) + "," + fmt12(p.predicted_exponent_thm) + "," +
           fmt12(p.predicted_exponent_exp);
    return row;
}

}  // namespace bidi
