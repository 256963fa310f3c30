#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bidi/rational.hpp"
#include "bidi/search.hpp"

namespace bidi {

// cheap_s(alpha): latest step with c_s([1, cheap_s]) <= m^alpha, undefined
// when already c_s(1) > m^alpha. cheap_t mirrored on the suffix.
struct CheapLandmarks {
    std::optional<int> cheap_s;
    std::optional<int> cheap_t;
};

// Threshold comparisons use ln(c) <= alpha*ln(m)*(1+1e-12): exact integer
// cost against a real budget, with just enough slack that the breakpoint
// alpha values produced by alpha_breakpoints() satisfy their own "<=".
CheapLandmarks compute_cheap(const LayerCostProfile& profile, double alpha);

// expan_s(b): latest step such that [1, expan_s] is b-expanding from s,
// i.e. c_s(k+1) >= b*c_s(k) for all k in [1, expan_s). expan_t: smallest
// step such that [expan_t, d] is b-expanding from t. Single steps are
// vacuously expanding, so expan_s >= 1 and expan_t <= d always. Ratio
// comparisons are exact integer cross-multiplications against b.
struct ExpanLandmarks {
    int expan_s;
    int expan_t;
};

ExpanLandmarks compute_expan(const LayerCostProfile& profile, const Rational& b);

// Largest adjacent-step growth ratio in either direction, clamped below
// by b (the bounds assume b_plus >= b). For d == 1 returns b.
double highest_expansion(const LayerCostProfile& profile, const Rational& b);

struct ExpansionParams {
    double alpha = 0;
    Rational b;
    int d = 0;
    int cheap_s = 0, cheap_t = 0;
    int expan_s = 0, expan_t = 0;
    double b_plus = 0;
    int overlap = 0;   // expan_s - expan_t + 1, may be <= 0
    int d_alpha = 0;   // cheap_t - cheap_s - 1, may be <= 0
    bool covered = false;  // d_alpha <= 0: cheap regions span the distance
    int S1 = 0, S2 = 0, T1 = 0, T2 = 0;
    double rho = 0;        // max{S2,T2} / min{S1,T1}, sign kept
    double rho_max = 0;    // (1-alpha) / (1-alpha + alpha*log_b(b_plus))
    double delta_rho = 0;  // 1/(1+max(rho,0)) - 1/(1+rho_max)
    std::optional<double> c_rel;  // overlap / d_alpha when d_alpha > 0
    double eps = 0;   // c(1-alpha)/(log_b(b_plus)+c) with c = max(c_rel, 0)
    double predicted_exponent_thm = 1;  // 1 - eps
    double predicted_exponent_exp = 1;  // 1 - eps/2 (experimental form)
};

// nullopt when a cheap landmark is undefined at this alpha ("alpha too
// small for this pair"). covered pairs are a success case, not an error.
std::optional<ExpansionParams> compute_params(const LayerCostProfile& profile,
                                              double alpha, const Rational& b);

double rho_max_threshold(double alpha, double b, double b_plus);

// 8 log_b(2m) * b^2/(b-1) * m^(1-c/2)
double overlap_cost_bound(double b, double c, std::uint64_t m);

struct PredictedExponents {
    double bound_form;       // 1 - c(1-alpha)/(log_b(b_plus)+c)
    double empirical_form;  // 1 - c(1-alpha)/(2(log_b(b_plus)+c))
};

// Both published forms of the predicted exponent; nullopt when c_rel is
// undefined for the given parameters.
std::optional<PredictedExponents> predicted_exponents(const ExpansionParams& params);

// delta = log_m(deg_s); returns 1 - c(1-delta)/(log_b(b_plus)+c).
double degree_bounded_exponent(std::uint64_t deg_s, std::uint64_t deg_t, std::uint64_t m,
                           double c, double b, double b_plus);

// Sorted distinct { log_m of every cost prefix from s and suffix from t }
// clipped to [0,1). Between consecutive values all step-valued landmarks
// are constant; evaluating anything alpha-dependent only needs these.
std::vector<double> alpha_breakpoints(const LayerCostProfile& profile);

enum class AlphaObjective {
    min_exponent,  // minimize predicted_exponent_exp; covered breakpoints skipped
    min_rho_gap,   // minimize rho_max - rho
};

struct AlphaChoice {
    double alpha;
    double objective_value;
    ExpansionParams params;
};

// Evaluates the objective at every feasible breakpoint (optionally only
// those <= alpha_cap) and returns the minimizer, smallest alpha on ties.
// nullopt when no breakpoint is feasible.
std::optional<AlphaChoice> optimize_alpha(const LayerCostProfile& profile, const Rational& b,
                                          AlphaObjective objective,
                                          std::optional<double> alpha_cap = std::nullopt);

enum class Dichotomy { sublinear_guaranteed, no_guarantee };

// rho < rho_max (strict) guarantees polynomially sublinear cost; otherwise
// instances of linear cost with these parameters exist.
Dichotomy dichotomy_classify(const ExpansionParams& params);

struct DichotomyWitness {
    Dichotomy verdict;
    std::optional<AlphaChoice> best;  // max-gap witness when one exists
};

// The criterion holds for each (alpha, b) separately, so one witnessing
// breakpoint with rho < rho_max is enough to guarantee sublinear cost.
// Scans all feasible breakpoints and keeps the largest rho_max - rho.
DichotomyWitness dichotomy_classify_over_breakpoints(const LayerCostProfile& profile,
                                                     const Rational& b);

std::string params_to_json(const ExpansionParams& params);
std::string params_csv_header();
std::string params_csv_row(const ExpansionParams& params);

}  // namespace bidi
