#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bidi/expansion.hpp"
#include "bidi/graph.hpp"
#include "bidi/report.hpp"
#include "bidi/search.hpp"

namespace bidi {

// Which per-pair parameter sets get recorded into params.csv; the report
// aggregates are computed the same way regardless.
enum class AlphaPolicy { fixed, breakpoints, optimize };

struct HarnessConfig {
    int k = 250;
    std::uint64_t seed = 1;
    Rational b{2, 1};
    // The overlap fraction is reported at the largest feasible breakpoint
    // not exceeding this cap (the "alpha <= 0.1" convention).
    double c_alpha_cap = 0.1;
    std::array<double, 2> bands{0.8, 0.85};
    AlphaPolicy policy = AlphaPolicy::fixed;
    std::vector<double> fixed_alphas{0.1};
    AlphaObjective optimize_objective = AlphaObjective::min_exponent;
    int threads = 0;  // 0 = hardware default (capped), overridable via BIDI_THREADS
    bool resume = false;
};

// Parses {k, seed, b, alpha_policy, bands} JSON; unknown keys rejected.
HarnessConfig config_from_json_text(const std::string& text);
HarnessConfig config_from_json_file(const std::string& path);

struct PairOutcome {
    int idx = 0;
    Vertex s = 0, t = 0;
    BidiResult result;
    // fraction c = overlap/d_alpha at the largest feasible alpha <= cap
    // that leaves d_alpha > 0
    std::optional<ExpansionParams> c_params;
    bool c_covered = false;     // feasible under the cap but d_alpha <= 0 everywhere
    bool c_infeasible = false;  // no feasible breakpoint under the cap
    std::optional<AlphaChoice> exp_choice;  // optimize(min_exponent), uncapped
    std::optional<AlphaChoice> gap_choice;  // optimize(min_rho_gap), uncapped
    std::vector<ExpansionParams> recorded;  // per AlphaPolicy
};

struct GraphReport {
    std::string graph_id;
    GraphMeta meta;
    int k = 0;
    double c_hat = 0;
    double estimated_exponent = 0;
    double mean_c_rel = 0;  // NaN when no pair defines it
    int c_defined = 0, c_covered = 0, c_infeasible = 0;
    double mean_predicted_exponent_thm = 0;
    double mean_predicted_exponent_exp = 0;
    int pred_defined = 0;
    double mean_delta_rho = 0;
    int gap_defined = 0;
    int feasible_pairs = 0;  // pairs with at least one feasible breakpoint
    std::string band;
};

ReportRow to_report_row(const GraphReport& report);

// k ordered pairs with s != t, uniform with replacement, SplitMix64-driven;
// identical output for identical (graph size, k, seed) on every platform.
std::vector<std::pair<Vertex, Vertex>> sample_pairs(const Graph& g, int k,
                                                    std::uint64_t seed);

// Balanced bidirectional search cost for one pair.
std::pair<std::uint64_t, BidiResult> measure_pair(const Graph& g, Vertex s, Vertex t);

GraphReport analyze_graph(const Graph& g, const GraphMeta& meta, const std::string& graph_id,
                          const HarnessConfig& config,
                          std::vector<PairOutcome>* pairs_out = nullptr);

struct CorpusResult {
    std::vector<GraphReport> reports;
    std::vector<std::string> skipped;  // unreadable inputs, with reason
    std::string report_csv_path;
    std::string pairs_csv_path;
    std::string params_csv_path;
    std::string summary_json_path;
};

// Loads every *.el / *.txt / *.edges file in the directory, analyzes each,
// and writes report.csv, pairs.csv, params.csv and summary.json into
// out_dir. With config.resume, graphs already present in report.csv are
// not recomputed; the merged output is still sorted and byte-stable.
CorpusResult run_corpus(const std::string& corpus_dir, const HarnessConfig& config,
                        const std::string& out_dir);

struct SweepRow {
    std::string graph_id;
    double alpha;
    Rational b;
    double mean_c_rel;     // NaN when undefined for every pair
    double mean_delta_rho;
};

// Recomputes the overlap fraction and delta_rho per (alpha, b) cell over a
// fixed pair sample; long format, one row per cell.
std::vector<SweepRow> sensitivity_sweep(const Graph& g, const std::string& graph_id,
                                        const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                        const std::vector<double>& alphas,
                                        const std::vector<Rational>& bs);

std::string sweep_csv_text(const std::vector<SweepRow>& rows);

std::string pairs_csv_header();
std::string pairs_csv_row(const std::string& graph_id, const PairOutcome& outcome);

std::string report_to_json(const GraphReport& report);

int resolve_thread_count(int configured);

}  // namespace bidi
