#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bidi/expansion.hpp"
#include "bidi/graph.hpp"
#include "bidi/search.hpp"

namespace bidi {

struct PathAppend {
    bool enabled = false;
    // 0 means the default of 4x the total tree edge count, which makes the
    // deepest layer at most a quarter of all edges.
    std::uint64_t length = 0;
};

// Two mirrored trees of the given depth, b-expanding for d1 layers and
// b_plus-expanding for the remaining d2, joined leaf-to-leaf by a perfect
// matching. d1 = round((1-rho)*depth). Only meaningful in the regime
// rho >= rho_max(alpha, b, b_plus), which is validated.
struct AdversarialSpec {
    double alpha = 0.3;
    Rational b{2, 1};
    double b_plus = 4.0;
    double rho = 0.5;
    int depth = 8;
    PathAppend append_path;
    std::uint64_t vertex_budget = 10'000'000;
};

struct AdversarialInstance {
    Graph graph;
    Vertex s = 0, t = 0;
    Rational b{2, 1};
    double b_plus = 4.0;
    int depth = 0;
    int realized_d1 = 0, realized_d2 = 0;
    std::vector<std::uint64_t> layer_sizes;  // per-layer realization, index 0..depth
    std::uint64_t path_length = 0;
    LayerCostProfile profile;  // recomputed on the finished graph
    // Analyzer parameters at the instance's own cheap-prefix breakpoint
    // alpha_hat = log_m c_s([1,d1]), the alpha at which the construction's
    // cheap_s = d1 intent holds exactly (alpha_hat -> alpha as depth grows).
    double realized_alpha = 0;
    double realized_rho = 0;
};

AdversarialInstance generate(const AdversarialSpec& spec);

struct LayerCheck {
    int step;      // ratio c_s(step+1)/c_s(step)
    double ratio;
    double lo, hi;
    bool ok;
};

struct VerifyReport {
    bool pass = true;
    bool diluted_leaf_layer = false;  // expected when a path was appended
    double leaf_fraction = 0;         // c_s(depth) / 2m
    std::vector<LayerCheck> checks;
};

// Prefix ratios must reach b*(1-tol); mid-segment ratios must fall in
// [b*(1-tol), b_plus*(1+tol)]. Without an appended path the deepest layer
// must carry at least min_leaf_fraction of all edge endpoints.
VerifyReport verify_profile(const AdversarialInstance& instance, double tol = 0.05,
                            double min_leaf_fraction = 0.05);

// Edge list plus a JSON sidecar {s, t, d1, d2, realized_rho,
// branching_sequence} at path + ".json".
void write_instance(const AdversarialInstance& instance, const std::string& edge_path);

}  // namespace bidi
