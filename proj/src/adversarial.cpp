#include "bidi/adversarial.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace bidi {

namespace {

std::vector<std::uint64_t> realize_layer_sizes(const AdversarialSpec& spec, int d1, int depth) {
    std::vector<std::uint64_t> sizes{1};
    double target = 1.0;
    double carry = 0.0;
    for (int i = 1; i <= depth; ++i) {
        const double factor = i <= d1 ? spec.b.value() : spec.b_plus;
        if (factor < 1.0) throw std::invalid_argument("generate: target ratio < 1");
        target *= factor;
        const double raw = target + carry;
        std::uint64_t k = static_cast<std::uint64_t>(std::llround(raw));
        carry = raw - static_cast<double>(k);
        // layer sizes never shrink and never grow by less than b
        std::uint64_t floor_b =
            (sizes.back() * spec.b.num + spec.b.den - 1) / spec.b.den;
        sizes.push_back(std::max({k, floor_b, sizes.back()}));
    }
    return sizes;
}

}  // namespace

AdversarialInstance generate(const AdversarialSpec& spec) {
    if (spec.alpha <= 0.0 || spec.alpha >= 1.0)
        throw std::invalid_argument("generate: alpha must be in (0,1)");
    if (spec.b.num <= spec.b.den) throw std::invalid_argument("generate: b must be > 1");
    if (spec.b_plus <= spec.b.value())
        throw std::invalid_argument("generate: b_plus must be > b");
    const double threshold = rho_max_threshold(spec.alpha, spec.b.value(), spec.b_plus);
    if (spec.rho < threshold * (1.0 - 1e-9))
        throw std::invalid_argument("generate: rho below rho_max for these parameters");

    const int depth = spec.depth;
    const int d1 = static_cast<int>(std::llround((1.0 - spec.rho) * depth));
    const int d2 = depth - d1;
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("generate: depth split d1/d2 must both be >= 1");

    std::vector<std::uint64_t> sizes = realize_layer_sizes(spec, d1, depth);

    std::uint64_t n_tree = 0;
    for (std::uint64_t s : sizes) n_tree += s;
    const std::uint64_t tree_edges = 2 * (n_tree - 1);
    std::uint64_t path_len = 0;
    if (spec.append_path.enabled)
        path_len = spec.append_path.length > 0 ? spec.append_path.length : 4 * tree_edges;
    const std::uint64_t total_vertices = 2 * n_tree + path_len;
    if (total_vertices > spec.vertex_budget)
        throw std::runtime_error("generate: vertex budget exceeded (" +
                                 std::to_string(total_vertices) + " > " +
                                 std::to_string(spec.vertex_budget) + ")");

    RawEdges raw;
    raw.labels.reserve(total_vertices);
    for (std::uint64_t v = 0; v < total_vertices; ++v) raw.labels.push_back(std::to_string(v));
    raw.edges.reserve(tree_edges + sizes.back() + path_len);

    // Both trees laid out layer by layer; T_t is an exact mirror at offset.
    const std::uint64_t offset = n_tree;
    std::uint64_t layer_start = 0;
    for (int i = 1; i <= depth; ++i) {
        const std::uint64_t parents = sizes[static_cast<std::size_t>(i) - 1];
        const std::uint64_t children = sizes[static_cast<std::size_t>(i)];
        const std::uint64_t child_start = layer_start + parents;
        const std::uint64_t base = children / parents;
        const std::uint64_t rem = children % parents;
        std::uint64_t next_child = child_start;
        for (std::uint64_t p = 0; p < parents; ++p) {
            const std::uint64_t count = base + (p < rem ? 1 : 0);
            for (std::uint64_t c = 0; c < count; ++c, ++next_child) {
                raw.edges.emplace_back(static_cast<Vertex>(layer_start + p),
                                       static_cast<Vertex>(next_child));
                raw.edges.emplace_back(static_cast<Vertex>(offset + layer_start + p),
                                       static_cast<Vertex>(offset + next_child));
            }
        }
        layer_start = child_start;
    }

    // identity matching between the mirrored deepest layers
    const std::uint64_t leaf_start = n_tree - sizes.back();
    for (std::uint64_t j = 0; j < sizes.back(); ++j)
        raw.edges.emplace_back(static_cast<Vertex>(leaf_start + j),
                               static_cast<Vertex>(offset + leaf_start + j));

    if (path_len > 0) {
        std::uint64_t prev = leaf_start;  // first leaf of T_s
        for (std::uint64_t i = 0; i < path_len; ++i) {
            const std::uint64_t node = 2 * n_tree + i;
            raw.edges.emplace_back(static_cast<Vertex>(prev), static_cast<Vertex>(node));
            prev = node;
        }
    }

    AdversarialInstance inst;
    inst.graph = simplify(raw);
    inst.s = 0;
    inst.t = static_cast<Vertex>(offset);
    inst.b = spec.b;
    inst.b_plus = spec.b_plus;
    inst.depth = depth;
    inst.realized_d1 = d1;
    inst.realized_d2 = d2;
    inst.layer_sizes = std::move(sizes);
    inst.path_length = path_len;
    inst.profile = layer_cost_profile(inst.graph, inst.s, inst.t);

    const double prefix_d1 = static_cast<double>(inst.profile.cs_range(1, d1));
    double alpha_hat = std::log(prefix_d1) / std::log(static_cast<double>(inst.graph.m()));
    alpha_hat = std::min(alpha_hat, 1.0 - 1e-9);
    inst.realized_alpha = alpha_hat;
    if (auto params = compute_params(inst.profile, alpha_hat, spec.b))
        inst.realized_rho = params->rho;
    else
        inst.realized_rho = std::numeric_limits<double>::quiet_NaN();
    return inst;
}

VerifyReport verify_profile(const AdversarialInstance& instance, double tol,
                            double min_leaf_fraction) {
    VerifyReport report;
    const LayerCostProfile& p = instance.profile;
    const int d1 = instance.realized_d1;
    const int depth = instance.depth;
    const double b = instance.b.value();
    const double b_plus = instance.b_plus;

    // ratios are taken on the realized joined-graph profile
    auto ratio = [&](int k) {
        return static_cast<double>(p.cs_at(k + 1)) / static_cast<double>(p.cs_at(k));
    };

    for (int k = 1; k < d1; ++k) {
        LayerCheck check{k, ratio(k), b * (1.0 - tol),
                         std::numeric_limits<double>::infinity(), true};
        check.ok = check.ratio >= check.lo;
        report.pass = report.pass && check.ok;
        report.checks.push_back(check);
    }
    for (int k = d1; k < depth; ++k) {
        // step 1 has no parent-edge term in c_s(1), so its ratio runs one
        // above the branching factor; only the lower bound applies there
        const double hi =
            k == 1 ? std::numeric_limits<double>::infinity() : b_plus * (1.0 + tol);
        LayerCheck check{k, ratio(k), b * (1.0 - tol), hi, true};
        check.ok = check.ratio >= check.lo && check.ratio <= check.hi;
        report.pass = report.pass && check.ok;
        report.checks.push_back(check);
    }

    report.leaf_fraction = static_cast<double>(p.cs_at(depth)) /
                           (2.0 * static_cast<double>(p.m));
    if (instance.path_length > 0) {
        report.diluted_leaf_layer = report.leaf_fraction < min_leaf_fraction;
    } else if (report.leaf_fraction < min_leaf_fraction) {
        report.pass = false;
    }
    return report;
}

void write_instance(const AdversarialInstance& instance, const std::string& edge_path) {
    write_edge_list(instance.graph, edge_path);
    nlohmann::json j;
    j["s"] = instance.graph.label(instance.s);
    j["t"] = instance.graph.label(instance.t);
    j["d1"] = instance.realized_d1;
    j["d2"] = instance.realized_d2;
    j["realized_rho"] = instance.realized_rho;
    j["branching_sequence"] = instance.layer_sizes;
    std::ofstream out(edge_path + ".json");
    if (!out) throw std::runtime_error("cannot write sidecar: " + edge_path + ".json");
    out << j.dump(2) << '\n';
}

}  // namespace bidi
