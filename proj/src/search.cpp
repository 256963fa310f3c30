#include "bidi/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace bidi {

AlternationStrategy balanced_strategy() {
    return [](const StepContext& ctx) {
        return ctx.forward_next_cost <= ctx.backward_next_cost ? Direction::forward
                                                               : Direction::backward;
    };
}

AlternationStrategy unidirectional_strategy() {
    return [](const StepContext&) { return Direction::forward; };
}

AlternationStrategy meet_at_strategy(int k) {
    return [k](const StepContext& ctx) {
        return ctx.forward_steps < k ? Direction::forward : Direction::backward;
    };
}

std::uint64_t LayerCostProfile::cs_range(int i, int j) const {
    std::uint64_t sum = 0;
    for (int k = std::max(i, 1); k <= std::min(j, d); ++k) sum += cs_at(k);
    return sum;
}

std::uint64_t LayerCostProfile::ct_range(int i, int j) const {
    std::uint64_t sum = 0;
    for (int k = std::max(i, 1); k <= std::min(j, d); ++k) sum += ct_at(k);
    return sum;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<int> dist(g.n(), -1);
    std::vector<Vertex> frontier{src}, next;
    dist[src] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = level;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

int bfs_distance(const Graph& g, Vertex s, Vertex t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) return 0;
    std::vector<int> dist(g.n(), -1);
    std::vector<Vertex> frontier{s}, next;
    dist[s] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    if (w == t) return level;
                    dist[w] = level;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    throw std::runtime_error("bfs_distance: target unreachable");
}

LayerCostProfile profile_from_distances(const Graph& g, const std::vector<int>& dist_s,
                                        const std::vector<int>& dist_t, Vertex s, Vertex t) {
    if (s == t) throw std::invalid_argument("layer_cost_profile: s == t");
    const int d = dist_s[t];
    if (d < 0) throw std::runtime_error("layer_cost_profile: t unreachable from s");

    LayerCostProfile p;
    p.d = d;
    p.m = g.m();
    p.cs.assign(static_cast<std::size_t>(d), 0);
    p.ct.assign(static_cast<std::size_t>(d), 0);
    p.layer_sizes_s.assign(static_cast<std::size_t>(d) + 1, 0);
    p.layer_sizes_t.assign(static_cast<std::size_t>(d) + 1, 0);

    for (Vertex v = 0; v < g.n(); ++v) {
        const int ds = dist_s[v];
        if (ds >= 0 && ds <= d) {
            p.layer_sizes_s[static_cast<std::size_t>(ds)] += 1;
            if (ds < d) p.cs[static_cast<std::size_t>(ds)] += g.degree(v);  // c_s(ds+1)
        }
        const int dt = dist_t[v];
        if (dt >= 0 && dt <= d) {
            p.layer_sizes_t[static_cast<std::size_t>(dt)] += 1;
            if (dt < d) p.ct[static_cast<std::size_t>(d - 1 - dt)] += g.degree(v);  // c_t(d-dt)
        }
    }
    return p;
}

LayerCostProfile layer_cost_profile(const Graph& g, Vertex s, Vertex t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("layer_cost_profile: s == t");
    return profile_from_distances(g, bfs_distances(g, s), bfs_distances(g, t), s, t);
}

BidiResult bidirectional_bfs(const Graph& g, Vertex s, Vertex t,
                             const AlternationStrategy& strategy) {
    g.check_vertex(s);
    g.check_vertex(t);

    BidiResult r;
    r.s = s;
    r.t = t;
    if (s == t) return r;  // distance 0, cost 0, empty trace

    std::vector<std::uint8_t> seen_f(g.n(), 0), seen_b(g.n(), 0);
    std::vector<Vertex> frontier_f{s}, frontier_b{t}, next;
    seen_f[s] = 1;
    seen_b[t] = 1;
    r.forward_layer_sizes.push_back(1);
    r.backward_layer_sizes.push_back(1);

    std::uint64_t next_cost_f = g.degree(s);
    std::uint64_t next_cost_b = g.degree(t);
    int steps_f = 0, steps_b = 0;

    while (true) {
        Direction dir = strategy({next_cost_f, next_cost_b, steps_f, steps_b});
        if (dir == Direction::forward && frontier_f.empty()) dir = Direction::backward;
        if (dir == Direction::backward && frontier_b.empty()) dir = Direction::forward;
        if (frontier_f.empty() && frontier_b.empty())
            throw std::runtime_error("bidirectional_bfs: searches exhausted without meeting");

        const bool fwd = (dir == Direction::forward);
        std::vector<Vertex>& frontier = fwd ? frontier_f : frontier_b;
        std::vector<std::uint8_t>& seen_same = fwd ? seen_f : seen_b;
        const std::vector<std::uint8_t>& seen_other = fwd ? seen_b : seen_f;

        const std::uint64_t step_cost = fwd ? next_cost_f : next_cost_b;
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (!seen_same[w]) {
                    seen_same[w] = 1;
                    next.push_back(w);
                }
            }
        }

        r.cost += step_cost;
        r.trace.push_back({dir, step_cost});
        (fwd ? steps_f : steps_b) += 1;
        (fwd ? r.forward_layer_sizes : r.backward_layer_sizes)
            .push_back(static_cast<std::uint32_t>(next.size()));

        bool met = false;
        std::uint64_t cost_next = 0;
        for (Vertex w : next) {
            if (seen_other[w]) met = true;
            cost_next += g.degree(w);
        }
        frontier.swap(next);
        (fwd ? next_cost_f : next_cost_b) = cost_next;

        if (met) {
            r.distance = steps_f + steps_b;
            r.meeting_layer = steps_f;
            return r;
        }
    }
}

MeetingPoint optimal_meeting_cost(const LayerCostProfile& profile) {
    if (profile.d < 1) throw std::invalid_argument("optimal_meeting_cost: d < 1");
    const int d = profile.d;
    // suffix[k] = c_t([k+1, d])
    std::vector<std::uint64_t> suffix(static_cast<std::size_t>(d) + 1, 0);
    for (int k = d - 1; k >= 0; --k)
        suffix[static_cast<std::size_t>(k)] =
            suffix[static_cast<std::size_t>(k) + 1] + profile.ct_at(k + 1);

    MeetingPoint best{suffix[0], 0};
    std::uint64_t prefix = 0;
    for (int k = 1; k <= d; ++k) {
        prefix += profile.cs_at(k);
        std::uint64_t total = prefix + suffix[static_cast<std::size_t>(k)];
        if (total < best.cost) best = {total, k};
    }
    return best;
}

std::string result_to_json(const BidiResult& r, const std::string& s_label,
                           const std::string& t_label) {
    nlohmann::json j;
    j["s"] = s_label;
    j["t"] = t_label;
    j["d"] = r.distance;
    j["cost"] = r.cost;
    j["meeting_layer"] = r.meeting_layer;
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& step : r.trace)
        trace.push_back({{"dir", step.dir == Direction::forward ? "forward" : "backward"},
                         {"cost", step.cost}});
    j["trace"] = std::move(trace);
    return j.dump(2);
}

}  // namespace bidi
