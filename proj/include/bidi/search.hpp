#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bidi/graph.hpp"

namespace bidi {

enum class Direction : std::uint8_t { forward, backward };

// What a strategy sees before each exploration step: the anticipated cost
// of expanding either frontier (degree sum of that side's current layer)
// and how many completed steps each side has taken.
struct StepContext {
    std::uint64_t forward_next_cost;
    std::uint64_t backward_next_cost;
    int forward_steps;
    int backward_steps;
};

// Decision rule for the next exploration step. Must return a valid
// direction whenever both searches still have an unexplored frontier;
// switching happens only between fully completed steps.
using AlternationStrategy = std::function<Direction(const StepContext&)>;

// Expands whichever side anticipates the cheaper next step; ties go forward.
AlternationStrategy balanced_strategy();
// Always forward: plain BFS from s expressed as an alternation strategy.
AlternationStrategy unidirectional_strategy();
// Forward for the first k steps, backward afterwards (meeting layer k).
AlternationStrategy meet_at_strategy(int k);

struct TraceStep {
    Direction dir;
    std::uint64_t cost;
};

struct BidiResult {
    Vertex s = 0, t = 0;
    int distance = 0;
    std::uint64_t cost = 0;    // sum of degrees of every expanded vertex
    int meeting_layer = 0;     // completed forward steps at meeting
    std::vector<TraceStep> trace;
    std::vector<std::uint32_t> forward_layer_sizes;   // |l(s,i)| for produced layers, i from 0
    std::vector<std::uint32_t> backward_layer_sizes;
};

// Exploration costs of one (s,t) pair, valid independently of any search
// run: cs[i-1] = c_s(i) is the degree sum of l(s,i-1), ct[i-1] = c_t(i)
// the degree sum of l(t,d-i), for steps i in [1,d].
struct LayerCostProfile {
    int d = 0;
    std::uint64_t m = 0;
    std::vector<std::uint64_t> cs;
    std::vector<std::uint64_t> ct;
    std::vector<std::uint32_t> layer_sizes_s;  // |l(s,i)|, i in [0,d]
    std::vector<std::uint32_t> layer_sizes_t;

    std::uint64_t cs_at(int step) const { return cs[static_cast<std::size_t>(step) - 1]; }
    std::uint64_t ct_at(int step) const { return ct[static_cast<std::size_t>(step) - 1]; }
    // c_v([i,j]); empty when i > j.
    std::uint64_t cs_range(int i, int j) const;
    std::uint64_t ct_range(int i, int j) const;
};

std::vector<int> bfs_distances(const Graph& g, Vertex src);
int bfs_distance(const Graph& g, Vertex s, Vertex t);

LayerCostProfile layer_cost_profile(const Graph& g, Vertex s, Vertex t);
// Same, from precomputed distance arrays (lets callers reuse BFS results).
LayerCostProfile profile_from_distances(const Graph& g, const std::vector<int>& dist_s,
                                        const std::vector<int>& dist_t, Vertex s, Vertex t);

// Full-layer bidirectional BFS. After each completed step the newly
// produced layer is intersected with everything the opposite search has
// discovered; the first hit happens exactly when the step counts sum to
// d(s,t), so the returned distance is exact.
BidiResult bidirectional_bfs(const Graph& g, Vertex s, Vertex t,
                             const AlternationStrategy& strategy);

struct MeetingPoint {
    std::uint64_t cost;
    int k;
};

// min over k in [0,d] of c_s([1,k]) + c_t([k+1,d]), smallest k on ties.
// A strategy's cost is determined by its meeting layer, so this is the
// cost of the best possible alternation strategy for the pair.
MeetingPoint optimal_meeting_cost(const LayerCostProfile& profile);

std::string result_to_json(const BidiResult& r, const std::string& s_label,
                           const std::string& t_label);

}  // namespace bidi
