#include "synthetic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bidi/rng.hpp"

namespace bidi::synth {

Graph from_edges(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    RawEdges raw;
    raw.labels.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) raw.labels.push_back(std::to_string(v));
    raw.edges = std::move(edges);
    return simplify(raw);
}

Graph path(std::uint32_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edges(n, std::move(edges));
}

Graph cycle(std::uint32_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_edges(n, std::move(edges));
}

Graph grid(std::uint32_t rows, std::uint32_t cols) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto id = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return from_edges(rows * cols, std::move(edges));
}

Graph star(std::uint32_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return from_edges(leaves + 1, std::move(edges));
}

Graph wheel(std::uint32_t rim) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 1; v <= rim; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, v == rim ? 1 : v + 1);
    }
    return from_edges(rim + 1, std::move(edges));
}

Graph complete_binary_tree(int depth) {
    std::uint32_t n = (1u << (depth + 1)) - 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return from_edges(n, std::move(edges));
}

Graph complete(std::uint32_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edges(n, std::move(edges));
}

Graph random_connected(std::uint32_t n, std::uint64_t extra_edges, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_connected: n < 2");
    SplitMix64 rng(seed);
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t v = 1; v < n; ++v) {
        auto p = static_cast<Vertex>(rng.below(v));
        edges.emplace_back(p, v);
        used.emplace(std::min(p, v), std::max(p, v));
    }
    std::uint64_t max_extra = static_cast<std::uint64_t>(n) * (n - 1) / 2 - (n - 1);
    extra_edges = std::min(extra_edges, max_extra);
    while (extra_edges > 0) {
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (used.count(key)) continue;
        used.insert(key);
        edges.emplace_back(u, v);
        --extra_edges;
    }
    return from_edges(n, std::move(edges));
}

Graph gnm_connected(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
    if (m < n - 1) throw std::invalid_argument("gnm_connected: m < n-1");
    return random_connected(n, m - (n - 1), seed);
}

}  // namespace bidi::synth
