#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bidi {

using Vertex = std::uint32_t;

// Edge multiset exactly as parsed: orientations, duplicates and self-loops
// survive until simplify(); every preprocessing step is a separate stage.
struct RawEdges {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> labels;  // dense index -> original token
    std::vector<std::string> notes;   // parser warnings (skipped header, ignored weights)
};

struct LoadOptions {
    // Skip a leading "rows cols nnz" style line (three integers on the first
    // non-comment line), as found in Matrix-Market-derived edge lists.
    bool detect_dimension_header = true;
};

struct GraphMeta {
    std::string source;
    std::uint64_t n = 0;           // final vertex count
    std::uint64_t m = 0;           // final undirected edge count
    std::uint64_t original_n = 0;  // after simplify, before LCC extraction
    std::uint64_t original_m = 0;
    std::vector<std::string> steps;  // append-only preprocessing log
};

// Immutable simple undirected graph in compressed adjacency form.
// Adjacency lists are sorted ascending; after largest_connected_component
// the graph is connected. Safe to share across threads.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors,
          std::vector<std::string> labels);

    Vertex n() const { return n_; }
    std::uint64_t m() const { return m_; }

    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v],
                neighbors_.data() + offsets_[v + 1]};
    }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Linear scan; intended for CLI argument resolution, not hot paths.
    std::optional<Vertex> find_label(const std::string& token) const;

    bool has_edge(Vertex u, Vertex v) const;

    void check_vertex(Vertex v) const;

  private:
    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;   // size n+1
    std::vector<Vertex> neighbors_;        // size 2m, sorted per vertex
    std::vector<std::string> labels_;      // size n
};

// Lines are whitespace-separated vertex pairs; '#' and '%' start comments.
// A third numeric token per line is treated as an ignored edge weight.
// Labels are mapped to dense indices in first-appearance order.
// Throws std::runtime_error on unreadable files, malformed lines (with the
// line number) and empty edge sets.
RawEdges load_edge_list(const std::string& path, const LoadOptions& options = {});

// Drops self-loops, merges orientations, removes duplicates, sorts
// adjacency. m counts each undirected edge once. Throws if nothing is left.
Graph simplify(const RawEdges& raw, GraphMeta* meta = nullptr);

// Induced subgraph on the largest component, vertices reindexed
// contiguously (ascending old index). Ties between equal-sized components
// go to the one whose smallest original label is least, comparing labels
// numerically when both parse as integers.
Graph largest_connected_component(const Graph& candidate, GraphMeta* meta = nullptr);

struct LoadedGraph {
    Graph graph;
    GraphMeta meta;
};

// load_edge_list + simplify + largest_connected_component.
LoadedGraph load_graph(const std::string& path, const LoadOptions& options = {});

// One "label_u label_v" line per undirected edge, endpoints in index order.
void write_edge_list(const Graph& g, const std::string& path);

std::string meta_to_json(const GraphMeta& meta);

}  // namespace bidi
