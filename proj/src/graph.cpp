#include "bidi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace bidi {

namespace {

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

// Numeric-aware label order: integers compare by value and before
// non-numeric tokens, everything else lexicographically.
bool label_less(const std::string& a, const std::string& b) {
    bool na = is_integer_token(a), nb = is_integer_token(b);
    if (na != nb) return na;
    if (na) {
        long long va = std::stoll(a), vb = std::stoll(b);
        if (va != vb) return va < vb;
    }
    return a < b;
}

}  // namespace

Graph::Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors,
             std::vector<std::string> labels)
    : n_(static_cast<Vertex>(labels.size())),
      m_(neighbors.size() / 2),
      offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)),
      labels_(std::move(labels)) {
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("Graph: offsets size mismatch");
}

std::optional<Vertex> Graph::find_label(const std::string& token) const {
    for (Vertex v = 0; v < n_; ++v)
        if (labels_[v] == token) return v;
    return std::nullopt;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) +
                                         " out of range (n=" + std::to_string(n_) + ")");
}

RawEdges load_edge_list(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    RawEdges raw;
    std::unordered_map<std::string, Vertex> index;
    bool first_data_line = true;
    bool weights_seen = false;
    std::string line;
    std::uint64_t lineno = 0;

    auto intern = [&](const std::string& tok) -> Vertex {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        Vertex id = static_cast<Vertex>(raw.labels.size());
        index.emplace(tok, id);
        raw.labels.push_back(tok);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        std::size_t first = sv.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (sv[first] == '#' || sv[first] == '%') continue;

        std::istringstream toks{std::string(sv)};
        std::vector<std::string> fields;
        std::string tok;
        while (toks >> tok) fields.push_back(tok);

        if (first_data_line && options.detect_dimension_header && fields.size() == 3 &&
            is_integer_token(fields[0]) && is_integer_token(fields[1]) &&
            is_integer_token(fields[2])) {
            raw.notes.push_back("skipped dimension-like header line " + std::to_string(lineno));
            first_data_line = false;
            continue;
        }
        first_data_line = false;

        if (fields.size() != 2 && fields.size() != 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed line (expected 2 vertex tokens)");
        if (fields.size() == 3 && !weights_seen) {
            weights_seen = true;
            raw.notes.push_back("ignored edge weights (third column)");
        }
        Vertex u = intern(fields[0]);
        Vertex v = intern(fields[1]);
        raw.edges.emplace_back(u, v);
    }

    if (raw.edges.empty()) throw std::runtime_error("empty edge set: " + path);
    return raw;
}

Graph simplify(const RawEdges& raw, GraphMeta* meta) {
    if (raw.edges.empty()) throw std::runtime_error("simplify: empty edge set");
    const Vertex n = static_cast<Vertex>(raw.labels.size());

    std::uint64_t self_loops = 0;
    std::vector<std::pair<Vertex, Vertex>> canon;
    canon.reserve(raw.edges.size());
    for (auto [u, v] : raw.edges) {
        if (u == v) { ++self_loops; continue; }
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    if (canon.empty()) throw std::runtime_error("simplify: no edges left after removing self-loops");

    std::uint64_t merged = raw.edges.size() - self_loops - canon.size();

    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : canon) {
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<Vertex> adj(canon.size() * 2);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : canon) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
    // adjacency must end up sorted ascending per vertex
    for (Vertex v = 0; v < n; ++v)
        std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));

    if (meta) {
        for (const auto& note : raw.notes) meta->steps.push_back(note);
        meta->steps.push_back("parsed " + std::to_string(raw.edges.size()) + " edge entries");
        meta->steps.push_back("symmetrized and deduped (" + std::to_string(merged) +
                              " duplicate or reverse entries merged)");
        meta->steps.push_back("removed " + std::to_string(self_loops) + " self-loops");
        meta->original_n = n;
        meta->original_m = canon.size();
    }
    return Graph(std::move(offsets), std::move(adj), std::vector<std::string>(raw.labels));
}

Graph largest_connected_component(const Graph& candidate, GraphMeta* meta) {
    const Vertex n = candidate.n();
    if (candidate.m() == 0) throw std::runtime_error("empty graph");

    std::vector<Vertex> comp(n, n);  // n = unvisited
    Vertex comp_count = 0;
    std::vector<Vertex> stack;
    std::vector<std::uint64_t> comp_size;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] != n) continue;
        comp[v] = comp_count;
        std::uint64_t size = 1;
        stack.push_back(v);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : candidate.neighbors(u)) {
                if (comp[w] == n) {
                    comp[w] = comp_count;
                    ++size;
                    stack.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
        ++comp_count;
    }

    // smallest min-label representative per component, for the tie-break
    std::vector<Vertex> best_vertex(comp_count, n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex& rep = best_vertex[comp[v]];
        if (rep == n || label_less(candidate.label(v), candidate.label(rep))) rep = v;
    }
    Vertex winner = 0;
    for (Vertex c = 1; c < comp_count; ++c) {
        if (comp_size[c] > comp_size[winner] ||
            (comp_size[c] == comp_size[winner] &&
             label_less(candidate.label(best_vertex[c]), candidate.label(best_vertex[winner]))))
            winner = c;
    }

    std::vector<Vertex> old_to_new(n, n);
    std::vector<std::string> labels;
    labels.reserve(comp_size[winner]);
    Vertex next_id = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] == winner) {
            old_to_new[v] = next_id++;
            labels.push_back(candidate.label(v));
        }
    }

    const Vertex nn = next_id;
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(nn) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        if (comp[v] == winner) offsets[old_to_new[v] + 1] = candidate.degree(v);
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<Vertex> adj(offsets[nn]);
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] != winner) continue;
        std::uint64_t pos = offsets[old_to_new[v]];
        for (Vertex w : candidate.neighbors(v)) adj[pos++] = old_to_new[w];
    }

    Graph result(std::move(offsets), std::move(adj), std::move(labels));
    if (meta) {
        meta->steps.push_back("extracted largest connected component (" +
                              std::to_string(result.n()) + " of " + std::to_string(n) +
                              " vertices)");
        meta->n = result.n();
        meta->m = result.m();
    }
    return result;
}

LoadedGraph load_graph(const std::string& path, const LoadOptions& options) {
    GraphMeta meta;
    meta.source = path;
    RawEdges raw = load_edge_list(path, options);
    Graph candidate = simplify(raw, &meta);
    Graph g = largest_connected_component(candidate, &meta);
    return {std::move(g), std::move(meta)};
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            if (v < w) out << g.label(v) << ' ' << g.label(w) << '\n';
}

std::string meta_to_json(const GraphMeta& meta) {
    nlohmann::json j;
    j["source"] = meta.source;
    j["n"] = meta.n;
    j["m"] = meta.m;
    j["original_n"] = meta.original_n;
    j["original_m"] = meta.original_m;
    j["steps"] = meta.steps;
    return j.dump(2);
}

}  // namespace bidi
