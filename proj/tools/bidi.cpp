// bidi: measure and predict bidirectional BFS performance on edge lists.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bidi/adversarial.hpp"
#include "bidi/expansion.hpp"
#include "bidi/graph.hpp"
#include "bidi/harness.hpp"
#include "bidi/report.hpp"
#include "bidi/search.hpp"

using namespace bidi;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

Vertex resolve_vertex(const Graph& g, const std::string& token) {
    if (auto v = g.find_label(token)) return *v;
    try {
        std::size_t used = 0;
        unsigned long idx = std::stoul(token, &used);
        if (used == token.size() && idx < g.n()) return static_cast<Vertex>(idx);
    } catch (...) {
    }
    throw InputError("vertex '" + token + "' not found (label or index)");
}

AlternationStrategy parse_strategy(const std::string& name) {
    if (name == "balanced") return balanced_strategy();
    if (name == "unidirectional") return unidirectional_strategy();
    if (name.rfind("meet-at:", 0) == 0) {
        int k = std::stoi(name.substr(8));
        if (k < 0) throw InputError("meet-at layer must be >= 0");
        return meet_at_strategy(k);
    }
    throw InputError("unknown strategy '" + name + "'");
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stod(tok));
    return values;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> values;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(Rational::parse(tok));
    return values;
}

HarnessConfig load_config(const std::string& config_path, int k, std::uint64_t seed,
                          const std::string& b, int threads) {
    HarnessConfig cfg;
    if (!config_path.empty()) cfg = config_from_json_file(config_path);
    if (k > 0) cfg.k = k;
    if (seed > 0) cfg.seed = seed;
    if (!b.empty()) cfg.b = Rational::parse(b);
    if (threads > 0) cfg.threads = threads;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced bidirectional BFS: search cost, expansion parameters, bounds"};
    app.require_subcommand(1);

    std::string graph_path, out_path, config_path, s_token, t_token;
    std::string strategy_name = "balanced", b_text, x_col = "estimated_exponent",
                y_col = "mean_delta_rho";
    double alpha = 0.1, bplus = 4.0, rho = 0.6;
    int k = 0, depth = 8, threads = 0;
    std::uint64_t seed = 0, budget = 10'000'000, path_length = 0;
    bool append_path = false, resume = false, as_csv = false, diagonal = false,
         zero_line = false;
    std::string corpus_dir, out_dir = "corpus_out", in_csv, bands_text, alphas_text,
                bs_text, x_label, y_label, title;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "edge-list file")->required();
    };
    auto add_pair = [&](CLI::App* cmd) {
        add_graph(cmd);
        cmd->add_option("--s", s_token, "start vertex (label or index)")->required();
        cmd->add_option("--t", t_token, "destination vertex")->required();
    };

    auto* cmd_info = app.add_subcommand("load-info", "load + preprocess, print GraphMeta");
    add_graph(cmd_info);
    cmd_info->add_option("--out", out_path);

    auto* cmd_query = app.add_subcommand("query", "run one bidirectional search");
    add_pair(cmd_query);
    cmd_query->add_option("--strategy", strategy_name,
                          "balanced | unidirectional | meet-at:K");
    cmd_query->add_option("--out", out_path);

    auto* cmd_profile = app.add_subcommand("profile", "exploration-cost profile of a pair");
    add_pair(cmd_profile);
    cmd_profile->add_option("--out", out_path);

    auto* cmd_pair = app.add_subcommand("analyze-pair", "expansion parameters of a pair");
    add_pair(cmd_pair);
    cmd_pair->add_option("--alpha", alpha, "cheap-region exponent in [0,1)");
    cmd_pair->add_option("--b", b_text, "expansion base (rational, default 2)");
    cmd_pair->add_flag("--csv", as_csv, "emit a CSV row instead of JSON");
    cmd_pair->add_option("--out", out_path);

    auto* cmd_analyze = app.add_subcommand("analyze-graph", "sample pairs and aggregate");
    add_graph(cmd_analyze);
    cmd_analyze->add_option("--k", k, "pairs to sample (default 250)");
    cmd_analyze->add_option("--seed", seed);
    cmd_analyze->add_option("--b", b_text);
    cmd_analyze->add_option("--config", config_path, "JSON config");
    cmd_analyze->add_option("--threads", threads, "0 = auto (BIDI_THREADS respected)");
    cmd_analyze->add_option("--out", out_path);

    auto* cmd_corpus = app.add_subcommand("run-corpus", "analyze a directory of edge lists");
    cmd_corpus->add_option("--dir", corpus_dir, "directory of edge lists")->required();
    cmd_corpus->add_option("--out-dir", out_dir, "output directory (default corpus_out)");
    cmd_corpus->add_option("--k", k);
    cmd_corpus->add_option("--seed", seed);
    cmd_corpus->add_option("--b", b_text);
    cmd_corpus->add_option("--config", config_path);
    cmd_corpus->add_option("--threads", threads);
    cmd_corpus->add_flag("--resume", resume, "skip graphs already in report.csv");

    auto* cmd_gen = app.add_subcommand("generate-adversarial",
                                       "build a matched expanding tree pair");
    cmd_gen->add_option("--alpha", alpha)->required();
    cmd_gen->add_option("--b", b_text);
    cmd_gen->add_option("--bplus", bplus)->required();
    cmd_gen->add_option("--rho", rho)->required();
    cmd_gen->add_option("--d", depth, "tree depth")->required();
    cmd_gen->add_flag("--append-path", append_path, "attach an edge-diluting path");
    cmd_gen->add_option("--path-length", path_length, "path length (0 = 4x tree edges)");
    cmd_gen->add_option("--budget", budget, "vertex budget");
    cmd_gen->add_option("--out", out_path, "edge-list output path")->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "alpha/b sensitivity table");
    add_graph(cmd_sweep);
    cmd_sweep->add_option("--k", k);
    cmd_sweep->add_option("--seed", seed);
    cmd_sweep->add_option("--alphas", alphas_text, "comma list (default 0,0.1,0.5,0.9)");
    cmd_sweep->add_option("--bs", bs_text, "comma list (default 1,1.5,2,4)");
    cmd_sweep->add_option("--out", out_path);

    auto* cmd_plot = app.add_subcommand("plot", "scatter SVG from a report CSV");
    cmd_plot->add_option("--in", in_csv, "input CSV")->required();
    cmd_plot->add_option("--x", x_col, "x column (default estimated_exponent)");
    cmd_plot->add_option("--y", y_col, "y column (default mean_delta_rho)");
    cmd_plot->add_option("--out", out_path, "output SVG")->required();
    cmd_plot->add_flag("--diagonal", diagonal, "draw the y = x reference line");
    cmd_plot->add_flag("--zero-line", zero_line, "draw a horizontal zero line");
    cmd_plot->add_option("--bands", bands_text, "vertical markers, e.g. 0.8,0.85");
    cmd_plot->add_option("--x-label", x_label);
    cmd_plot->add_option("--y-label", y_label);
    cmd_plot->add_option("--title", title);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_info->parsed()) {
            LoadedGraph loaded = load_graph(graph_path);
            write_text(meta_to_json(loaded.meta), out_path);
        } else if (cmd_query->parsed()) {
            LoadedGraph loaded = load_graph(graph_path);
            Vertex s = resolve_vertex(loaded.graph, s_token);
            Vertex t = resolve_vertex(loaded.graph, t_token);
            BidiResult r = bidirectional_bfs(loaded.graph, s, t, parse_strategy(strategy_name));
            write_text(result_to_json(r, loaded.graph.label(s), loaded.graph.label(t)),
                       out_path);
        } else if (cmd_profile->parsed()) {
            LoadedGraph loaded = load_graph(graph_path);
            Vertex s = resolve_vertex(loaded.graph, s_token);
            Vertex t = resolve_vertex(loaded.graph, t_token);
            if (s == t) throw InputError("profile needs s != t");
            LayerCostProfile p = layer_cost_profile(loaded.graph, s, t);
            nlohmann::json j;
            j["s"] = loaded.graph.label(s);
            j["t"] = loaded.graph.label(t);
            j["d"] = p.d;
            j["m"] = p.m;
            j["cs"] = p.cs;
            j["ct"] = p.ct;
            j["layer_sizes_s"] = p.layer_sizes_s;
            j["layer_sizes_t"] = p.layer_sizes_t;
            write_text(j.dump(2), out_path);
        } else if (cmd_pair->parsed()) {
            LoadedGraph loaded = load_graph(graph_path);
            Vertex s = resolve_vertex(loaded.graph, s_token);
            Vertex t = resolve_vertex(loaded.graph, t_token);
            if (s == t) throw InputError("analyze-pair needs s != t");
            if (alpha < 0 || alpha >= 1) throw InputError("alpha must be in [0,1)");
            Rational b = b_text.empty() ? Rational{2, 1} : Rational::parse(b_text);
            LayerCostProfile p = layer_cost_profile(loaded.graph, s, t);
            auto params = compute_params(p, alpha, b);
            if (!params)
                throw InputError("alpha too small for this pair (cheap landmark undefined)");
            write_text(as_csv ? params_csv_header() + "\n" + params_csv_row(*params)
                              : params_to_json(*params),
                       out_path);
        } else if (cmd_analyze->parsed()) {
            HarnessConfig cfg = load_config(config_path, k, seed, b_text, threads);
            LoadedGraph loaded = load_graph(graph_path);
            std::string id = std::filesystem::path(graph_path).stem().string();
            GraphReport rep = analyze_graph(loaded.graph, loaded.meta, id, cfg);
            write_text(report_to_json(rep), out_path);
        } else if (cmd_corpus->parsed()) {
            HarnessConfig cfg = load_config(config_path, k, seed, b_text, threads);
            cfg.resume = resume || cfg.resume;
            CorpusResult result = run_corpus(corpus_dir, cfg, out_dir);
            std::cout << "report:  " << result.report_csv_path << '\n'
                      << "pairs:   " << result.pairs_csv_path << '\n'
                      << "params:  " << result.params_csv_path << '\n'
                      << "summary: " << result.summary_json_path << '\n';
            for (const auto& skip : result.skipped) std::cerr << "skipped " << skip << '\n';
        } else if (cmd_gen->parsed()) {
            AdversarialSpec spec;
            spec.alpha = alpha;
            spec.b = b_text.empty() ? Rational{2, 1} : Rational::parse(b_text);
            spec.b_plus = bplus;
            spec.rho = rho;
            spec.depth = depth;
            spec.append_path.enabled = append_path || path_length > 0;
            spec.append_path.length = path_length;
            spec.vertex_budget = budget;
            AdversarialInstance inst = generate(spec);
            write_instance(inst, out_path);
            VerifyReport verify = verify_profile(inst);
            std::cout << "n=" << inst.graph.n() << " m=" << inst.graph.m()
                      << " d(s,t)=" << inst.profile.d << " d1=" << inst.realized_d1
                      << " d2=" << inst.realized_d2 << " realized_rho=" << inst.realized_rho
                      << " layer_check=" << (verify.pass ? "pass" : "FAIL")
                      << (verify.diluted_leaf_layer ? " (leaf layer diluted)" : "") << '\n';
        } else if (cmd_sweep->parsed()) {
            HarnessConfig cfg = load_config("", k, seed, b_text, threads);
            LoadedGraph loaded = load_graph(graph_path);
            std::string id = std::filesystem::path(graph_path).stem().string();
            auto pairs = sample_pairs(loaded.graph, cfg.k, cfg.seed);
            auto alphas = alphas_text.empty() ? std::vector<double>{0.0, 0.1, 0.5, 0.9}
                                              : parse_double_list(alphas_text);
            auto bs = bs_text.empty()
                          ? std::vector<Rational>{{1, 1}, {3, 2}, {2, 1}, {4, 1}}
                          : parse_rational_list(bs_text);
            auto rows = sensitivity_sweep(loaded.graph, id, pairs, alphas, bs);
            write_text(sweep_csv_text(rows), out_path);
        } else if (cmd_plot->parsed()) {
            std::ifstream in(in_csv);
            if (!in) throw InputError("cannot open " + in_csv);
            std::string header;
            if (!std::getline(in, header)) throw InputError("empty csv: " + in_csv);
            std::vector<std::string> cols;
            {
                std::stringstream ss(header);
                std::string tok;
                while (std::getline(ss, tok, ',')) cols.push_back(tok);
            }
            auto col_index = [&](const std::string& name) -> std::size_t {
                for (std::size_t i = 0; i < cols.size(); ++i)
                    if (cols[i] == name) return i;
                throw InputError("column '" + name + "' not in " + in_csv);
            };
            const std::size_t xi = col_index(x_col), yi = col_index(y_col);
            std::vector<ScatterPoint> points;
            std::string line;
            while (std::getline(in, line)) {
                std::stringstream ss(line);
                std::string tok;
                std::vector<std::string> fields;
                while (std::getline(ss, tok, ',')) fields.push_back(tok);
                if (fields.size() <= std::max(xi, yi)) continue;
                if (fields[xi].empty() || fields[yi].empty()) continue;
                points.push_back({std::stod(fields[xi]), std::stod(fields[yi])});
            }
            AxesConfig axes;
            axes.x_label = x_label.empty() ? x_col : x_label;
            axes.y_label = y_label.empty() ? y_col : y_label;
            axes.title = title;
            axes.diagonal = diagonal;
            axes.zero_line = zero_line;
            if (!bands_text.empty()) axes.x_markers = parse_double_list(bands_text);
            emit_scatter_svg(points, axes, out_path);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
