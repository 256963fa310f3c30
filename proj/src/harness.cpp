#include "bidi/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "bidi/rng.hpp"

namespace fs = std::filesystem;

namespace bidi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_or_nan(double sum, int count) { return count > 0 ? sum / count : kNaN; }

std::string band_of(double exponent, const std::array<double, 2>& bands) {
    if (exponent < bands[0]) return "sublinear";
    if (exponent > bands[1]) return "linear";
    return "middle";
}

// Largest feasible breakpoint <= cap with d_alpha > 0; that is where the
// overlap fraction is most favorable without exceeding the cap.
void fraction_under_cap(const LayerCostProfile& profile, const Rational& b, double cap,
                        PairOutcome& out) {
    bool any_feasible = false;
    std::optional<ExpansionParams> best;
    for (double a : alpha_breakpoints(profile)) {
        if (a > cap) break;
        auto params = compute_params(profile, a, b);
        if (!params) continue;
        any_feasible = true;
        if (!params->covered) best = *params;
    }
    if (!any_feasible) {
        out.c_infeasible = true;
    } else if (!best) {
        out.c_covered = true;
    } else {
        out.c_params = best;
    }
}

}  // namespace

int resolve_thread_count(int configured) {
    if (configured <= 0) {
        if (const char* env = std::getenv("BIDI_THREADS")) configured = std::atoi(env);
    }
    if (configured <= 0) configured = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(configured, 1, 16);
}

HarnessConfig config_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    HarnessConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "k") {
            cfg.k = it.value().get<int>();
        } else if (key == "seed") {
            cfg.seed = it.value().get<std::uint64_t>();
        } else if (key == "b") {
            if (it.value().is_string())
                cfg.b = Rational::parse(it.value().get<std::string>());
            else
                cfg.b = Rational::parse(nlohmann::json(it.value()).dump());
        } else if (key == "bands") {
            auto v = it.value().get<std::vector<double>>();
            if (v.size() != 2) throw std::runtime_error("config: bands needs two values");
            cfg.bands = {v[0], v[1]};
        } else if (key == "c_alpha_cap") {
            cfg.c_alpha_cap = it.value().get<double>();
        } else if (key == "threads") {
            cfg.threads = it.value().get<int>();
        } else if (key == "resume") {
            cfg.resume = it.value().get<bool>();
        } else if (key == "alpha_policy") {
            const auto& p = it.value();
            if (p.is_string()) {
                if (p.get<std::string>() != "breakpoints")
                    throw std::runtime_error("config: unknown alpha_policy");
                cfg.policy = AlphaPolicy::breakpoints;
            } else if (p.contains("fixed")) {
                cfg.policy = AlphaPolicy::fixed;
                cfg.fixed_alphas = p["fixed"].get<std::vector<double>>();
            } else if (p.contains("optimize")) {
                cfg.policy = AlphaPolicy::optimize;
                std::string obj = p["optimize"].get<std::string>();
                if (obj == "min_exponent")
                    cfg.optimize_objective = AlphaObjective::min_exponent;
                else if (obj == "min_rho_gap")
                    cfg.optimize_objective = AlphaObjective::min_rho_gap;
                else
                    throw std::runtime_error("config: unknown optimize objective " + obj);
            } else {
                throw std::runtime_error("config: malformed alpha_policy");
            }
        } else {
            throw std::runtime_error("config: unknown key " + key);
        }
    }
    return cfg;
}

HarnessConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(const Graph& g, int k,
                                                    std::uint64_t seed) {
    if (g.n() < 2) throw std::invalid_argument("sample_pairs: need n >= 2");
    if (k < 1) throw std::invalid_argument("sample_pairs: need k >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    while (pairs.size() < static_cast<std::size_t>(k)) {
        auto s = static_cast<Vertex>(rng.below(g.n()));
        auto t = static_cast<Vertex>(rng.below(g.n()));
        if (s == t) continue;  // ordered pairs with replacement, s != t
        pairs.emplace_back(s, t);
    }
    return pairs;
}

std::pair<std::uint64_t, BidiResult> measure_pair(const Graph& g, Vertex s, Vertex t) {
    if (s == t) throw std::invalid_argument("measure_pair: s == t");
    BidiResult r = bidirectional_bfs(g, s, t, balanced_strategy());
    return {r.cost, std::move(r)};
}

namespace {

PairOutcome analyze_pair(const Graph& g, int idx, Vertex s, Vertex t,
                         const HarnessConfig& config) {
    PairOutcome out;
    out.idx = idx;
    out.s = s;
    out.t = t;
    out.result = bidirectional_bfs(g, s, t, balanced_strategy());

    LayerCostProfile profile = layer_cost_profile(g, s, t);
    fraction_under_cap(profile, config.b, config.c_alpha_cap, out);
    out.exp_choice = optimize_alpha(profile, config.b, AlphaObjective::min_exponent);
    out.gap_choice = optimize_alpha(profile, config.b, AlphaObjective::min_rho_gap);

    switch (config.policy) {
        case AlphaPolicy::fixed:
            for (double a : config.fixed_alphas)
                if (a >= 0 && a < 1)
                    if (auto p = compute_params(profile, a, config.b))
                        out.recorded.push_back(*p);
            break;
        case AlphaPolicy::breakpoints:
            for (double a : alpha_breakpoints(profile))
                if (auto p = compute_params(profile, a, config.b))
                    out.recorded.push_back(*p);
            break;
        case AlphaPolicy::optimize:
            if (auto choice = optimize_alpha(profile, config.b, config.optimize_objective))
                out.recorded.push_back(choice->params);
            break;
    }
    return out;
}

}  // namespace

GraphReport analyze_graph(const Graph& g, const GraphMeta& meta, const std::string& graph_id,
                          const HarnessConfig& config, std::vector<PairOutcome>* pairs_out) {
    if (config.k < 1) throw std::invalid_argument("analyze_graph: k must be >= 1");
    auto pairs = sample_pairs(g, config.k, config.seed);

    std::vector<PairOutcome> outcomes(pairs.size());
    const int workers = resolve_thread_count(config.threads);
    if (workers == 1 || pairs.size() < 4) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            outcomes[i] =
                analyze_pair(g, static_cast<int>(i), pairs[i].first, pairs[i].second, config);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= pairs.size()) return;
                outcomes[i] = analyze_pair(g, static_cast<int>(i), pairs[i].first,
                                           pairs[i].second, config);
            }
        };
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    GraphReport rep;
    rep.graph_id = graph_id;
    rep.meta = meta;
    rep.k = config.k;

    double cost_sum = 0;
    double c_sum = 0, pred_thm_sum = 0, pred_exp_sum = 0, gap_sum = 0;
    for (const auto& out : outcomes) {
        cost_sum += static_cast<double>(out.result.cost);
        if (out.c_params && out.c_params->c_rel) {
            c_sum += *out.c_params->c_rel;
            ++rep.c_defined;
        } else if (out.c_covered) {
            ++rep.c_covered;
        } else {
            ++rep.c_infeasible;
        }
        if (out.exp_choice) {
            pred_thm_sum += out.exp_choice->params.predicted_exponent_thm;
            pred_exp_sum += out.exp_choice->params.predicted_exponent_exp;
            ++rep.pred_defined;
        }
        if (out.gap_choice) ++rep.feasible_pairs;
        if (out.gap_choice) {
            gap_sum += out.gap_choice->params.delta_rho;
            ++rep.gap_defined;
        }
    }

    rep.c_hat = cost_sum / static_cast<double>(outcomes.size());
    rep.estimated_exponent =
        g.m() > 1 ? std::log(rep.c_hat) / std::log(static_cast<double>(g.m())) : kNaN;
    rep.mean_c_rel = mean_or_nan(c_sum, rep.c_defined);
    rep.mean_predicted_exponent_thm = mean_or_nan(pred_thm_sum, rep.pred_defined);
    rep.mean_predicted_exponent_exp = mean_or_nan(pred_exp_sum, rep.pred_defined);
    rep.mean_delta_rho = mean_or_nan(gap_sum, rep.gap_defined);
    rep.band = band_of(rep.estimated_exponent, config.bands);

    if (pairs_out) *pairs_out = std::move(outcomes);
    return rep;
}

ReportRow to_report_row(const GraphReport& r) {
    ReportRow row;
    row.graph_id = r.graph_id;
    row.n = r.meta.n;
    row.m = r.meta.m;
    row.k = r.k;
    row.c_hat = r.c_hat;
    row.estimated_exponent = r.estimated_exponent;
    row.mean_c_rel = r.mean_c_rel;
    row.mean_predicted_exponent_thm = r.mean_predicted_exponent_thm;
    row.mean_predicted_exponent_exp = r.mean_predicted_exponent_exp;
    row.mean_delta_rho = r.mean_delta_rho;
    row.band = r.band;
    return row;
}

std::string pairs_csv_header() {
    return "graph_id,idx,s,t,d,cost,c_alpha,c_rel,exp_alpha,predicted_exponent_thm,"
           "predicted_exponent_exp,gap_alpha,rho,rho_max,delta_rho,feasible,covered";
}

std::string pairs_csv_row(const std::string& graph_id, const PairOutcome& out) {
    std::string row = graph_id + "," + std::to_string(out.idx);
    row += "," + std::to_string(out.s) + "," + std::to_string(out.t);
    row += "," + std::to_string(out.result.distance) + "," + std::to_string(out.result.cost);
    if (out.c_params && out.c_params->c_rel) {
        row += "," + csv_double(out.c_params->alpha) + "," + csv_double(*out.c_params->c_rel);
    } else {
        row += ",,";
    }
    if (out.exp_choice) {
        row += "," + csv_double(out.exp_choice->alpha);
        row += "," + csv_double(out.exp_choice->params.predicted_exponent_thm);
        row += "," + csv_double(out.exp_choice->params.predicted_exponent_exp);
    } else {
        row += ",,,";
    }
    if (out.gap_choice) {
        row += "," + csv_double(out.gap_choice->alpha);
        row += "," + csv_double(out.gap_choice->params.rho);
        row += "," + csv_double(out.gap_choice->params.rho_max);
        row += "," + csv_double(out.gap_choice->params.delta_rho);
    } else {
        row += ",,,,";
    }
    row += std::string(",") + (out.gap_choice ? "1" : "0");
    row += std::string(",") + (out.c_covered ? "1" : "0");
    return row;
}

std::string report_to_json(const GraphReport& r) {
    nlohmann::json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.meta.n;
    j["m"] = r.meta.m;
    j["k"] = r.k;
    j["c_hat"] = r.c_hat;
    j["estimated_exponent"] = r.estimated_exponent;
    j["mean_c_rel"] = std::isfinite(r.mean_c_rel) ? nlohmann::json(r.mean_c_rel)
                                                  : nlohmann::json(nullptr);
    j["c_defined"] = r.c_defined;
    j["c_covered"] = r.c_covered;
    j["c_infeasible"] = r.c_infeasible;
    j["mean_predicted_exponent_thm"] = std::isfinite(r.mean_predicted_exponent_thm)
                                           ? nlohmann::json(r.mean_predicted_exponent_thm)
                                           : nlohmann::json(nullptr);
    j["mean_predicted_exponent_exp"] = std::isfinite(r.mean_predicted_exponent_exp)
                                           ? nlohmann::json(r.mean_predicted_exponent_exp)
                                           : nlohmann::json(nullptr);
    j["mean_delta_rho"] = std::isfinite(r.mean_delta_rho) ? nlohmann::json(r.mean_delta_rho)
                                                          : nlohmann::json(nullptr);
    j["feasible_pairs"] = r.feasible_pairs;
    j["band"] = r.band;
    return j.dump(2);
}

namespace {

std::map<std::string, std::vector<std::string>> lines_by_graph(const std::string& path) {
    std::map<std::string, std::vector<std::string>> grouped;
    std::ifstream in(path);
    if (!in) return grouped;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) { header = false; continue; }
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        grouped[line.substr(0, comma)].push_back(line);
    }
    return grouped;
}

}  // namespace

CorpusResult run_corpus(const std::string& corpus_dir, const HarnessConfig& config,
                        const std::string& out_dir) {
    fs::create_directories(out_dir);
    CorpusResult result;
    result.report_csv_path = (fs::path(out_dir) / "report.csv").string();
    result.pairs_csv_path = (fs::path(out_dir) / "pairs.csv").string();
    result.params_csv_path = (fs::path(out_dir) / "params.csv").string();
    result.summary_json_path = (fs::path(out_dir) / "summary.json").string();

    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".el" || ext == ".txt" || ext == ".edges") inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty()) throw std::runtime_error("run_corpus: no edge lists in " + corpus_dir);

    std::map<std::string, std::string> done_rows;
    std::map<std::string, std::vector<std::string>> done_pairs, done_params;
    if (config.resume) {
        for (auto& [id, lines] : lines_by_graph(result.report_csv_path))
            if (!lines.empty()) done_rows[id] = lines.front();
        done_pairs = lines_by_graph(result.pairs_csv_path);
        done_params = lines_by_graph(result.params_csv_path);
    }

    std::map<std::string, std::string> row_lines;
    std::map<std::string, std::vector<std::string>> pair_lines, param_lines;
    for (auto& [id, line] : done_rows) row_lines[id] = line;

    for (const auto& path : inputs) {
        const std::string graph_id = path.stem().string();
        if (config.resume && done_rows.count(graph_id)) {
            pair_lines[graph_id] = done_pairs[graph_id];
            param_lines[graph_id] = done_params[graph_id];
            continue;
        }
        try {
            LoadedGraph loaded = load_graph(path.string());
            std::vector<PairOutcome> outcomes;
            GraphReport rep =
                analyze_graph(loaded.graph, loaded.meta, graph_id, config, &outcomes);
            result.reports.push_back(rep);
            row_lines[graph_id] = report_csv_row(to_report_row(rep));
            auto& plines = pair_lines[graph_id];
            auto& qlines = param_lines[graph_id];
            for (const auto& out : outcomes) {
                plines.push_back(pairs_csv_row(graph_id, out));
                for (const auto& params : out.recorded)
                    qlines.push_back(graph_id + "," + std::to_string(out.idx) + "," +
                                     params_csv_row(params));
            }
        } catch (const std::exception& e) {
            result.skipped.push_back(graph_id + ": " + e.what());
        }
    }

    {
        std::ofstream out(result.report_csv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + result.report_csv_path);
        out << report_csv_header() << '\n';
        for (const auto& [id, line] : row_lines) out << line << '\n';
    }
    {
        std::ofstream out(result.pairs_csv_path, std::ios::binary);
        out << pairs_csv_header() << '\n';
        for (const auto& [id, lines] : pair_lines)
            for (const auto& line : lines) out << line << '\n';
    }
    {
        std::ofstream out(result.params_csv_path, std::ios::binary);
        out << "graph_id,idx," << params_csv_header() << '\n';
        for (const auto& [id, lines] : param_lines)
            for (const auto& line : lines) out << line << '\n';
    }

    // corpus summary over everything now in report.csv
    std::vector<double> ns;
    double n_sum = 0, avg_deg_sum = 0;
    std::map<std::string, int> band_counts{{"sublinear", 0}, {"middle", 0}, {"linear", 0}};
    int rows = 0;
    for (const auto& [id, line] : row_lines) {
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() < 11) continue;
        double n = std::stod(fields[1]), m = std::stod(fields[2]);
        ns.push_back(n);
        n_sum += n;
        avg_deg_sum += 2.0 * m / n;
        band_counts[fields[10]] += 1;
        ++rows;
    }
    std::sort(ns.begin(), ns.end());
    nlohmann::json summary;
    summary["graphs"] = rows;
    summary["pairs_per_graph"] = config.k;
    summary["seed"] = config.seed;
    summary["b"] = config.b.str();
    summary["sampling"] = "ordered-with-replacement";
    summary["bands"] = {config.bands[0], config.bands[1]};
    summary["band_counts"] = band_counts;
    summary["median_n"] = ns.empty() ? 0.0
                          : ns.size() % 2 ? ns[ns.size() / 2]
                                          : 0.5 * (ns[ns.size() / 2 - 1] + ns[ns.size() / 2]);
    summary["mean_n"] = rows ? n_sum / rows : 0.0;
    summary["mean_avg_degree"] = rows ? avg_deg_sum / rows : 0.0;
    summary["skipped"] = result.skipped;
    {
        std::ofstream out(result.summary_json_path, std::ios::binary);
        out << summary.dump(2) << '\n';
    }
    return result;
}

std::vector<SweepRow> sensitivity_sweep(const Graph& g, const std::string& graph_id,
                                        const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                        const std::vector<double>& alphas,
                                        const std::vector<Rational>& bs) {
    if (alphas.empty() || bs.empty())
        throw std::invalid_argument("sensitivity_sweep: empty parameter list");

    std::vector<LayerCostProfile> profiles;
    profiles.reserve(pairs.size());
    for (auto [s, t] : pairs) profiles.push_back(layer_cost_profile(g, s, t));

    std::vector<SweepRow> rows;
    for (const Rational& b : bs) {
        for (double alpha : alphas) {
            double c_sum = 0, gap_sum = 0;
            int c_count = 0, gap_count = 0;
            for (const auto& profile : profiles) {
                auto params = compute_params(profile, alpha, b);
                if (!params) continue;
                if (params->c_rel) {
                    c_sum += *params->c_rel;
                    ++c_count;
                }
                if (std::isfinite(params->delta_rho)) {
                    gap_sum += params->delta_rho;
                    ++gap_count;
                }
            }
            rows.push_back({graph_id, alpha, b, mean_or_nan(c_sum, c_count),
                            mean_or_nan(gap_sum, gap_count)});
        }
    }
    return rows;
}

std::string sweep_csv_text(const std::vector<SweepRow>& rows) {
    std::string text = "graph_id,alpha,b,mean_c_rel,mean_delta_rho\n";
    for (const auto& r : rows) {
        text += r.graph_id + "," + csv_double(r.alpha) + "," + r.b.str();
        text += "," + csv_double(r.mean_c_rel) + "," + csv_double(r.mean_delta_rho) + "\n";
    }
    return text;
}

}  // namespace bidi
