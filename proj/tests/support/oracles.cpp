#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bidi::oracle {

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.n();
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
        dist[v][v] = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) dist[v][w] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i][k] >= inf) continue;
            for (std::size_t j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        }
    for (auto& row : dist)
        for (auto& v : row)
            if (v >= inf) v = -1;
    return dist;
}

LayerCostProfile profile_from_distance_matrix(const Graph& g,
                                              const std::vector<std::vector<int>>& dist,
                                              Vertex s, Vertex t) {
    if (s == t) throw std::invalid_argument("oracle profile: s == t");
    const int d = dist[s][t];
    LayerCostProfile p;
    p.d = d;
    p.m = g.m();
    p.cs.assign(static_cast<std::size_t>(d), 0);
    p.ct.assign(static_cast<std::size_t>(d), 0);
    p.layer_sizes_s.assign(static_cast<std::size_t>(d) + 1, 0);
    p.layer_sizes_t.assign(static_cast<std::size_t>(d) + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        const int ds = dist[s][v];
        const int dt = dist[t][v];
        if (ds >= 0 && ds <= d) p.layer_sizes_s[static_cast<std::size_t>(ds)] += 1;
        if (dt >= 0 && dt <= d) p.layer_sizes_t[static_cast<std::size_t>(dt)] += 1;
        // c_s(i) sums over l(s, i-1); c_t(i) over l(t, d-i)
        if (ds >= 0 && ds < d) p.cs[static_cast<std::size_t>(ds)] += g.degree(v);
        if (dt >= 0 && dt < d) p.ct[static_cast<std::size_t>(d - 1 - dt)] += g.degree(v);
    }
    return p;
}

namespace {

bool fits_budget(std::uint64_t c, double alpha, double ln_m) {
    return std::log(static_cast<double>(c)) <= alpha * ln_m * (1.0 + 1e-12);
}

bool seq_expanding_s(const LayerCostProfile& p, int i, int j, const Rational& b) {
    for (int k = i; k < j; ++k)
        if (p.cs_at(k + 1) * b.den < p.cs_at(k) * b.num) return false;
    return true;
}

bool seq_expanding_t(const LayerCostProfile& p, int i, int j, const Rational& b) {
    for (int k = i + 1; k <= j; ++k)
        if (p.ct_at(k - 1) * b.den < p.ct_at(k) * b.num) return false;
    return true;
}

}  // namespace

std::optional<int> naive_cheap_s(const LayerCostProfile& p, double alpha) {
    const double ln_m = std::log(static_cast<double>(p.m));
    std::optional<int> best;
    for (int j = 1; j <= p.d; ++j)
        if (fits_budget(p.cs_range(1, j), alpha, ln_m)) best = j;
    return best;
}

std::optional<int> naive_cheap_t(const LayerCostProfile& p, double alpha) {
    const double ln_m = std::log(static_cast<double>(p.m));
    std::optional<int> best;
    for (int j = p.d; j >= 1; --j)
        if (fits_budget(p.ct_range(j, p.d), alpha, ln_m)) best = j;
    return best;
}

int naive_expan_s(const LayerCostProfile& p, const Rational& b) {
    int best = 1;
    for (int j = 1; j <= p.d; ++j)
        if (seq_expanding_s(p, 1, j, b)) best = j;
    return best;
}

int naive_expan_t(const LayerCostProfile& p, const Rational& b) {
    int best = p.d;
    for (int j = p.d; j >= 1; --j)
        if (seq_expanding_t(p, j, p.d, b)) best = j;
    return best;
}

double naive_b_plus(const LayerCostProfile& p, const Rational& b) {
    double best = b.value();
    for (int k = 1; k < p.d; ++k) {
        best = std::max(best, static_cast<double>(p.cs_at(k + 1)) /
                                  static_cast<double>(p.cs_at(k)));
        best = std::max(best, static_cast<double>(p.ct_at(k)) /
                                  static_cast<double>(p.ct_at(k + 1)));
    }
    return best;
}

std::optional<double> naive_rho(const LayerCostProfile& p, double alpha, const Rational& b) {
    auto cs = naive_cheap_s(p, alpha);
    auto ctl = naive_cheap_t(p, alpha);
    if (!cs || !ctl) return std::nullopt;
    const int expan_s = naive_expan_s(p, b);
    const int expan_t = naive_expan_t(p, b);
    const int S1 = expan_s;
    const int S2 = *ctl - expan_s - 1;
    const int T1 = p.d - expan_t + 1;
    const int T2 = expan_t - *cs - 1;
    return static_cast<double>(std::max(S2, T2)) / static_cast<double>(std::min(S1, T1));
}

std::pair<std::uint64_t, int> naive_optimal_meeting(const LayerCostProfile& p) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    int best_k = 0;
    for (int k = 0; k <= p.d; ++k) {
        const std::uint64_t total = p.cs_range(1, k) + p.ct_range(k + 1, p.d);
        if (total < best) {
            best = total;
            best_k = k;
        }
    }
    return {best, best_k};
}

}  // namespace bidi::oracle
