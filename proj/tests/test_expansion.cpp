#include "doctest.h"

#include <cmath>
#include <vector>

#include "bidi/expansion.hpp"
#include "bidi/rng.hpp"
#include "bidi/search.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace bidi;

namespace {

const Rational kB2{2, 1};

LayerCostProfile make_profile(std::vector<std::uint64_t> cs, std::vector<std::uint64_t> ct,
                              std::uint64_t m) {
    LayerCostProfile p;
    p.d = static_cast<int>(cs.size());
    p.m = m;
    p.cs = std::move(cs);
    p.ct = std::move(ct);
    return p;
}

LayerCostProfile p5_profile() {
    Graph p5 = synth::path(5);
    return layer_cost_profile(p5, 0, 4);
}

}  // namespace

TEST_CASE("Rational parsing") {
    CHECK(Rational::parse("2") == Rational{2, 1});
    CHECK(Rational::parse("1.5") == Rational{3, 2});
    CHECK(Rational::parse("3/2") == Rational{3, 2});
    CHECK(Rational::parse("1.25").value() == doctest::Approx(1.25));
    CHECK(Rational::parse("4").str() == "4");
    CHECK(Rational::parse("1.5").str() == "3/2");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("3/0"));
}

TEST_CASE("compute_cheap at alpha = 0 on P5") {
    auto lm = compute_cheap(p5_profile(), 0.0);
    REQUIRE(lm.cheap_s.has_value());
    REQUIRE(lm.cheap_t.has_value());
    CHECK(*lm.cheap_s == 1);
    CHECK(*lm.cheap_t == 4);
    CHECK_THROWS(compute_cheap(p5_profile(), 1.0));
    CHECK_THROWS(compute_cheap(p5_profile(), -0.1));
}

TEST_CASE("compute_cheap covers the whole prefix when the budget allows") {
    // star-shaped profile with enough edges that m^alpha exceeds 1 + n
    auto p = make_profile({1, 5}, {5, 1}, 1000);
    auto lm = compute_cheap(p, 0.5);  // budget ~31.6
    CHECK(lm.cheap_s == 2);
    CHECK(lm.cheap_t == 1);
}

TEST_CASE("compute_cheap is undefined when the first step is too expensive") {
    auto p = make_profile({9, 18}, {18, 9}, 100);
    auto lm = compute_cheap(p, 0.1);  // budget ~1.58 < 9
    CHECK_FALSE(lm.cheap_s.has_value());
    CHECK_FALSE(lm.cheap_t.has_value());
}

TEST_CASE("cheap_s grows monotonically with alpha") {
    for (std::uint64_t seed = 3; seed < 7; ++seed) {
        Graph g = synth::random_connected(60, 80, seed);
        SplitMix64 rng(seed + 100);
        for (int trial = 0; trial < 10; ++trial) {
            auto s = static_cast<Vertex>(rng.below(g.n()));
            auto t = static_cast<Vertex>(rng.below(g.n()));
            if (s == t) continue;
            LayerCostProfile p = layer_cost_profile(g, s, t);
            std::optional<int> prev;
            for (double a = 0.0; a < 1.0; a += 0.07) {
                auto lm = compute_cheap(p, a);
                if (prev && lm.cheap_s) CHECK(*lm.cheap_s >= *prev);
                if (lm.cheap_s) prev = lm.cheap_s;
            }
        }
    }
}

TEST_CASE("compute_expan on the frozen examples") {
    auto pe = compute_expan(p5_profile(), kB2);
    CHECK(pe.expan_s == 2);
    CHECK(pe.expan_t == 3);

    auto star = make_profile({1, 9}, {9, 1}, 9);
    auto se = compute_expan(star, kB2);
    CHECK(se.expan_s == 2);
    CHECK(se.expan_t == 1);

    // constant costs: no growth anywhere
    auto flat = make_profile({4, 4, 4, 4, 4}, {4, 4, 4, 4, 4}, 40);
    auto fe = compute_expan(flat, kB2);
    CHECK(fe.expan_s == 1);
    CHECK(fe.expan_t == flat.d);

    // a cycle is flat except for the doubling first step, which mirrors
    Graph cyc = synth::cycle(12);
    LayerCostProfile cp = layer_cost_profile(cyc, 0, 6);
    auto ce = compute_expan(cp, kB2);
    CHECK(ce.expan_s == 2);
    CHECK(ce.expan_t == cp.d - 1);
    auto ce3 = compute_expan(cp, Rational{3, 1});
    CHECK(ce3.expan_s == 1);
    CHECK(ce3.expan_t == cp.d);
}

TEST_CASE("expan_s shrinks as b grows") {
    for (std::uint64_t seed = 11; seed < 15; ++seed) {
        Graph g = synth::gnm_connected(80, 240, seed);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 10; ++trial) {
            auto s = static_cast<Vertex>(rng.below(g.n()));
            auto t = static_cast<Vertex>(rng.below(g.n()));
            if (s == t) continue;
            LayerCostProfile p = layer_cost_profile(g, s, t);
            int prev_s = p.d + 1;
            int prev_t = 0;
            for (const Rational& b :
                 {Rational{1, 1}, Rational{3, 2}, Rational{2, 1}, Rational{4, 1}}) {
                auto lm = compute_expan(p, b);
                CHECK(lm.expan_s <= prev_s);
                CHECK(lm.expan_t >= prev_t);
                prev_s = lm.expan_s;
                prev_t = lm.expan_t;
            }
        }
    }
}

TEST_CASE("highest_expansion examples") {
    auto star10 = make_profile({1, 10}, {10, 1}, 10);
    CHECK(highest_expansion(star10, kB2) == doctest::Approx(10.0));
    CHECK(highest_expansion(p5_profile(), kB2) == doctest::Approx(2.0));
    auto flat = make_profile({4, 4, 4}, {4, 4, 4}, 20);
    CHECK(highest_expansion(flat, kB2) == doctest::Approx(2.0));  // clamped to b
    auto single = make_profile({3}, {3}, 3);
    CHECK(highest_expansion(single, kB2) == doctest::Approx(2.0));
}

TEST_CASE("compute_params on P5 at the alpha = 0 breakpoint") {
    auto params = compute_params(p5_profile(), 0.0, kB2);
    REQUIRE(params.has_value());
    CHECK(params->cheap_s == 1);
    CHECK(params->cheap_t == 4);
    CHECK(params->S1 == 2);
    CHECK(params->S2 == 1);
    CHECK(params->T1 == 2);
    CHECK(params->T2 == 1);
    CHECK(params->rho == doctest::Approx(0.5));
    CHECK(params->overlap == 0);
    CHECK(params->d_alpha == 2);
    // overlap identity from the proof
    CHECK(params->overlap == params->S1 - params->T2 - params->cheap_s);
    // dichotomy: rho_max(0) = 1 > 1/2
    CHECK(params->rho_max == doctest::Approx(1.0));
    CHECK(dichotomy_classify(*params) == Dichotomy::sublinear_guaranteed);
}

TEST_CASE("compute_params flags covered pairs") {
    auto p = make_profile({1, 5}, {5, 1}, 1000);
    auto params = compute_params(p, 0.5, kB2);
    REQUIRE(params.has_value());
    CHECK(params->covered);
    CHECK(params->d_alpha <= 0);
    CHECK_FALSE(params->c_rel.has_value());
    // infeasible alpha yields nullopt
    auto hard = make_profile({9, 18}, {18, 9}, 100);
    CHECK_FALSE(compute_params(hard, 0.1, kB2).has_value());
}

TEST_CASE("symmetric pairs have S1 = T1 and S2 = T2") {
    Graph p6 = synth::path(6);
    LayerCostProfile p = layer_cost_profile(p6, 0, 5);
    auto params = compute_params(p, 0.3, kB2);
    REQUIRE(params.has_value());
    CHECK(params->S1 == params->T1);
    CHECK(params->S2 == params->T2);
}

TEST_CASE("rho_max_threshold closed form") {
    CHECK(rho_max_threshold(0.0, 2.0, 8.0) == doctest::Approx(1.0));
    CHECK(rho_max_threshold(0.5, 2.0, 2.0) == doctest::Approx(0.5));
    CHECK(rho_max_threshold(0.1, 2.0, 8.0) == doctest::Approx(0.75));
    for (double alpha : {0.1, 0.4, 0.8})
        for (double bp : {2.0, 4.0, 16.0}) {
            double v = rho_max_threshold(alpha, 2.0, bp);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("overlap_cost_bound closed form and monotonicity") {
    CHECK(overlap_cost_bound(2.0, 1.0, 2) == doctest::Approx(64.0 * std::sqrt(2.0)));
    for (std::uint64_t m = 4; m < 1u << 20; m *= 4)
        CHECK(overlap_cost_bound(2.0, 1.0, m) < overlap_cost_bound(2.0, 1.0, 2 * m));
    // c = 2 leaves only the polylog factor
    CHECK(overlap_cost_bound(2.0, 2.0, 1 << 16) ==
          doctest::Approx(8.0 * std::log2(2.0 * (1 << 16)) * 4.0));
}

TEST_CASE("predicted exponents: both published forms") {
    // c = 1, alpha = 0, b_plus = b: eps = 1/2
    ExpansionParams direct;
    direct.alpha = 0.0;
    direct.b = kB2;
    direct.b_plus = 2.0;
    direct.c_rel = 1.0;
    auto forms = predicted_exponents(direct);
    REQUIRE(forms.has_value());
    CHECK(forms->bound_form == doctest::Approx(0.5));
    CHECK(forms->empirical_form == doctest::Approx(0.75));

    // and through compute_params: fully expanding profile, overlap = d = 4,
    // d_alpha = 2 at alpha = 0, so c = 2 and eps = 2/(1+2)
    auto p = make_profile({1, 2, 4, 8}, {8, 4, 2, 1}, 50);
    auto params = compute_params(p, 0.0, kB2);
    REQUIRE(params.has_value());
    REQUIRE(params->c_rel.has_value());
    CHECK(*params->c_rel == doctest::Approx(2.0));
    CHECK(params->predicted_exponent_thm == doctest::Approx(1.0 - 2.0 / 3.0));
    CHECK(params->predicted_exponent_exp == doctest::Approx(1.0 - 1.0 / 3.0));
}

TEST_CASE("predicted exponent limits: c -> 0 and alpha -> 1 give no speedup") {
    ExpansionParams p;
    p.alpha = 0.2;
    p.b = kB2;
    p.b_plus = 2.0;
    p.c_rel = 1e-12;
    auto near_zero_c = predicted_exponents(p);
    REQUIRE(near_zero_c.has_value());
    CHECK(near_zero_c->bound_form == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(near_zero_c->empirical_form == doctest::Approx(1.0).epsilon(1e-6));
    p.alpha = 1.0 - 1e-12;
    p.c_rel = 1.0;
    auto near_one_alpha = predicted_exponents(p);
    REQUIRE(near_one_alpha.has_value());
    CHECK(near_one_alpha->bound_form == doctest::Approx(1.0).epsilon(1e-6));
    p.c_rel = std::nullopt;
    CHECK_FALSE(predicted_exponents(p).has_value());
}

TEST_CASE("degree_bounded_exponent") {
    // deg_s = 1: delta = 0, same value as the bound form at alpha = 0
    CHECK(degree_bounded_exponent(1, 1, 100, 1.0, 2.0, 2.0) == doctest::Approx(0.5));
    CHECK(degree_bounded_exponent(100, 1, 100, 1.0, 2.0, 2.0) == doctest::Approx(1.0));
    CHECK(degree_bounded_exponent(100, 50, 10000, 1.0, 2.0, 2.0) == doctest::Approx(0.75));
    CHECK_THROWS(degree_bounded_exponent(5, 9, 100, 1.0, 2.0, 2.0));
    CHECK_THROWS(degree_bounded_exponent(101, 9, 100, 1.0, 2.0, 2.0));
    CHECK_THROWS(degree_bounded_exponent(5, 2, 100, 1.5, 2.0, 2.0));
}

TEST_CASE("alpha_breakpoints on star and P5") {
    auto star = make_profile({1, 9}, {9, 1}, 9);
    auto bp = alpha_breakpoints(star);
    REQUIRE(bp.size() == 1);
    CHECK(bp[0] == doctest::Approx(0.0));  // 1+n exceeds m, drops out of [0,1)

    auto p5 = alpha_breakpoints(p5_profile());
    REQUIRE(p5.size() == 2);
    CHECK(p5[0] == doctest::Approx(0.0));
    CHECK(p5[1] == doctest::Approx(std::log(3.0) / std::log(4.0)));
}

TEST_CASE("landmarks change exactly at breakpoints") {
    for (std::uint64_t seed = 31; seed < 35; ++seed) {
        Graph g = synth::random_connected(70, 100, seed);
        SplitMix64 rng(seed);
        auto s = static_cast<Vertex>(rng.below(g.n()));
        auto t = static_cast<Vertex>(rng.below(g.n()));
        if (s == t) continue;
        LayerCostProfile p = layer_cost_profile(g, s, t);
        auto bps = alpha_breakpoints(p);
        for (std::size_t i = 0; i < bps.size(); ++i) {
            const double at = bps[i];
            const double before =
                i == 0 ? at - 1e-9 : std::max(at - 1e-9, 0.5 * (at + bps[i - 1]));
            if (before < 0) continue;
            auto lm_at = compute_cheap(p, at);
            auto lm_before = compute_cheap(p, before);
            const bool differs = lm_at.cheap_s != lm_before.cheap_s ||
                                 lm_at.cheap_t != lm_before.cheap_t;
            CHECK(differs);
        }
    }
}

TEST_CASE("optimize_alpha does not simply take the largest alpha") {
    // Beyond the first breakpoint the cheap regions cover the full distance
    // and the exponent formula stops applying, so the minimizer stays at
    // alpha = 0 rather than chasing the largest budget.
    auto p = make_profile({1, 4, 16, 64}, {64, 16, 4, 1}, 100);
    auto choice = optimize_alpha(p, kB2, AlphaObjective::min_exponent);
    REQUIRE(choice.has_value());
    CHECK(choice->alpha == doctest::Approx(0.0));
    CHECK_FALSE(choice->params.covered);
    CHECK(choice->objective_value == doctest::Approx(0.75));  // c=2, b+=4
    auto bps = alpha_breakpoints(p);
    CHECK(bps.back() == doctest::Approx(std::log(85.0) / std::log(100.0)));
    CHECK(choice->alpha < bps.back());
    // an everywhere-covered profile yields no exponent prediction at all
    auto tiny = make_profile({1, 2}, {2, 1}, 40);
    auto none = optimize_alpha(tiny, kB2, AlphaObjective::min_exponent);
    CHECK_FALSE(none.has_value());
    CHECK(optimize_alpha(tiny, kB2, AlphaObjective::min_rho_gap).has_value());
}

TEST_CASE("optimize_alpha is deterministic and respects the cap") {
    Graph g = synth::gnm_connected(100, 400, 77);
    LayerCostProfile p = layer_cost_profile(g, 0, 50);
    auto a = optimize_alpha(p, kB2, AlphaObjective::min_rho_gap);
    auto b = optimize_alpha(p, kB2, AlphaObjective::min_rho_gap);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->alpha == b->alpha);
    CHECK(a->objective_value == b->objective_value);
    // a cap below the feasibility threshold leaves nothing
    auto capped = optimize_alpha(p, kB2, AlphaObjective::min_exponent, 1e-6);
    if (g.degree(0) > 1) CHECK_FALSE(capped.has_value());
}

TEST_CASE("single-breakpoint profiles return that breakpoint") {
    auto star = make_profile({1, 9}, {9, 1}, 9);
    auto choice = optimize_alpha(star, kB2, AlphaObjective::min_rho_gap);
    REQUIRE(choice.has_value());
    CHECK(choice->alpha == doctest::Approx(0.0));
}

TEST_CASE("dichotomy_classify edges") {
    ExpansionParams p;
    p.rho = 0.0;
    p.rho_max = 0.75;
    CHECK(dichotomy_classify(p) == Dichotomy::sublinear_guaranteed);
    p.rho = 0.75;  // boundary is strict
    CHECK(dichotomy_classify(p) == Dichotomy::no_guarantee);
}

TEST_CASE("expansion length and last-layer bounds hold on random graphs") {
    for (std::uint64_t seed = 41; seed < 46; ++seed) {
        Graph g = synth::random_connected(80, 160, seed);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 15; ++trial) {
            auto s = static_cast<Vertex>(rng.below(g.n()));
            auto t = static_cast<Vertex>(rng.below(g.n()));
            if (s == t) continue;
            LayerCostProfile p = layer_cost_profile(g, s, t);
            for (const Rational& b : {Rational{3, 2}, Rational{2, 1}, Rational{4, 1}}) {
                auto lm = compute_expan(p, b);
                const double bd = b.value();
                const double log_b_2m = std::log(2.0 * double(p.m)) / std::log(bd);
                // d <= log_b(2m)/c with c = expan_s/d, i.e. expan_s <= log_b(2m)
                CHECK(double(lm.expan_s) <= log_b_2m * (1 + 1e-9));
                // expanding prefix: last layer carries at least (b-1)/b
                for (int j = 1; j <= lm.expan_s; ++j)
                    CHECK(double(p.cs_at(j)) >=
                          (bd - 1.0) / bd * double(p.cs_range(1, j)) * (1 - 1e-9));
                for (double alpha : {0.05, 0.2, 0.5}) {
                    auto cheap = compute_cheap(p, alpha);
                    if (!cheap.cheap_s) continue;
                    if (*cheap.cheap_s <= lm.expan_s) {
                        const double budget_len =
                            alpha * std::log(double(p.m)) / std::log(bd) + 1.0;
                        CHECK(double(*cheap.cheap_s) <= budget_len * (1 + 1e-9));
                    }
                }
            }
        }
    }
}

TEST_CASE("analyzer landmarks match the naive oracle across breakpoints and bases") {
    for (std::uint64_t seed = 51; seed < 55; ++seed) {
        Graph g = synth::random_connected(50, 70, seed);
        auto dist = oracle::floyd_warshall(g);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 12; ++trial) {
            auto s = static_cast<Vertex>(rng.below(g.n()));
            auto t = static_cast<Vertex>(rng.below(g.n()));
            if (s == t) continue;
            LayerCostProfile p = layer_cost_profile(g, s, t);
            for (const Rational& b : {Rational{3, 2}, Rational{2, 1}, Rational{4, 1}}) {
                auto lm = compute_expan(p, b);
                CHECK(lm.expan_s == oracle::naive_expan_s(p, b));
                CHECK(lm.expan_t == oracle::naive_expan_t(p, b));
                CHECK(highest_expansion(p, b) == oracle::naive_b_plus(p, b));
                for (double alpha : alpha_breakpoints(p)) {
                    auto cheap = compute_cheap(p, alpha);
                    CHECK(cheap.cheap_s == oracle::naive_cheap_s(p, alpha));
                    CHECK(cheap.cheap_t == oracle::naive_cheap_t(p, alpha));
                    auto params = compute_params(p, alpha, b);
                    auto rho = oracle::naive_rho(p, alpha, b);
                    CHECK(params.has_value() == rho.has_value());
                    if (params && rho) CHECK(params->rho == *rho);
                }
            }
        }
    }
}

TEST_CASE("profile mirror symmetry: swapping s and t mirrors the landmarks") {
    Graph g = synth::random_connected(60, 90, 123);
    LayerCostProfile fwd = layer_cost_profile(g, 2, 47);
    LayerCostProfile rev = layer_cost_profile(g, 47, 2);
    auto a = compute_expan(fwd, kB2);
    auto b = compute_expan(rev, kB2);
    CHECK(a.expan_s == fwd.d - b.expan_t + 1);
    CHECK(a.expan_t == fwd.d - b.expan_s + 1);
    auto ca = compute_cheap(fwd, 0.4);
    auto cb = compute_cheap(rev, 0.4);
    REQUIRE(ca.cheap_s.has_value());
    REQUIRE(cb.cheap_t.has_value());
    CHECK(*ca.cheap_s == fwd.d - *cb.cheap_t + 1);
}

TEST_CASE("params serialization carries every field") {
    auto params = compute_params(p5_profile(), 0.0, kB2);
    REQUIRE(params.has_value());
    std::string json = params_to_json(*params);
    for (const char* key : {"alpha", "b_plus", "cheap_s", "cheap_t", "expan_s", "expan_t",
                            "overlap", "d_alpha", "S1", "S2", "T1", "T2", "rho", "rho_max",
                            "delta_rho", "c_rel", "eps", "predicted_exponent_thm",
                            "predicted_exponent_exp"})
        CHECK(json.find(key) != std::string::npos);
    std::string row = params_csv_row(*params);
    std::size_t commas = 0;
    for (char c : row) commas += c == ',';
    std::size_t header_commas = 0;
    for (char c : params_csv_header()) header_commas += c == ',';
    CHECK(commas == header_commas);
}
