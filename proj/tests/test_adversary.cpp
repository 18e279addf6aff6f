#include <catch2/catch_amalgamated.hpp>

#include "monocomp/random_graphs.hpp"
#include "monocomp/search.hpp"

using namespace monocomp;

TEST_CASE("objective ordering is primary then lexicographic") {
    Objective a{3, {3, 2, 1}};
    Objective b{3, {3, 3}};
    Objective c{4, {4}};
    REQUIRE(a < b);
    REQUIRE(a < c);
    REQUIRE(b < c);
    REQUIRE_FALSE(a < a);
    REQUIRE(a == a);
    // Shorter prefix loses nothing: lexicographic on the full vectors.
    Objective d{3, {3, 2}};
    REQUIRE(d < a);
}

TEST_CASE("objective matches the component report") {
    Graph k5 = Graph::complete(5);
    Rng rng({21, 0});
    for (int trial = 0; trial < 30; ++trial) {
        EdgeColoring col = random_coloring(k5, 3, rng);
        Objective obj = objective(k5, col);
        ComponentReport rep = monochromatic_components(k5, col);
        REQUIRE(obj.max_edges == rep.largest.edge_count);
        REQUIRE(obj.component_edges_desc.size() == rep.component_count());
        std::uint64_t sum = 0;
        for (auto e : obj.component_edges_desc) sum += e;
        REQUIRE(sum == k5.edge_count());
        REQUIRE(std::is_sorted(obj.component_edges_desc.begin(),
                               obj.component_edges_desc.end(), std::greater<>()));
    }
}

TEST_CASE("brute force oracle values on complete graphs") {
    BruteForceResult k4 = brute_force_optimum(Graph::complete(4), 2, 1u << 20);
    REQUIRE(k4.objective.max_edges == 3);
    check_coloring(Graph::complete(4), k4.coloring);
    REQUIRE(objective(Graph::complete(4), k4.coloring).max_edges == 3);

    BruteForceResult k5 = brute_force_optimum(Graph::complete(5), 2, 1u << 20);
    REQUIRE(k5.objective.max_edges == 5);

    BruteForceResult k6 = brute_force_optimum(Graph::complete(6), 2, 1u << 26);
    REQUIRE(k6.objective.max_edges >= 5);
    REQUIRE(objective(Graph::complete(6), k6.coloring) == k6.objective);
}

TEST_CASE("brute force on small hand graphs") {
    // A path of 3 edges splits into singletons under 2 colors.
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    BruteForceResult p = brute_force_optimum(path, 2, 1000);
    REQUIRE(p.objective.max_edges == 1);
    REQUIRE(p.objective.component_edges_desc == std::vector<std::uint64_t>{1, 1, 1});

    // A triangle cannot do better than one bichromatic split: any two of
    // its edges are adjacent, and under 2 colors some pair shares a color.
    Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    BruteForceResult t = brute_force_optimum(tri, 2, 1000);
    REQUIRE(t.objective.max_edges == 2);
    REQUIRE(t.objective.component_edges_desc == std::vector<std::uint64_t>{2, 1});

    // With 3 colors every triangle edge gets its own color.
    BruteForceResult t3 = brute_force_optimum(tri, 3, 1000);
    REQUIRE(t3.objective.max_edges == 1);
    REQUIRE(t3.objective.component_edges_desc == std::vector<std::uint64_t>{1, 1, 1});

    Graph empty(3, {});
    BruteForceResult e = brute_force_optimum(empty, 2, 10);
    REQUIRE(e.objective.max_edges == 0);
    REQUIRE(e.evaluations == 1);
}

TEST_CASE("brute force budget enforcement") {
    Graph k5 = Graph::complete(5);
    // 2^9 = 512 leaves needed (first edge fixed); 100 is too few.
    REQUIRE_THROWS_AS(brute_force_optimum(k5, 2, 100), BudgetExceeded);
    REQUIRE_THROWS_AS(brute_force_optimum(Graph::complete(8), 3, 1u << 30), BudgetExceeded);
    REQUIRE_THROWS_AS(brute_force_optimum(k5, 1, 1000), std::invalid_argument);
    // Overflow safety: colossal state spaces must throw, not wrap.
    REQUIRE_THROWS_AS(brute_force_optimum(Graph::complete(30), 4, UINT64_MAX), BudgetExceeded);
}

TEST_CASE("brute force evaluations respect pruning") {
    Graph k4 = Graph::complete(4);
    BruteForceResult res = brute_force_optimum(k4, 2, 1u << 20);
    // 2^5 = 32 leaves without pruning; the prune must not visit more.
    REQUIRE(res.evaluations <= 32);
    REQUIRE(res.evaluations > 0);
}

TEST_CASE("anneal state propose and commit track scratch objectives") {
    Rng master({99, 0});
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Graph g = sample_gnp(14, 0.5, {99, 10 + trial});
        if (g.edge_count() == 0) continue;
        const int r = 2 + static_cast<int>(master.next_below(3));
        Rng rng({99, 1000 + trial});
        EdgeColoring col = random_coloring(g, r, rng);
        AnnealState state(g, col);
        REQUIRE(state.primary() == objective(g, col).max_edges);

        for (int move = 0; move < 500; ++move) {
            std::uint64_t idx = rng.next_below(g.edge_count());
            std::uint16_t cur = state.coloring().colors[idx];
            std::uint64_t alt = rng.next_below(static_cast<std::uint64_t>(r - 1));
            std::uint16_t next = static_cast<std::uint16_t>(alt + 1 >= cur ? alt + 2 : alt + 1);

            EdgeColoring trial_col = state.coloring();
            trial_col.colors[idx] = next;
            std::uint64_t expect = objective(g, trial_col).max_edges;
            REQUIRE(state.propose(idx, next) == expect);

            if (move % 3 != 0) {  // mix committed and abandoned proposals
                state.commit();
                REQUIRE(state.primary() == expect);
                REQUIRE(state.coloring().colors[idx] == next);
            }
        }
        REQUIRE(state.primary() == objective(g, state.coloring()).max_edges);
    }
}

TEST_CASE("anneal matches the brute force optimum on small instances") {
    Rng master({55, 0});
    int checked = 0;
    for (std::uint64_t trial = 0; checked < 12; ++trial) {
        REQUIRE(trial < 200);
        std::uint32_t n = 5 + static_cast<std::uint32_t>(master.next_below(3));
        Graph g = sample_gnp(n, 0.55, {55, 100 + trial});
        const bool three = master.next_below(2) == 1;
        const int r = three ? 3 : 2;
        const std::uint64_t limit = three ? 9 : 14;
        if (g.edge_count() < 4 || g.edge_count() > limit) continue;
        ++checked;

        BruteForceResult exact = brute_force_optimum(g, r, 1ull << 30);
        SearchParams params;
        params.iterations = 1000;
        params.restarts = 10;
        params.seed = {trial, 0};
        SearchResult sr = anneal(g, r, params);
        INFO("n=" << n << " m=" << g.edge_count() << " r=" << r);
        REQUIRE(sr.best_objective.max_edges == exact.objective.max_edges);
    }
}

TEST_CASE("anneal on K_4 with r = 2 finds the optimum from any seed") {
    Graph k4 = Graph::complete(4);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull, 123456ull}) {
        SearchParams params;
        params.iterations = 1000;
        params.seed = {seed, 0};
        SearchResult res = anneal(k4, 2, params);
        REQUIRE(res.best_objective.max_edges == 3);
    }
}

TEST_CASE("anneal reproducibility and trace shape") {
    Graph g = sample_gnp(30, 0.4, {3, 0});
    SearchParams params;
    params.iterations = 2000;
    params.restarts = 3;
    params.seed = {42, 1};
    SearchResult a = anneal(g, 3, params);
    SearchResult b = anneal(g, 3, params);
    REQUIRE(a.best.colors == b.best.colors);
    REQUIRE(a.evaluations == b.evaluations);
    REQUIRE(a.trace.size() == b.trace.size());

    // One initial point per restart, then strictly improving values.
    std::uint64_t initial_points = 0;
    std::uint64_t last = UINT64_MAX;
    std::uint32_t last_restart = UINT32_MAX;
    for (const auto& tp : a.trace) {
        if (tp.iteration == 0) {
            ++initial_points;
            last = tp.max_edges;
            last_restart = tp.restart;
        } else {
            REQUIRE(tp.restart == last_restart);
            REQUIRE(tp.max_edges < last);
            last = tp.max_edges;
        }
    }
    REQUIRE(initial_points == params.restarts);
    REQUIRE(a.best_objective.max_edges <= a.trace.front().max_edges);
}

TEST_CASE("anneal gyarfas warm start and input validation") {
    Graph k9 = Graph::complete(9);
    SearchParams params;
    params.iterations = 50;
    params.init = SearchParams::Init::gyarfas;
    params.seed = {5, 0};
    SearchResult res = anneal(k9, 3, params);
    // No throw from the falsification guard means z >= 4/29, i.e. >= 5 edges.
    REQUIRE(res.best_objective.max_edges >= 5);

    REQUIRE_THROWS_AS(anneal(Graph(4, {}), 2, params), std::invalid_argument);
    SearchParams bad = params;
    bad.cooling = 1.0;
    REQUIRE_THROWS_AS(anneal(k9, 3, bad), std::invalid_argument);
    bad = params;
    bad.iterations = 0;
    REQUIRE_THROWS_AS(anneal(k9, 3, bad), std::invalid_argument);
    bad = params;
    bad.restarts = 0;
    REQUIRE_THROWS_AS(anneal(k9, 3, bad), std::invalid_argument);
    // Warm start demands a valid plane order for this r.
    REQUIRE_THROWS_AS(anneal(k9, 7, params), UnsupportedR);
}

TEST_CASE("search never beats the proven fraction on complete hosts") {
    // The counterexample guard would throw; reaching the assertions means
    // every anneal result stayed on the right side of the bound.
    for (std::uint32_t n : {6u, 9u, 12u}) {
        Graph g = Graph::complete(n);
        SearchParams params;
        params.iterations = 3000;
        params.restarts = 2;
        params.seed = {n, 0};
        SearchResult res = anneal(g, 3, params);
        Rational z(static_cast<long long>(res.best_objective.max_edges),
                   static_cast<long long>(g.edge_count()));
        REQUIRE(z >= Rational(4, 29));
    }
}
