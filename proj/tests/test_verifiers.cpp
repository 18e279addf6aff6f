#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "monocomp/checks.hpp"
#include "monocomp/gyarfas.hpp"
#include "monocomp/random_graphs.hpp"
#include "monocomp/search.hpp"

using namespace monocomp;

TEST_CASE("epsilon parameter validation") {
    EpsilonParams def;
    REQUIRE(def.eps == Rational(1, 2));
    REQUIRE(def.c == Rational(1, 20));
    REQUIRE(def.c0 == Rational(1, 5));
    REQUIRE(def.p == Rational(3, 10));
    REQUIRE_NOTHROW(validate_epsilon_params(def));

    EpsilonParams bad = def;
    bad.eps = Rational(1);
    REQUIRE_THROWS_AS(validate_epsilon_params(bad), std::invalid_argument);
    bad.eps = Rational(0);
    REQUIRE_THROWS_AS(validate_epsilon_params(bad), std::invalid_argument);
}

TEST_CASE("pair inequality on hand-checkable partitions") {
    // Two blocks of 3: M = K_{3,3}.
    PartStructure p(6, {0, 0, 0, 1, 1, 1});
    std::vector<std::uint32_t> s = {0, 1, 3};
    std::vector<std::uint32_t> t = {2, 4, 5};
    // e_M(S) = 2 (0-3, 1-3), e_M(T) = 2 (2-4, 2-5),
    // e_M(S,T) ordered = |S||T| - same-block pairs = 9 - (2*1 + 1*2) = 5.
    CheckOutcome out = check_pair_inequality(p, s, t);
    REQUIRE(out.lhs == Rational(25));
    REQUIRE(out.rhs == Rational(16));
    REQUIRE(out.margin == Rational(9));
    REQUIRE(out.holds);
    REQUIRE_FALSE(out.vacuous);

    // S = T collapses the inequality to equality: (2e)^2 = 4e^2.
    CheckOutcome eq = check_pair_inequality(p, s, s);
    REQUIRE(eq.margin == Rational(0));
    REQUIRE(eq.holds);
}

TEST_CASE("pair inequality holds across fuzzed partitions") {
    Rng rng({77, 0});
    Rational min_margin(1000000);
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.next_below(30));
        PartStructure parts = random_part_structure(n, std::min(n, 6u), {77, 1 + trial});
        auto s = random_subset(n, 0.5, {77, 100000 + trial});
        auto t = random_subset(n, 0.5, {77, 200000 + trial});
        CheckOutcome out = check_pair_inequality(parts, s, t);
        REQUIRE(out.holds);
        min_margin = std::min(min_margin, out.margin);
    }
    REQUIRE(min_margin >= Rational(0));
}

TEST_CASE("component density witness is the largest component") {
    PartStructure p(6, {0, 0, 0, 1, 1, 1});
    // H inside M = K_{3,3}: a path 0-3-1 (2 edges) and the edge 2-4.
    Graph h(6, {{0, 3}, {1, 3}, {2, 4}});
    CheckOutcome out = check_component_density(p, h);
    // e(M) = 9, e(H) = 3, largest component has 2 edges: 2*9 >= 9.
    REQUIRE(out.lhs == Rational(18));
    REQUIRE(out.rhs == Rational(9));
    REQUIRE(out.holds);
    REQUIRE(out.context.find("witness_edges=2") != std::string::npos);
}

TEST_CASE("component density rejections and vacuous case") {
    PartStructure p(4, {0, 0, 1, 1});
    REQUIRE_THROWS_AS(check_component_density(p, Graph(5, {})), std::invalid_argument);
    REQUIRE_THROWS_AS(check_component_density(p, Graph(4, {{0, 1}})), EdgeInsideBlock);

    CheckOutcome empty = check_component_density(p, Graph(4, {}));
    REQUIRE(empty.holds);
    REQUIRE(empty.vacuous);
    REQUIRE(empty.margin == Rational(0));
}

TEST_CASE("component density holds across fuzzed subgraphs") {
    Rng rng({78, 0});
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.next_below(25));
        PartStructure parts = random_part_structure(n, std::min(n, 5u), {78, 1 + trial});
        Graph m = materialize_multipartite(parts);
        std::vector<Edge> kept;
        for (const auto& e : m.edges())
            if (rng.next_below(4) != 0) kept.push_back(e);
        CheckOutcome out = check_component_density(parts, Graph(n, std::move(kept)));
        REQUIRE(out.holds);
    }
}

TEST_CASE("density control over a clique subset") {
    Graph g = Graph::complete(12);
    std::vector<std::uint32_t> all(12);
    std::iota(all.begin(), all.end(), 0u);
    // p = 1 makes mu = e(H) and the deviation 0 for the complete graph.
    CheckOutcome out = check_density_control(g, all, Rational(1), Rational(1, 5));
    REQUIRE(out.holds);
    REQUIRE(out.rhs == Rational(0));
    REQUIRE(out.lhs == Rational(66, 5));

    // A random host at its true p passes concentration at eps = 1/5.
    Graph gnp = sample_gnp(60, 0.5, {4, 0});
    std::vector<std::uint32_t> big(45);
    std::iota(big.begin(), big.end(), 0u);
    CheckOutcome conc = check_density_control(gnp, big, Rational(1, 2), Rational(1, 5));
    REQUIRE(conc.holds);

    // Subsets below the eps*C(n,2) edge mass are refused, not reported.
    std::vector<std::uint32_t> tiny = {0, 1, 2};
    REQUIRE_THROWS_AS(check_density_control(gnp, tiny, Rational(1, 2), Rational(1, 5)),
                      DensityPreconditionViolated);
    REQUIRE_THROWS_AS(check_density_control(gnp, big, Rational(0), Rational(1, 5)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(check_density_control(gnp, big, Rational(1, 2), Rational(1)),
                      std::invalid_argument);
}

TEST_CASE("density control over a multipartite split") {
    Graph gnp = sample_gnp(80, 0.4, {6, 0});
    PartStructure parts = random_part_structure(80, 4, {6, 1});
    CheckOutcome out = check_density_control(gnp, parts, Rational(2, 5), Rational(1, 5));
    REQUIRE(out.holds);
    REQUIRE(out.context.find("H=multipartite") != std::string::npos);

    std::vector<std::uint32_t> assign79(79, 0);
    for (std::size_t i = 40; i < 79; ++i) assign79[i] = 1;
    PartStructure mismatched(79, assign79);
    REQUIRE_THROWS_AS(check_density_control(gnp, mismatched, Rational(2, 5), Rational(1, 5)),
                      std::invalid_argument);
}

TEST_CASE("degree bound strictness, vacuity, and failure") {
    Graph g = Graph::complete(20);
    std::vector<std::uint32_t> s10(10);
    std::iota(s10.begin(), s10.end(), 0u);
    CheckOutcome ok = check_degree_bound(g, s10, Rational(1), Rational(1, 2), Rational(1, 5));
    REQUIRE(ok.holds);
    REQUIRE(ok.lhs == Rational(10));
    // rhs = 9 * (1/2) * 20 / 19
    REQUIRE(ok.rhs == Rational(90, 19));

    // Tiny p inflates the requirement beyond n: must fail.
    CheckOutcome fail =
        check_degree_bound(g, s10, Rational(1, 100), Rational(1, 2), Rational(1, 5));
    REQUIRE_FALSE(fail.holds);
    REQUIRE(fail.margin < Rational(0));

    // Exact equality fails because the bound is strict.
    Graph h(11, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    std::vector<std::uint32_t> s4 = {0, 1, 2, 3};
    CheckOutcome tie = check_degree_bound(h, s4, Rational(11, 32), Rational(1, 2), Rational(1, 5));
    REQUIRE(tie.lhs == Rational(4));
    REQUIRE(tie.rhs == Rational(4));
    REQUIRE(tie.margin == Rational(0));
    REQUIRE_FALSE(tie.holds);

    // An edgeless S sits below the degree floor: vacuous pass.
    Graph sparse(20, {{18, 19}});
    CheckOutcome vac =
        check_degree_bound(sparse, s10, Rational(1, 2), Rational(1, 2), Rational(1, 5));
    REQUIRE(vac.holds);
    REQUIRE(vac.vacuous);
    REQUIRE(vac.context.find("below_degree_floor") != std::string::npos);

    std::vector<std::uint32_t> empty;
    REQUIRE_THROWS_AS(check_degree_bound(g, empty, Rational(1, 2), Rational(1, 2), Rational(1, 5)),
                      std::invalid_argument);
}

TEST_CASE("sparse pair inequality and its precondition") {
    Graph g = sample_gnp(60, 0.3, {11, 0});
    PartStructure parts(60, [] {
        std::vector<std::uint32_t> v(60);
        for (std::size_t i = 0; i < 60; ++i) v[i] = static_cast<std::uint32_t>(i % 3);
        return v;
    }());
    std::vector<std::uint32_t> s, t;
    for (std::uint32_t v = 0; v < 30; ++v) s.push_back(v);
    for (std::uint32_t v = 20; v < 60; ++v) t.push_back(v);
    CheckOutcome out = check_sparse_pair_inequality(g, parts, s, t, Rational(3, 10),
                                                    Rational(1, 2), Rational(1, 20));
    REQUIRE(out.holds);
    REQUIRE(out.context.find("concentration=ok") != std::string::npos);

    // S, T too small for the c*n^2 mass requirement.
    std::vector<std::uint32_t> tiny = {0, 1};
    REQUIRE_THROWS_AS(check_sparse_pair_inequality(g, parts, tiny, tiny, Rational(3, 10),
                                                   Rational(1, 2), Rational(1, 20)),
                      PreconditionViolated);

    // An empty host fails concentration while the trivial pair half holds;
    // the reported sides must be the concentration pair.
    Graph none(60, {});
    CheckOutcome conc_fail = check_sparse_pair_inequality(none, parts, s, t, Rational(3, 10),
                                                          Rational(1, 2), Rational(1, 20));
    REQUIRE_FALSE(conc_fail.holds);
    REQUIRE(conc_fail.lhs == Rational(0));
    REQUIRE(conc_fail.rhs > Rational(0));
    REQUIRE(conc_fail.context.find("concentration=FAIL") != std::string::npos);
}

TEST_CASE("sparse component density preconditions fire by name") {
    // G' = K_{3,3} exactly.
    PartStructure parts(6, {0, 0, 0, 1, 1, 1});
    Graph g = materialize_multipartite(parts);

    CheckOutcome out = check_sparse_component_density(g, parts, g, Rational(1, 2), Rational(1, 5),
                                                      Rational(1, 5));
    REQUIRE(out.holds);
    // lhs = 9*9, rhs = (1/2)*81.
    REQUIRE(out.lhs == Rational(81));
    REQUIRE(out.rhs == Rational(81, 2));

    // (a) an oversized block: 5 of 6 vertices > (1-c1)n = 4.8.
    PartStructure lopsided(6, {0, 0, 0, 0, 0, 1});
    REQUIRE_THROWS_WITH(
        check_sparse_component_density(materialize_multipartite(lopsided), lopsided,
                                       Graph(6, {}), Rational(1, 2), Rational(1, 5),
                                       Rational(1, 5)),
        Catch::Matchers::ContainsSubstring("exceeds (1-c1)n"));

    // (b) H contains an edge missing from G'.
    Graph h_bad(6, {{0, 4}});
    Graph g_sparse(6, {{0, 3}, {1, 4}, {2, 5}});
    REQUIRE_THROWS_WITH(check_sparse_component_density(g_sparse, parts, h_bad, Rational(1, 2),
                                                       Rational(1, 5), Rational(1, 5)),
                        Catch::Matchers::ContainsSubstring("not an edge of G'"));

    // (c) H too thin relative to G'.
    Graph h_thin(6, {{0, 3}});
    REQUIRE_THROWS_WITH(check_sparse_component_density(g, parts, h_thin, Rational(1, 2),
                                                       Rational(1, 5), Rational(1, 2)),
                        Catch::Matchers::ContainsSubstring("below c2"));
}

TEST_CASE("verdict thresholds are the exact fractions") {
    Graph k10 = Graph::complete(10);
    GyarfasColoring gc = gyarfas_coloring(10, 3);
    VerdictContext ctx;
    ctx.r = 3;
    BoundVerdict v = verdict_bounds(k10, gc.coloring, ctx);
    REQUIRE(v.thresholds.at("conjectured_1_5") == Rational(1, 6));
    REQUIRE(v.thresholds.at("proven_1_6") == Rational(4, 29));
    REQUIRE(v.thresholds.at("vertex_gyarfas") == Rational(1, 2));
    REQUIRE(v.thresholds.at("vertex_bd") == Rational(1, 4));
    REQUIRE(v.thresholds.size() == 4);
    REQUIRE(v.pass.size() == 4);
    REQUIRE(v.all_pass());
    REQUIRE(v.z == Rational(11, 45));

    // Each pass entry must restate the comparison on the right basis.
    for (const auto& [name, threshold] : v.thresholds) {
        bool vertex_basis = name.rfind("vertex", 0) == 0;
        Rational achieved = vertex_basis ? v.max_vertex_fraction : v.z;
        REQUIRE(v.pass.at(name) == !(achieved < threshold));
    }
}

TEST_CASE("verdict minimum-degree thresholds") {
    Graph k12 = Graph::complete(12);
    GyarfasColoring gc3 = gyarfas_coloring(12, 3);

    VerdictContext ctx3;
    ctx3.r = 3;
    ctx3.beta = Rational(1, 25);
    BoundVerdict v3 = verdict_bounds(k12, gc3.coloring, ctx3);
    REQUIRE(v3.thresholds.at("mindeg_3color") == Rational(1, 6));

    ctx3.beta = Rational(1, 24);
    REQUIRE_THROWS_AS(verdict_bounds(k12, gc3.coloring, ctx3), Beta3ColorOutOfRange);

    GyarfasColoring gc4 = gyarfas_coloring(12, 4);
    VerdictContext ctx4;
    ctx4.r = 4;
    ctx4.beta = Rational(1, 10);
    BoundVerdict v4 = verdict_bounds(k12, gc4.coloring, ctx4);
    // (1-beta)^2 * 4/53 on C(n,2), which equals e(G) for a complete host.
    REQUIRE(v4.thresholds.at("mindeg_r4") == Rational(81, 100) * Rational(4, 53));
    REQUIRE_FALSE(v4.thresholds.count("mindeg_3color"));

    // On a strict subgraph the threshold is rebased from C(n,2) to e(G).
    Graph host = min_degree_graph(12, 0.1);  // d = 1: one matching removed
    EdgeColoring induced = induced_coloring(gc4, host);
    BoundVerdict v4s = verdict_bounds(host, induced, ctx4);
    Rational expect = Rational(81, 100) * Rational(4, 53) * Rational(66) /
                      Rational(static_cast<long long>(host.edge_count()));
    REQUIRE(v4s.thresholds.at("mindeg_r4") == expect);

    ctx4.beta = Rational(1);
    REQUIRE_THROWS_AS(verdict_bounds(k12, gc4.coloring, ctx4), std::invalid_argument);
}

TEST_CASE("verdict input rejection") {
    Graph k4 = Graph::complete(4);
    GyarfasColoring gc = gyarfas_coloring(4, 3);
    VerdictContext wrong;
    wrong.r = 4;
    REQUIRE_THROWS_AS(verdict_bounds(k4, gc.coloring, wrong), std::invalid_argument);

    VerdictContext low;
    low.r = 1;
    EdgeColoring c1{1, {1, 1, 1, 1, 1, 1}};
    REQUIRE_THROWS_AS(verdict_bounds(k4, c1, low), std::invalid_argument);

    Graph edgeless(5, {});
    EdgeColoring none{3, {}};
    VerdictContext ctx;
    ctx.r = 3;
    REQUIRE_THROWS_WITH(verdict_bounds(edgeless, none, ctx),
                        Catch::Matchers::ContainsSubstring("no edges"));
}

TEST_CASE("two-colored complete graphs have a spanning component") {
    Rng rng({13, 0});
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.next_below(10));
        Graph g = Graph::complete(n);
        EdgeColoring col = random_coloring(g, 2, rng);
        ComponentReport rep = monochromatic_components(g, col);
        REQUIRE(rep.max_component_vertices() == n);

        VerdictContext ctx;
        ctx.r = 2;
        BoundVerdict v = verdict_bounds(g, col, ctx);
        REQUIRE(v.max_vertex_fraction == Rational(1));
        REQUIRE(v.thresholds.at("vertex_gyarfas") == Rational(1));
        REQUIRE(v.pass.at("vertex_gyarfas"));
    }
}

TEST_CASE("random complete-graph colorings never beat the proven bound") {
    Rng rng({14, 0});
    for (int trial = 0; trial < 300; ++trial) {
        std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.next_below(9));
        int r = 2 + static_cast<int>(rng.next_below(3));
        Graph g = Graph::complete(n);
        EdgeColoring col = random_coloring(g, r, rng);
        VerdictContext ctx;
        ctx.r = r;
        BoundVerdict v = verdict_bounds(g, col, ctx);
        REQUIRE(v.pass.at("proven_1_6"));
    }
}
