#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "monocomp/components.hpp"
#include "monocomp/random_graphs.hpp"

using namespace monocomp;

TEST_CASE("gnp edge cases are draw-free") {
    Graph empty = sample_gnp(20, 0.0, {1, 0});
    REQUIRE(empty.edge_count() == 0);
    Graph full = sample_gnp(20, 1.0, {1, 0});
    REQUIRE(full.edge_count() == 190);
    REQUIRE_THROWS_AS(sample_gnp(0, 0.5, {1, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_gnp(5, -0.1, {1, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_gnp(5, 1.5, {1, 0}), std::invalid_argument);
    Graph single = sample_gnp(1, 0.7, {1, 0});
    REQUIRE(single.vertex_count() == 1);
    REQUIRE(single.edge_count() == 0);
}

TEST_CASE("both gnp samplers emit the identical graph") {
    for (std::uint32_t n : {2u, 17u, 60u, 200u}) {
        for (double p : {0.001, 0.01, 0.05, 0.09, 0.1, 0.3, 0.5, 0.9, 0.99}) {
            for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
                INFO("n=" << n << " p=" << p << " seed=" << seed);
                Graph a = sample_gnp_perpair(n, p, {seed, 0});
                Graph b = sample_gnp_gaps(n, p, {seed, 0});
                REQUIRE(a.edge_count() == b.edge_count());
                REQUIRE(a.edges() == b.edges());
            }
        }
    }
}

TEST_CASE("gnp reproducibility and stream separation") {
    Graph a = sample_gnp(80, 0.25, {7, 0});
    Graph b = sample_gnp(80, 0.25, {7, 0});
    REQUIRE(a.edges() == b.edges());
    Graph c = sample_gnp(80, 0.25, {8, 0});
    Graph d = sample_gnp(80, 0.25, {7, 1});
    REQUIRE(a.edges() != c.edges());
    REQUIRE(a.edges() != d.edges());
}

TEST_CASE("gnp edge count concentrates where Chernoff says it must") {
    const std::uint32_t n = 200;
    const double p = 0.3;
    const double mu = p * (n * (n - 1) / 2.0);
    // With delta = 0.15 the two-sided tail is 2*exp(-44.775) ~ 7e-20; a
    // single excursion would be evidence of a broken generator, not bad luck.
    ChernoffBounds b = chernoff_tails({mu, 0.15});
    REQUIRE(b.two_sided_tail() < 1e-19);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        double e = static_cast<double>(sample_gnp(n, p, {seed, 0}).edge_count());
        REQUIRE(std::abs(e - mu) <= 0.15 * mu);
    }
}

TEST_CASE("chernoff empirical frequency stays below the bound") {
    const std::uint32_t n = 100;
    const double p = 0.3;
    const double delta = 0.2;
    const double mu = p * (n * (n - 1) / 2.0);
    ChernoffBounds b = chernoff_tails({mu, delta});
    std::uint64_t violations = 0;
    const std::uint64_t trials = 1000;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        double e = static_cast<double>(sample_gnp(n, p, {seed, 0}).edge_count());
        if (std::abs(e - mu) > delta * mu) ++violations;
    }
    // The bound itself allows less than one expected violation in 10^6 runs.
    REQUIRE(static_cast<double>(violations) <= b.two_sided_tail() * trials + 0.5);
    REQUIRE(violations == 0);
}

TEST_CASE("chernoff closed forms and domain") {
    ChernoffBounds b = chernoff_tails({100.0, 0.5});
    REQUIRE(b.upper == Catch::Approx(std::exp(-0.25 * 100.0 / 2.5)));
    REQUIRE(b.lower_tail() == Catch::Approx(std::exp(-0.25 * 100.0 / 2.0)));
    REQUIRE(b.two_sided_tail() == Catch::Approx(2.0 * std::exp(-0.25 * 100.0 / 3.0)));

    ChernoffBounds wide = chernoff_tails({100.0, 2.0});
    REQUIRE(wide.upper == Catch::Approx(std::exp(-4.0 * 100.0 / 4.0)));
    REQUIRE_FALSE(wide.lower.has_value());
    REQUIRE_THROWS_AS(wide.lower_tail(), std::domain_error);
    REQUIRE_THROWS_AS(wide.two_sided_tail(), std::domain_error);

    REQUIRE_THROWS_AS(chernoff_tails({-1.0, 0.5}), std::domain_error);
    REQUIRE_THROWS_AS(chernoff_tails({10.0, 0.0}), std::domain_error);
}

TEST_CASE("min degree graph hits the promised floor") {
    for (auto [n, beta] : {std::pair{20u, 0.0}, {20u, 0.3}, {21u, 0.3}, {50u, 1.0 / 25.0},
                           {300u, 0.1}, {33u, 0.9}}) {
        INFO("n=" << n << " beta=" << beta);
        Graph g = min_degree_graph(n, beta);
        const std::uint32_t d = static_cast<std::uint32_t>(std::floor(beta * n));
        std::uint32_t min_deg = n;
        for (std::uint32_t v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
        REQUIRE(min_deg >= n - 1 - d);
        // The construction is vertex-transitive up to rotation: regular.
        for (std::uint32_t v = 0; v < n; ++v) REQUIRE(g.degree(v) == g.degree(0));
    }
    REQUIRE(min_degree_graph(12, 0.0).edge_count() == 66);  // beta 0 keeps K_n
    REQUIRE_THROWS_AS(min_degree_graph(10, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(min_degree_graph(10, -0.1), std::invalid_argument);
}

TEST_CASE("min degree graph removes exactly the circulant") {
    // n even, d odd exercises the antipodal matching.
    const std::uint32_t n = 12;
    const double beta = 0.26;  // d = floor(3.12) = 3
    Graph g = min_degree_graph(n, beta);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::uint32_t step = j - i;
            std::uint32_t dist = std::min(step, n - step);
            bool removed = dist <= 1 || step == 6;  // h = 1, antipodal pairs
            REQUIRE(g.has_edge(i, j) == !removed);
        }
    REQUIRE(g.degree(0) == n - 1 - 3);
}

TEST_CASE("random part structure is a valid partition") {
    std::set<std::uint32_t> block_counts;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        PartStructure p = random_part_structure(30, 6, {seed, 0});
        REQUIRE(p.vertex_count() == 30);
        REQUIRE(p.block_count() >= 2);
        REQUIRE(p.block_count() <= 6);
        for (auto s : p.block_sizes()) REQUIRE(s > 0);
        block_counts.insert(p.block_count());
    }
    REQUIRE(block_counts.size() > 1);  // the block count actually varies
    REQUIRE_THROWS_AS(random_part_structure(10, 1, {0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(random_part_structure(10, 11, {0, 0}), std::invalid_argument);

    PartStructure a = random_part_structure(30, 6, {3, 5});
    PartStructure b = random_part_structure(30, 6, {3, 5});
    for (std::uint32_t v = 0; v < 30; ++v) REQUIRE(a.block_of(v) == b.block_of(v));
}

TEST_CASE("random subset density endpoints and reproducibility") {
    REQUIRE(random_subset(40, 0.0, {1, 0}).empty());
    REQUIRE(random_subset(40, 1.0, {1, 0}).size() == 40);
    auto s1 = random_subset(40, 0.5, {2, 9});
    auto s2 = random_subset(40, 0.5, {2, 9});
    REQUIRE(s1 == s2);
    REQUIRE_THROWS_AS(random_subset(10, 1.0001, {0, 0}), std::invalid_argument);

    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        total += random_subset(100, 0.3, {seed, 0}).size();
    REQUIRE(total > 1000);  // 50 draws of mean 30
    REQUIRE(total < 2000);
}

TEST_CASE("huge sparse sample stays connected-ish and fast") {
    // The gap sampler must handle n where n^2/2 pairs vastly exceed the
    // emitted edges. Expected edges ~= 10^5 * 12 / 2 = 6*10^5.
    const std::uint32_t n = 100000;
    const double p = 12.0 / n;
    Graph g = sample_gnp(n, p, {5, 0});
    const double mu = p * (static_cast<double>(n) * (n - 1) / 2.0);
    REQUIRE(std::abs(static_cast<double>(g.edge_count()) - mu) < 0.05 * mu);
    ComponentDecomposition cd = connected_components(g);
    // Far above the connectivity threshold ln(n)/n, the giant component
    // dominates.
    REQUIRE(cd.components.front().vertex_count > static_cast<std::uint32_t>(0.99 * n));
}
