#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocomp/components.hpp"
#include "monocomp/graph.hpp"
#include "monocomp/graph_io.hpp"
#include "monocomp/gyarfas.hpp"
#include "monocomp/rational.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& required, std::uint64_t budget)
        : std::runtime_error("brute force requires " + required + " evaluations, budget is " +
                             std::to_string(budget)) {}
};

/// Minimization target: largest monochromatic component edge count,
/// ties broken by the descending vector of all component edge counts
/// compared lexicographically.
struct Objective {
    std::uint64_t max_edges{0};
    std::vector<std::uint64_t> component_edges_desc;

    friend bool operator==(const Objective&, const Objective&) = default;
    friend bool operator<(const Objective& a, const Objective& b) {
        if (a.max_edges != b.max_edges) return a.max_edges < b.max_edges;
        return std::lexicographical_compare(a.component_edges_desc.begin(),
                                            a.component_edges_desc.end(),
                                            b.component_edges_desc.begin(),
                                            b.component_edges_desc.end());
    }
};

inline Objective objective(const Graph& g, const EdgeColoring& coloring) {
    ComponentReport report = monochromatic_components(g, coloring);
    Objective obj;
    for (const auto& comps : report.per_color)
        for (const auto& c : comps) obj.component_edges_desc.push_back(c.edge_count);
    std::sort(obj.component_edges_desc.begin(), obj.component_edges_desc.end(),
              std::greater<>());
    obj.max_edges = obj.component_edges_desc.empty() ? 0 : obj.component_edges_desc.front();
    return obj;
}

namespace detail {

/// Any complete-graph coloring beating the proven lower bound would
/// disprove a theorem; preserve it and fail loudly instead of returning.
inline void guard_complete_counterexample(const Graph& g, const EdgeColoring& coloring,
                                          std::uint64_t max_edges) {
    const std::uint64_t n = g.vertex_count();
    if (g.edge_count() != n * (n - 1) / 2 || g.edge_count() == 0) return;
    const long long r = coloring.r;
    // max_edges / e(G) < 4 / (4r² − 4r + 5) ?
    if (static_cast<__int128>(max_edges) * (4 * r * r - 4 * r + 5) <
        static_cast<__int128>(4) * g.edge_count()) {
        std::string path = "monocomp_counterexample_n" + std::to_string(n) + "_r" +
                           std::to_string(coloring.r) + ".txt";
        std::ofstream out(path);
        write_colored_graph(out, g, &coloring);
        throw std::logic_error("complete-graph coloring with largest component " +
                               std::to_string(max_edges) + "/" + std::to_string(g.edge_count()) +
                               " beats the proven bound; saved to " + path);
    }
}

/// Union-find over component edge counts whose operations can be undone
/// in LIFO order. No path compression, so parents never silently change.
class RollbackDsu {
public:
    explicit RollbackDsu(std::uint32_t n) : parent_(n), size_(n, 1), comp_edges_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    /// Adds one edge; returns the resulting component's edge count.
    std::uint64_t add_edge(std::uint32_t u, std::uint32_t v) {
        std::uint32_t a = find(u), b = find(v);
        if (a == b) {
            journal_.push_back({a, a});
            return ++comp_edges_[a];
        }
        if (size_[a] < size_[b] || (size_[a] == size_[b] && a > b)) std::swap(a, b);
        journal_.push_back({a, b});
        parent_[b] = a;
        size_[a] += size_[b];
        comp_edges_[a] += comp_edges_[b] + 1;
        return comp_edges_[a];
    }

    void undo_edge() {
        auto [a, b] = journal_.back();
        journal_.pop_back();
        if (a == b) {
            --comp_edges_[a];
            return;
        }
        parent_[b] = b;
        size_[a] -= size_[b];
        comp_edges_[a] -= comp_edges_[b] + 1;
    }

    std::uint64_t component_edges(std::uint32_t v) const { return comp_edges_[find(v)]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint64_t> comp_edges_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> journal_;
};

}  // namespace detail

struct BruteForceResult {
    Objective objective;
    EdgeColoring coloring;
    std::uint64_t evaluations{0};  // leaf colorings reached
};

/**
 * Exact minimum over all r-colorings, with the first edge's color fixed
 * to 1 (color permutations preserve the objective). Subtrees whose
 * running largest component already exceeds the incumbent are pruned —
 * sound because adding edges never shrinks any component.
 */
inline BruteForceResult brute_force_optimum(const Graph& g, int r, std::uint64_t budget) {
    if (r < 2) throw std::invalid_argument("brute force requires r >= 2");
    const std::uint64_t m = g.edge_count();
    if (m == 0) return {Objective{}, EdgeColoring{r, {}}, 1};

    std::uint64_t required = 1;
    for (std::uint64_t i = 0; i + 1 < m; ++i) {
        if (required > budget / static_cast<std::uint64_t>(r))
            throw BudgetExceeded("more than " + std::to_string(required) + "*" +
                                 std::to_string(r), budget);
        required *= static_cast<std::uint64_t>(r);
    }
    if (required > budget) throw BudgetExceeded(std::to_string(required), budget);

    std::vector<detail::RollbackDsu> dsu(r + 1, detail::RollbackDsu(g.vertex_count()));
    std::vector<std::uint16_t> colors(m, 0);
    std::vector<std::uint64_t> max_at(m + 1, 0);  // running largest component by depth

    BruteForceResult best;
    best.objective.max_edges = UINT64_MAX;

    auto leaf_objective = [&]() {
        Objective obj;
        std::vector<std::uint8_t> seen(g.vertex_count());
        for (int c = 1; c <= r; ++c) {
            std::fill(seen.begin(), seen.end(), 0);
            for (std::uint64_t i = 0; i < m; ++i) {
                if (colors[i] != c) continue;
                std::uint32_t root = dsu[c].find(g.edges()[i].u);
                if (!seen[root]) {
                    seen[root] = 1;
                    obj.component_edges_desc.push_back(dsu[c].component_edges(root));
                }
            }
        }
        std::sort(obj.component_edges_desc.begin(), obj.component_edges_desc.end(),
                  std::greater<>());
        obj.max_edges = obj.component_edges_desc.empty() ? 0 : obj.component_edges_desc.front();
        return obj;
    };

    auto recurse = [&](auto&& self, std::uint64_t depth) -> void {
        if (depth == m) {
            ++best.evaluations;
            Objective obj = leaf_objective();
            if (obj < best.objective) {
                best.objective = obj;
                best.coloring = EdgeColoring{r, colors};
            }
            return;
        }
        const Edge& e = g.edges()[depth];
        const int first = 1, last = depth == 0 ? 1 : r;
        for (int c = first; c <= last; ++c) {
            std::uint64_t comp = dsu[c].add_edge(e.u, e.v);
            max_at[depth + 1] = std::max(max_at[depth], comp);
            colors[depth] = static_cast<std::uint16_t>(c);
            if (max_at[depth + 1] <= best.objective.max_edges) self(self, depth + 1);
            dsu[c].undo_edge();
        }
        colors[depth] = 0;
    };
    recurse(recurse, 0);

    detail::guard_complete_counterexample(g, best.coloring, best.objective.max_edges);
    return best;
}

struct SearchParams {
    std::uint64_t iterations{1000};
    std::uint32_t restarts{1};
    std::optional<double> initial_temperature;  // default 0.05 * e(G)
    double cooling{0.999};
    RngSeed seed{};
    enum class Init { random, gyarfas } init{Init::random};
};

struct TracePoint {
    std::uint32_t restart{0};
    std::uint64_t iteration{0};
    std::uint64_t max_edges{0};
};

struct SearchResult {
    EdgeColoring best;
    Objective best_objective;
    std::vector<TracePoint> trace;
    std::uint64_t evaluations{0};
};

/**
 * One coloring under single-edge recolor moves. A move is evaluated by
 * rebuilding only the two affected colors' union-find structures; every
 * other color's largest component is cached. propose() prices a move,
 * commit() applies the priced one.
 */
class AnnealState {
public:
    AnnealState(const Graph& g, EdgeColoring coloring)
        : g_(&g), coloring_(std::move(coloring)), by_color_(coloring_.r + 1),
          color_max_(coloring_.r + 1, 0), parent_(g.vertex_count()),
          size_(g.vertex_count()), comp_edges_(g.vertex_count()) {
        check_coloring(g, coloring_);
        for (std::uint64_t i = 0; i < coloring_.colors.size(); ++i)
            by_color_[coloring_.colors[i]].push_back(i);
        for (int c = 1; c <= coloring_.r; ++c) color_max_[c] = rebuild_color(c, UINT64_MAX, 0);
        primary_ = *std::max_element(color_max_.begin(), color_max_.end());
    }

    std::uint64_t primary() const { return primary_; }
    const EdgeColoring& coloring() const { return coloring_; }

    /// Largest component across all colors if `edge_idx` were recolored.
    std::uint64_t propose(std::uint64_t edge_idx, std::uint16_t new_color) {
        pending_edge_ = edge_idx;
        pending_color_ = new_color;
        const std::uint16_t old_color = coloring_.colors[edge_idx];
        pending_old_max_ = rebuild_color(old_color, edge_idx, 0);
        pending_new_max_ = rebuild_color(new_color, UINT64_MAX, edge_idx + 1);
        std::uint64_t best = std::max(pending_old_max_, pending_new_max_);
        for (int c = 1; c <= coloring_.r; ++c)
            if (c != old_color && c != new_color) best = std::max(best, color_max_[c]);
        return best;
    }

    /// Applies the move priced by the immediately preceding propose().
    void commit() {
        const std::uint16_t old_color = coloring_.colors[pending_edge_];
        auto& from = by_color_[old_color];
        *std::find(from.begin(), from.end(), pending_edge_) = from.back();
        from.pop_back();
        by_color_[pending_color_].push_back(pending_edge_);
        coloring_.colors[pending_edge_] = pending_color_;
        color_max_[old_color] = pending_old_max_;
        color_max_[pending_color_] = pending_new_max_;
        primary_ = *std::max_element(color_max_.begin(), color_max_.end());
    }

private:
    /// Largest component among this color's edges, skipping `skip_idx`
    /// and appending `extra_idx+1`'s edge when nonzero (1-based sentinel).
    std::uint64_t rebuild_color(std::uint16_t c, std::uint64_t skip_idx,
                                std::uint64_t extra_plus_one) {
        std::iota(parent_.begin(), parent_.end(), 0u);
        std::fill(size_.begin(), size_.end(), 1u);
        std::fill(comp_edges_.begin(), comp_edges_.end(), std::uint64_t{0});
        std::uint64_t best = 0;
        auto add = [&](std::uint64_t idx) {
            const Edge& e = g_->edges()[idx];
            std::uint32_t a = find(e.u), b = find(e.v);
            if (a != b) {
                if (size_[a] < size_[b]) std::swap(a, b);
                parent_[b] = a;
                size_[a] += size_[b];
                comp_edges_[a] += comp_edges_[b];
            }
            best = std::max(best, ++comp_edges_[a]);
        };
        for (auto idx : by_color_[c])
            if (idx != skip_idx) add(idx);
        if (extra_plus_one != 0) add(extra_plus_one - 1);
        return best;
    }

    std::uint32_t find(std::uint32_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    const Graph* g_;
    EdgeColoring coloring_;
    std::vector<std::vector<std::uint64_t>> by_color_;
    std::vector<std::uint64_t> color_max_;
    std::uint64_t primary_{0};
    std::vector<std::uint32_t> parent_, size_;
    std::vector<std::uint64_t> comp_edges_;
    std::uint64_t pending_edge_{0}, pending_old_max_{0}, pending_new_max_{0};
    std::uint16_t pending_color_{0};
};

inline EdgeColoring random_coloring(const Graph& g, int r, Rng& rng) {
    EdgeColoring c;
    c.r = r;
    c.colors.resize(g.edge_count());
    for (auto& col : c.colors)
        col = static_cast<std::uint16_t>(1 + rng.next_below(static_cast<std::uint64_t>(r)));
    return c;
}

/**
 * Simulated annealing over single-edge recolors: Metropolis acceptance
 * on the largest-component edge count with geometric cooling. Restarts
 * run as replicas on consecutive RNG streams; the winner is the replica
 * with the smallest (objective, stream) pair.
 */
inline SearchResult anneal(const Graph& g, int r, const SearchParams& params) {
    if (g.edge_count() == 0) throw std::invalid_argument("anneal requires e(G) >= 1");
    if (r < 2) throw std::invalid_argument("anneal requires r >= 2");
    if (params.iterations < 1) throw std::invalid_argument("anneal requires iterations >= 1");
    if (params.restarts < 1) throw std::invalid_argument("anneal requires restarts >= 1");
    if (!(params.cooling > 0.0) || !(params.cooling < 1.0))
        throw std::invalid_argument("cooling factor must lie in (0,1)");

    std::optional<GyarfasColoring> warm;
    if (params.init == SearchParams::Init::gyarfas)
        warm = gyarfas_coloring(g.vertex_count(), r);  // throws when invalid for this host

    const double t0 = params.initial_temperature
                          ? *params.initial_temperature
                          : 0.05 * static_cast<double>(g.edge_count());
    const std::uint64_t m = g.edge_count();

    SearchResult result;
    std::optional<Objective> best_obj;
    for (std::uint32_t rep = 0; rep < params.restarts; ++rep) {
        Rng rng({params.seed.seed, params.seed.stream + rep});
        EdgeColoring start = warm ? induced_coloring(*warm, g) : random_coloring(g, r, rng);
        AnnealState state(g, std::move(start));
        ++result.evaluations;

        std::uint64_t replica_best = state.primary();
        EdgeColoring replica_best_coloring = state.coloring();
        result.trace.push_back({rep, 0, replica_best});

        double temperature = t0;
        for (std::uint64_t it = 1; it <= params.iterations; ++it) {
            const std::uint64_t edge_idx = rng.next_below(m);
            const std::uint16_t cur = state.coloring().colors[edge_idx];
            std::uint64_t alt = rng.next_below(static_cast<std::uint64_t>(r - 1));
            std::uint16_t next = static_cast<std::uint16_t>(alt + 1 >= cur ? alt + 2 : alt + 1);

            const std::uint64_t candidate = state.propose(edge_idx, next);
            ++result.evaluations;
            bool accept = candidate <= state.primary();
            if (!accept) {
                double delta = static_cast<double>(candidate - state.primary());
                accept = rng.next_double() < std::exp(-delta / temperature);
            }
            if (accept) {
                state.commit();
                if (state.primary() < replica_best) {
                    replica_best = state.primary();
                    replica_best_coloring = state.coloring();
                    result.trace.push_back({rep, it, replica_best});
                }
            }
            temperature *= params.cooling;
        }

        Objective obj = objective(g, replica_best_coloring);
        if (!best_obj || obj < *best_obj) {  // earlier replica (smaller stream) wins ties
            best_obj = std::move(obj);
            result.best = std::move(replica_best_coloring);
        }
    }
    result.best_objective = *best_obj;
    detail::guard_complete_counterexample(g, result.best, result.best_objective.max_edges);
    return result;
}

}  // namespace monocomp
