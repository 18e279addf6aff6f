#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "monocomp/graph.hpp"
#include "monocomp/rational.hpp"

namespace monocomp {

/// Union-find with path halving and union by size. Deterministic: ties
/// attach the larger vertex id under the smaller.
class DisjointSets {
public:
    explicit DisjointSets(std::uint32_t n = 0) { reset(n); }

    void reset(std::uint32_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        for (std::uint32_t v = 0; v < n; ++v) parent_[v] = v;
    }

    std::uint32_t find(std::uint32_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    /// Returns the surviving root; a == b roots are left untouched.
    std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b] || (size_[a] == size_[b] && a > b)) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    std::uint32_t component_size(std::uint32_t v) { return size_[find(v)]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

struct ComponentStats {
    std::uint32_t vertex_count{0};
    std::uint64_t edge_count{0};
    std::uint32_t min_vertex{0};
};

/// Orders components largest-first: more edges, then more vertices, then
/// smaller lowest vertex id.
inline bool component_before(const ComponentStats& a, const ComponentStats& b) {
    if (a.edge_count != b.edge_count) return a.edge_count > b.edge_count;
    if (a.vertex_count != b.vertex_count) return a.vertex_count > b.vertex_count;
    return a.min_vertex < b.min_vertex;
}

/**
 * Per-color connected component breakdown of an edge-colored graph.
 * Components contain at least one edge; isolated vertices are not listed.
 * z is the exact fraction of all edges lying in the single component with
 * the most edges.
 */
struct ComponentReport {
    int r{0};
    std::uint64_t total_edges{0};
    std::vector<std::vector<ComponentStats>> per_color;  // index color-1, sorted largest-first
    int largest_color{0};                                // 0 when the graph has no edges
    ComponentStats largest{};
    Rational z{0, 1};

    /// Most vertices in any monochromatic component, across all colors.
    std::uint32_t max_component_vertices() const {
        std::uint32_t best = 0;
        for (const auto& comps : per_color)
            for (const auto& c : comps) best = std::max(best, c.vertex_count);
        return best;
    }

    std::uint64_t component_count() const {
        std::uint64_t total = 0;
        for (const auto& comps : per_color) total += comps.size();
        return total;
    }
};

/// Components of an uncolored graph: stats plus a root id per vertex.
struct ComponentDecomposition {
    std::vector<ComponentStats> components;     // sorted largest-first
    std::vector<std::uint32_t> component_of;    // per vertex, index into components; UINT32_MAX if isolated
};

inline ComponentDecomposition connected_components(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    DisjointSets dsu(n);
    for (const auto& e : g.edges()) dsu.unite(e.u, e.v);

    std::vector<std::uint64_t> edge_count(n, 0);
    for (const auto& e : g.edges()) ++edge_count[dsu.find(e.u)];

    ComponentDecomposition out;
    out.component_of.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> comp_index(n, UINT32_MAX);
    std::vector<std::uint32_t> roots;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t root = dsu.find(v);
        if (edge_count[root] == 0) continue;  // isolated vertices are not components
        if (comp_index[root] == UINT32_MAX) {
            comp_index[root] = static_cast<std::uint32_t>(out.components.size());
            out.components.push_back({0, edge_count[root], v});
            roots.push_back(root);
        }
        out.components[comp_index[root]].vertex_count += 1;
        out.component_of[v] = comp_index[root];
    }
    // Re-sort largest-first and remap vertex labels accordingly.
    std::vector<std::uint32_t> order(out.components.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return component_before(out.components[a], out.components[b]);
    });
    std::vector<std::uint32_t> rank(order.size());
    std::vector<ComponentStats> sorted(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted[i] = out.components[order[i]];
    }
    out.components = std::move(sorted);
    for (auto& c : out.component_of)
        if (c != UINT32_MAX) c = rank[c];
    return out;
}

/// One union-find pass per color.
inline ComponentReport monochromatic_components(const Graph& g, const EdgeColoring& coloring) {
    check_coloring(g, coloring);
    const std::uint32_t n = g.vertex_count();
    ComponentReport report;
    report.r = coloring.r;
    report.total_edges = g.edge_count();
    report.per_color.resize(coloring.r);

    // Bucket edge indices by color so each pass only touches its own edges.
    std::vector<std::uint32_t> color_counts(coloring.r + 1, 0);
    for (auto c : coloring.colors) ++color_counts[c];
    std::vector<std::uint64_t> start(coloring.r + 2, 0);
    for (int c = 1; c <= coloring.r; ++c) start[c + 1] = start[c] + color_counts[c];
    std::vector<std::uint64_t> by_color(coloring.colors.size());
    {
        std::vector<std::uint64_t> cursor(start.begin() + 1, start.end());
        for (std::uint64_t i = 0; i < coloring.colors.size(); ++i)
            by_color[cursor[coloring.colors[i] - 1]++] = i;
    }

    DisjointSets dsu(n);
    std::vector<std::uint64_t> edges_at(n);
    std::vector<std::uint32_t> vertices_at(n);
    std::vector<std::uint32_t> min_at(n);
    std::vector<std::uint8_t> touched(n, 0);
    std::vector<std::uint32_t> touched_list;

    for (int c = 1; c <= coloring.r; ++c) {
        dsu.reset(n);
        touched_list.clear();
        for (std::uint64_t idx = start[c]; idx < start[c + 1]; ++idx) {
            const Edge& e = g.edges()[by_color[idx]];
            for (std::uint32_t v : {e.u, e.v})
                if (!touched[v]) {
                    touched[v] = 1;
                    touched_list.push_back(v);
                }
            dsu.unite(e.u, e.v);
        }
        for (auto v : touched_list) {
            edges_at[v] = 0;
            vertices_at[v] = 0;
            min_at[v] = UINT32_MAX;
        }
        for (std::uint64_t idx = start[c]; idx < start[c + 1]; ++idx) {
            const Edge& e = g.edges()[by_color[idx]];
            ++edges_at[dsu.find(e.u)];
        }
        for (auto v : touched_list) {
            std::uint32_t root = dsu.find(v);
            ++vertices_at[root];
            min_at[root] = std::min(min_at[root], v);
        }
        auto& comps = report.per_color[c - 1];
        for (auto v : touched_list) {
            touched[v] = 0;
            if (dsu.find(v) == v)
                comps.push_back({vertices_at[v], edges_at[v], min_at[v]});
        }
        std::sort(comps.begin(), comps.end(), component_before);
    }

    for (int c = 1; c <= coloring.r; ++c) {
        const auto& comps = report.per_color[c - 1];
        if (comps.empty()) continue;
        if (report.largest_color == 0 || component_before(comps.front(), report.largest)) {
            report.largest = comps.front();
            report.largest_color = c;
        }
    }
    if (report.total_edges > 0 && report.largest_color != 0)
        report.z = Rational(static_cast<long long>(report.largest.edge_count),
                            static_cast<long long>(report.total_edges));
    return report;
}

/// Allocation-light fast path: just the largest monochromatic component's
/// edge count. Used by the exhaustive and fuzzed coloring campaigns.
inline std::uint64_t max_mono_component_edges(const Graph& g,
                                              std::span<const std::uint16_t> colors, int r) {
    const std::uint32_t n = g.vertex_count();
    thread_local std::vector<std::uint32_t> parent;
    thread_local std::vector<std::uint64_t> comp_edges;
    std::uint64_t best = 0;
    for (int c = 1; c <= r; ++c) {
        parent.assign(n, UINT32_MAX);
        comp_edges.assign(n, 0);
        auto find = [&](std::uint32_t v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (std::uint64_t i = 0; i < colors.size(); ++i) {
            if (colors[i] != c) continue;
            const Edge& e = g.edges()[i];
            if (parent[e.u] == UINT32_MAX) parent[e.u] = e.u;
            if (parent[e.v] == UINT32_MAX) parent[e.v] = e.v;
            std::uint32_t a = find(e.u), b = find(e.v);
            std::uint64_t merged = comp_edges[a] + 1;
            if (a != b) {
                merged += comp_edges[b];
                parent[b] = a;
            }
            comp_edges[a] = merged;
            best = std::max(best, merged);
        }
    }
    return best;
}

}  // namespace monocomp
