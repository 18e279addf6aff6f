#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

/// Undirected edge, stored with u < v.
struct Edge {
    std::uint32_t u{0};
    std::uint32_t v{0};

    friend bool operator==(Edge a, Edge b) = default;
    friend auto operator<=>(Edge a, Edge b) = default;
};

/**
 * Immutable simple graph: canonical sorted edge list plus adjacency in CSR
 * form. Edge indices (positions in the sorted list) are stable and are what
 * colorings attach to.
 */
class Graph {
public:
    Graph() = default;

    /// Canonicalizes (orients u < v, sorts) and validates: no loops, no
    /// duplicates, all endpoints below n.
    Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.v >= n_) throw std::invalid_argument("graph: vertex id out of range");
        }
        if (!std::is_sorted(edges_.begin(), edges_.end()))
            std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("graph: duplicate edge");
        build_adjacency();
    }

    static Graph complete(std::uint32_t n) {
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (std::uint32_t u = 0; u + 1 < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        check_vertex(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    std::uint32_t degree(std::uint32_t v) const {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        if (u == v) return false;
        auto nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Index of (u,v) in the canonical edge list, or -1 if absent.
    std::int64_t edge_index(std::uint32_t u, std::uint32_t v) const {
        if (u > v) std::swap(u, v);
        Edge probe{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
        if (it == edges_.end() || !(*it == probe)) return -1;
        return it - edges_.begin();
    }

    void check_vertex(std::uint32_t v) const {
        if (v >= n_) throw std::out_of_range("graph: vertex id out of range");
    }

private:
    void build_adjacency() {
        offsets_.assign(n_ + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (std::uint32_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
        adj_.resize(static_cast<std::size_t>(edges_.size()) * 2);
        std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (const auto& e : edges_) {
            adj_[cursor[e.u]++] = e.v;
            adj_[cursor[e.v]++] = e.u;
        }
        // edges_ is sorted, so each neighbor run comes out sorted as well for
        // the u side; the v side needs a pass.
        for (std::uint32_t v = 0; v < n_; ++v)
            std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
    }

    std::uint32_t n_{0};
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint32_t> adj_;
};

/// Color in {1..r} per edge index of an associated Graph.
struct EdgeColoring {
    int r{0};
    std::vector<std::uint16_t> colors;
};

inline void check_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.edge_count())
        throw std::invalid_argument("coloring: length does not match edge count");
    for (auto col : c.colors)
        if (col < 1 || col > c.r)
            throw std::invalid_argument("coloring: color out of range");
}

namespace detail {

/// Marks s in a fresh byte map of size n, ignoring duplicate ids.
inline std::vector<std::uint8_t> membership(const Graph& g, std::span<const std::uint32_t> s) {
    std::vector<std::uint8_t> in(g.vertex_count(), 0);
    for (auto v : s) {
        g.check_vertex(v);
        in[v] = 1;
    }
    return in;
}

}  // namespace detail

/// e_G(S): edges with both endpoints in S.
inline std::uint64_t count_edges_within(const Graph& g, std::span<const std::uint32_t> s) {
    auto in = detail::membership(g, s);
    std::uint64_t ordered = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        for (auto w : g.neighbors(v)) ordered += in[w];
    }
    return ordered / 2;
}

/// e_G(S,T): ordered pairs (s,t) in S x T with st an edge. e(S,S) = 2 e(S).
inline std::uint64_t count_ordered_between(const Graph& g, std::span<const std::uint32_t> s,
                                           std::span<const std::uint32_t> t) {
    auto in_s = detail::membership(g, s);
    auto in_t = detail::membership(g, t);
    std::uint64_t ordered = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (!in_s[v]) continue;
        for (auto w : g.neighbors(v)) ordered += in_t[w];
    }
    return ordered;
}

}  // namespace monocomp
