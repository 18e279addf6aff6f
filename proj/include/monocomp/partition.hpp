#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "monocomp/graph.hpp"

namespace monocomp {

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Partition of {0..n-1} into k >= 2 nonempty blocks. Implicitly defines the
 * complete multipartite graph M whose edges join distinct blocks; the
 * counting helpers below work off the partition directly so M never has to
 * be materialized for large n.
 */
class PartStructure {
public:
    PartStructure(std::uint32_t n, std::vector<std::uint32_t> block_of)
        : n_(n), block_of_(std::move(block_of)) {
        if (block_of_.size() != n_) throw std::invalid_argument("partition: assignment size mismatch");
        std::uint32_t k = 0;
        for (auto b : block_of_) k = std::max(k, b + 1);
        if (k < 2) throw std::invalid_argument("partition: needs at least 2 blocks");
        sizes_.assign(k, 0);
        for (auto b : block_of_) ++sizes_[b];
        for (auto s : sizes_)
            if (s == 0) throw std::invalid_argument("partition: empty block");
    }

    static PartStructure from_blocks(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& blocks) {
        std::vector<std::uint32_t> assign(n, UINT32_MAX);
        for (std::uint32_t b = 0; b < blocks.size(); ++b)
            for (auto v : blocks[b]) {
                if (v >= n) throw std::invalid_argument("partition: vertex id out of range");
                if (assign[v] != UINT32_MAX) throw std::invalid_argument("partition: overlapping blocks");
                assign[v] = static_cast<std::uint32_t>(b);
            }
        for (auto a : assign)
            if (a == UINT32_MAX) throw std::invalid_argument("partition: uncovered vertex");
        return PartStructure(n, std::move(assign));
    }

    std::uint32_t vertex_count() const { return n_; }
    std::uint32_t block_count() const { return static_cast<std::uint32_t>(sizes_.size()); }
    std::uint32_t block_of(std::uint32_t v) const { return block_of_[v]; }
    const std::vector<std::uint32_t>& block_sizes() const { return sizes_; }

    std::uint32_t max_block_size() const {
        return *std::max_element(sizes_.begin(), sizes_.end());
    }

    /// e(M) = (n^2 - sum of squared block sizes) / 2.
    std::uint64_t multipartite_edge_count() const {
        std::uint64_t sq = 0;
        for (auto s : sizes_) sq += std::uint64_t(s) * s;
        return (std::uint64_t(n_) * n_ - sq) / 2;
    }

private:
    std::uint32_t n_{0};
    std::vector<std::uint32_t> block_of_;
    std::vector<std::uint32_t> sizes_;
};

struct MultipartiteCounts {
    std::uint64_t within_s{0};        // e_M(S)
    std::uint64_t within_t{0};        // e_M(T)
    std::uint64_t between_ordered{0}; // e_M(S,T), ordered pairs
};

/// Counts e_M(S), e_M(T), e_M(S,T) combinatorially: only block-intersection
/// sizes matter, so the multipartite graph never has to exist in memory.
inline MultipartiteCounts multipartite_counts(const PartStructure& p,
                                              std::span<const std::uint32_t> s,
                                              std::span<const std::uint32_t> t) {
    const std::uint32_t k = p.block_count();
    std::vector<std::uint64_t> s_in(k, 0), t_in(k, 0);
    std::vector<std::uint8_t> seen_s(p.vertex_count(), 0), seen_t(p.vertex_count(), 0);
    std::uint64_t s_size = 0, t_size = 0;
    for (auto v : s) {
        if (v >= p.vertex_count()) throw std::out_of_range("partition: vertex id out of range");
        if (!seen_s[v]) {
            seen_s[v] = 1;
            ++s_in[p.block_of(v)];
            ++s_size;
        }
    }
    for (auto v : t) {
        if (v >= p.vertex_count()) throw std::out_of_range("partition: vertex id out of range");
        if (!seen_t[v]) {
            seen_t[v] = 1;
            ++t_in[p.block_of(v)];
            ++t_size;
        }
    }
    MultipartiteCounts out;
    std::uint64_t s_sq = 0, t_sq = 0, cross = 0;
    for (std::uint32_t b = 0; b < k; ++b) {
        s_sq += s_in[b] * s_in[b];
        t_sq += t_in[b] * t_in[b];
        cross += s_in[b] * t_in[b];
    }
    out.within_s = (s_size * s_size - s_sq) / 2;
    out.within_t = (t_size * t_size - t_sq) / 2;
    out.between_ordered = s_size * t_size - cross;
    return out;
}

/// Builds M explicitly; guarded because M has Theta(n^2) edges.
inline Graph materialize_multipartite(const PartStructure& p) {
    constexpr std::uint32_t kMaxVertices = 5000;
    if (p.vertex_count() > kMaxVertices)
        throw TooLarge("materialize_multipartite: n > 5000");
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u + 1 < p.vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < p.vertex_count(); ++v)
            if (p.block_of(u) != p.block_of(v)) edges.push_back({u, v});
    return Graph(p.vertex_count(), std::move(edges));
}

/// G with intra-block edges removed: the edge set of G intersected with M.
inline Graph intersect_multipartite(const Graph& g, const PartStructure& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("intersect: partition does not cover V(G)");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        if (p.block_of(e.u) != p.block_of(e.v)) edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace monocomp
