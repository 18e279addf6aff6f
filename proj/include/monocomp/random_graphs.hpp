#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monocomp/graph.hpp"
#include "monocomp/partition.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

namespace detail {

/// Pairs to skip before the next edge, by inverting the geometric CDF.
/// Both G(n,p) samplers consume exactly this draw sequence, which is what
/// makes their outputs identical rather than merely identically distributed.
inline std::uint64_t geometric_gap(Rng& rng, double log1mp) {
    double u = rng.next_double();           // [0, 1)
    double g = std::log1p(-u) / log1mp;     // both logs negative
    if (!(g < 1e18)) return UINT64_MAX;     // saturate far beyond any pair count
    return static_cast<std::uint64_t>(g);
}

inline Graph edges_to_graph(std::uint32_t n, std::vector<Edge> edges) {
    return Graph(n, std::move(edges));
}

}  // namespace detail

/// Walks every pair in lexicographic order, counting down to the next
/// included pair. Exists as the slow twin of sample_gnp_gaps: same seed,
/// same graph, every pair visibly visited.
inline Graph sample_gnp_perpair(std::uint32_t n, double p, RngSeed seed) {
    if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: need n >= 1, p in [0,1]");
    std::vector<Edge> edges;
    if (p == 1.0) return Graph::complete(n);
    if (p == 0.0) return Graph(n, {});
    Rng rng(seed);
    const double log1mp = std::log1p(-p);
    std::uint64_t countdown = detail::geometric_gap(rng, log1mp);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (countdown == 0) {
                edges.push_back({u, v});
                countdown = detail::geometric_gap(rng, log1mp);
            } else {
                --countdown;
            }
        }
    return detail::edges_to_graph(n, std::move(edges));
}

/// Jumps straight between included pairs; the fast path for sparse p.
inline Graph sample_gnp_gaps(std::uint32_t n, double p, RngSeed seed) {
    if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: need n >= 1, p in [0,1]");
    std::vector<Edge> edges;
    if (p == 1.0) return Graph::complete(n);
    if (p == 0.0) return Graph(n, {});
    Rng rng(seed);
    const double log1mp = std::log1p(-p);
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::uint64_t pos = detail::geometric_gap(rng, log1mp);
    // Row starts in the lexicographic pair order: pair (u,v) has index
    // row_start[u] + (v − u − 1).
    std::uint32_t u = 0;
    std::uint64_t row_start = 0, row_len = n - 1;
    while (pos < total) {
        while (pos >= row_start + row_len) {
            row_start += row_len;
            --row_len;
            ++u;
        }
        std::uint32_t v = u + 1 + static_cast<std::uint32_t>(pos - row_start);
        edges.push_back({u, v});
        std::uint64_t gap = detail::geometric_gap(rng, log1mp);
        pos = gap >= total - pos ? total : pos + 1 + gap;
    }
    return detail::edges_to_graph(n, std::move(edges));
}

/// G(n,p): every pair independently an edge with probability p.
/// Dispatches to gap-skipping below p = 0.1; both paths produce the same
/// graph for the same seed.
inline Graph sample_gnp(std::uint32_t n, double p, RngSeed seed) {
    return p < 0.1 ? sample_gnp_gaps(n, p, seed) : sample_gnp_perpair(n, p, seed);
}

/**
 * K_n minus a circulant: with d = floor(beta*n) and h = floor(d/2),
 * removes {i, i±j mod n} for j = 1..h, plus the antipodal matching when
 * d is odd and n even. Every vertex keeps degree >= n−1−d >= (1−beta)n−1.
 */
inline Graph min_degree_graph(std::uint32_t n, double beta) {
    if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("min_degree_graph: beta in [0,1)");
    const std::uint64_t d = static_cast<std::uint64_t>(std::floor(beta * n));
    if (n == 0 || d > n - 1) throw std::invalid_argument("min_degree_graph: floor(beta*n) > n-1");
    const std::uint64_t h = d / 2;
    const bool antipodal = (d % 2 == 1) && (n % 2 == 0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::uint32_t step = j - i;
            std::uint32_t dist = std::min(step, n - step);
            if (dist <= h) continue;
            if (antipodal && step == n / 2) continue;
            edges.push_back({i, j});
        }
    return detail::edges_to_graph(n, std::move(edges));
}

struct ChernoffQuery {
    double mu{0.0};
    double delta{0.0};
};

/// The three closed-form tails. lower and two_sided are only defined for
/// delta < 1; the accessors turn absence into a domain error.
struct ChernoffBounds {
    double upper{1.0};                 // e^{−δ²μ/(2+δ)}
    std::optional<double> lower;       // e^{−δ²μ/2}
    std::optional<double> two_sided;   // 2e^{−δ²μ/3}

    double lower_tail() const {
        if (!lower) throw std::domain_error("lower tail bound requires delta < 1");
        return *lower;
    }
    double two_sided_tail() const {
        if (!two_sided) throw std::domain_error("two-sided bound requires delta < 1");
        return *two_sided;
    }
};

inline ChernoffBounds chernoff_tails(const ChernoffQuery& q) {
    if (!(q.mu >= 0.0)) throw std::domain_error("chernoff_tails: mu must be >= 0");
    if (!(q.delta > 0.0)) throw std::domain_error("chernoff_tails: delta must be > 0");
    ChernoffBounds b;
    const double d2mu = q.delta * q.delta * q.mu;
    b.upper = std::exp(-d2mu / (2.0 + q.delta));
    if (q.delta < 1.0) {
        b.lower = std::exp(-d2mu / 2.0);
        b.two_sided = 2.0 * std::exp(-d2mu / 3.0);
    }
    return b;
}

/// Uniform block count in [2, k_max], then independent uniform block per
/// vertex; empty blocks are repaired by stealing the highest vertex from
/// the (smallest-id) largest block.
inline PartStructure random_part_structure(std::uint32_t n, std::uint32_t k_max, RngSeed seed) {
    if (k_max < 2 || k_max > n) throw std::invalid_argument("random_part_structure: need 2 <= k_max <= n");
    Rng rng(seed);
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.next_below(k_max - 1));
    std::vector<std::uint32_t> block_of(n);
    for (std::uint32_t v = 0; v < n; ++v)
        block_of[v] = static_cast<std::uint32_t>(rng.next_below(k));

    std::vector<std::uint32_t> sizes(k, 0);
    for (auto b : block_of) ++sizes[b];
    for (std::uint32_t b = 0; b < k; ++b) {
        if (sizes[b] > 0) continue;
        std::uint32_t donor = 0;
        for (std::uint32_t c = 1; c < k; ++c)
            if (sizes[c] > sizes[donor]) donor = c;
        for (std::uint32_t v = n; v-- > 0;)
            if (block_of[v] == donor) {
                block_of[v] = b;
                --sizes[donor];
                ++sizes[b];
                break;
            }
    }
    return PartStructure(n, std::move(block_of));
}

/// Each vertex independently included with the given density.
inline std::vector<std::uint32_t> random_subset(std::uint32_t n, double density, RngSeed seed) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("random_subset: density in [0,1]");
    Rng rng(seed);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (rng.next_double() < density) out.push_back(v);
    return out;
}

}  // namespace monocomp
