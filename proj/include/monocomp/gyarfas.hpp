#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocomp/affine_plane.hpp"
#include "monocomp/finite_field.hpp"
#include "monocomp/graph.hpp"
#include "monocomp/rational.hpp"

namespace monocomp {

struct UnsupportedR : std::invalid_argument {
    explicit UnsupportedR(int r)
        : std::invalid_argument("r = " + std::to_string(r) +
                                " unsupported: need r >= 3 with r-1 a prime power") {}
};

struct TooSmallN : std::invalid_argument {
    TooSmallN(std::uint32_t n, int r)
        : std::invalid_argument("n = " + std::to_string(n) + " too small: need at least (r-1)^2 = " +
                                std::to_string((r - 1) * (r - 1)) + " vertices") {}
};

/**
 * The extremal r-coloring of K_n built from an affine plane of order
 * r−1. Vertices fall into (r−1)² contiguous balanced clusters, each
 * mapped to a plane point; an edge between clusters takes the parallel
 * class of the line through its two points (+1, verticals last), and
 * intra-cluster edges are colored round-robin so that every cluster
 * sees each color within ±1 of equally often.
 */
struct GyarfasColoring {
    std::uint32_t n{0};
    int r{0};
    int q{0};  // plane order r−1
    AffinePlane plane;
    std::vector<std::uint32_t> cluster_of;     // vertex → cluster id
    std::vector<std::uint32_t> point_of;       // cluster id → plane point id
    std::vector<std::uint32_t> cluster_start;  // size (r−1)²+1, cluster g spans [start[g], start[g+1])
    std::vector<std::uint16_t> pair_class;     // (r−1)²×(r−1)², class of line through two cluster points
    EdgeColoring coloring;                     // all of K_n, lexicographic edge order

    /// Color of edge {u, v} of K_n without touching the materialized array.
    std::uint16_t color_of(std::uint32_t u, std::uint32_t v) const {
        if (u > v) std::swap(u, v);
        const std::uint32_t k = static_cast<std::uint32_t>(q) * q;
        std::uint32_t gu = cluster_of[u], gv = cluster_of[v];
        if (gu != gv) return static_cast<std::uint16_t>(pair_class[gu * k + gv] + 1);
        std::uint64_t lo = cluster_start[gu];
        std::uint64_t s = cluster_start[gu + 1] - lo;
        std::uint64_t i = u - lo, j = v - lo;
        std::uint64_t t = i * (s - 1) - i * (i - 1) / 2 + (j - i - 1);
        return static_cast<std::uint16_t>((gu + t) % r + 1);
    }
};

inline GyarfasColoring gyarfas_coloring(std::uint32_t n, int r) {
    if (r < 3 || !is_prime_power(r - 1)) throw UnsupportedR(r);
    const int q = r - 1;
    const std::uint32_t k = static_cast<std::uint32_t>(q) * q;
    if (n < k) throw TooSmallN(n, r);

    GyarfasColoring gc;
    gc.n = n;
    gc.r = r;
    gc.q = q;
    gc.plane = build_affine_plane(build_field(q));

    gc.cluster_of.resize(n);
    for (std::uint32_t v = 0; v < n; ++v)
        gc.cluster_of[v] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * k / n);
    gc.cluster_start.assign(k + 1, n);
    for (std::uint32_t v = n; v-- > 0;) gc.cluster_start[gc.cluster_of[v]] = v;
    gc.point_of.resize(k);
    for (std::uint32_t g = 0; g < k; ++g) gc.point_of[g] = g;  // cluster g sits at point g

    // One pass over the plane's lines fills the class of every point pair.
    gc.pair_class.assign(static_cast<std::size_t>(k) * k, 0);
    for (std::uint32_t id = 0; id < gc.plane.line_count(); ++id) {
        auto cls = static_cast<std::uint16_t>(gc.plane.class_of_line(id));
        const auto& line = gc.plane.lines[id];
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                gc.pair_class[static_cast<std::size_t>(line[i]) * k + line[j]] = cls;
                gc.pair_class[static_cast<std::size_t>(line[j]) * k + line[i]] = cls;
            }
    }

    gc.coloring.r = r;
    gc.coloring.colors.resize(static_cast<std::uint64_t>(n) * (n - 1) / 2);
    std::uint64_t idx = 0;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) gc.coloring.colors[idx++] = gc.color_of(u, v);
    return gc;
}

/// Restriction of the K_n coloring to the edges actually present in G.
inline EdgeColoring induced_coloring(const GyarfasColoring& base, const Graph& g) {
    if (g.vertex_count() != base.n)
        throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                    " vertices, coloring expects " + std::to_string(base.n));
    EdgeColoring out;
    out.r = base.r;
    out.colors.reserve(g.edge_count());
    for (const auto& e : g.edges()) out.colors.push_back(base.color_of(e.u, e.v));
    return out;
}

struct PredictedFractions {
    Rational conjectured;  // 1/(r(r−1))
    Rational proven;       // 1/(r²−r+5/4) = 4/(4r²−4r+5)
    Rational vertex;       // 1/(r−1)
};

inline PredictedFractions predicted_fractions(int r) {
    if (r < 2) throw std::invalid_argument("predicted_fractions requires r >= 2");
    long long rr = r;
    return {Rational(1, rr * (rr - 1)), Rational(4, 4 * rr * rr - 4 * rr + 5),
            Rational(1, rr - 1)};
}

}  // namespace monocomp
