#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocomp/components.hpp"
#include "monocomp/graph.hpp"
#include "monocomp/gyarfas.hpp"
#include "monocomp/partition.hpp"
#include "monocomp/rational.hpp"

namespace monocomp {

struct EdgeInsideBlock : std::invalid_argument {
    EdgeInsideBlock(std::uint32_t u, std::uint32_t v)
        : std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} lies inside one block") {}
};

struct DensityPreconditionViolated : std::invalid_argument {
    explicit DensityPreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct Beta3ColorOutOfRange : std::invalid_argument {
    explicit Beta3ColorOutOfRange(const Rational& beta)
        : std::invalid_argument("3-color minimum-degree bound requires beta <= 1/25, got " +
                                beta.str()) {}
};

/**
 * Result of one inequality check. lhs and rhs are the two exactly
 * compared quantities (rationals; integers have denominator 1) and
 * margin = lhs − rhs, so holds ⇔ margin ≥ 0 (or > 0 where the source
 * inequality is strict — the op's comment says which). vacuous marks
 * passes where the check's trigger condition never fired.
 */
struct CheckOutcome {
    bool holds{false};
    Rational lhs;
    Rational rhs;
    Rational margin;
    std::string context;
    bool vacuous{false};
};

/// Parameter bundle for the sparse-random checkers; all in (0,1).
struct EpsilonParams {
    Rational eps{1, 2};
    Rational c{1, 20};
    Rational c0{1, 5};
    Rational p{3, 10};
};

inline void validate_unit_interval(const Rational& x, const char* name) {
    if (!(Rational(0) < x) || !(x < Rational(1)))
        throw std::invalid_argument(std::string(name) + " must lie in (0,1), got " + x.str());
}

inline void validate_epsilon_params(const EpsilonParams& ep) {
    validate_unit_interval(ep.eps, "eps");
    validate_unit_interval(ep.c, "c");
    validate_unit_interval(ep.c0, "c0");
    validate_unit_interval(ep.p, "p");
}

namespace detail {

inline CheckOutcome outcome_ge(Rational lhs, Rational rhs, std::string context,
                               bool strict = false) {
    CheckOutcome out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.margin = lhs - rhs;
    out.holds = strict ? lhs > rhs : !(lhs < rhs);
    out.context = std::move(context);
    return out;
}

}  // namespace detail

/// e_M(S,T)² ≥ 4·e_M(S)·e_M(T) over the complete multipartite graph M.
inline CheckOutcome check_pair_inequality(const PartStructure& parts,
                                          std::span<const std::uint32_t> s,
                                          std::span<const std::uint32_t> t) {
    MultipartiteCounts mc = multipartite_counts(parts, s, t);
    Rational lhs = Rational(static_cast<long long>(mc.between_ordered)) *
                   Rational(static_cast<long long>(mc.between_ordered));
    Rational rhs = Rational(4) * Rational(static_cast<long long>(mc.within_s)) *
                   Rational(static_cast<long long>(mc.within_t));
    std::ostringstream ctx;
    ctx << "n=" << parts.vertex_count() << " k=" << parts.block_count() << " |S|=" << s.size()
        << " |T|=" << t.size() << " e_M(S,T)=" << mc.between_ordered << " e_M(S)=" << mc.within_s
        << " e_M(T)=" << mc.within_t;
    return detail::outcome_ge(lhs, rhs, ctx.str());
}

/// Some component H' of H carries at least e(H)²/e(M) edges. H must be a
/// subgraph of the multipartite graph of `parts` (no intra-block edges).
inline CheckOutcome check_component_density(const PartStructure& parts, const Graph& h) {
    if (h.vertex_count() != parts.vertex_count())
        throw std::invalid_argument("H and partition disagree on vertex count");
    for (const auto& e : h.edges())
        if (parts.block_of(e.u) == parts.block_of(e.v)) throw EdgeInsideBlock(e.u, e.v);
    const std::uint64_t em = parts.multipartite_edge_count();
    if (em == 0) throw std::invalid_argument("e(M) = 0");
    const std::uint64_t eh = h.edge_count();

    std::ostringstream ctx;
    ctx << "n=" << parts.vertex_count() << " k=" << parts.block_count() << " e(M)=" << em
        << " e(H)=" << eh;
    if (eh == 0) {
        // Nothing to witness and nothing required: e(H)²/e(M) = 0.
        CheckOutcome out = detail::outcome_ge(Rational(0), Rational(0), ctx.str());
        out.vacuous = true;
        return out;
    }
    ComponentDecomposition comps = connected_components(h);
    const ComponentStats& best = comps.components.front();  // largest-first ordering
    Rational lhs = Rational(static_cast<long long>(best.edge_count)) *
                   Rational(static_cast<long long>(em));
    Rational rhs = Rational(static_cast<long long>(eh)) * Rational(static_cast<long long>(eh));
    ctx << " witness_edges=" << best.edge_count << " witness_vertices=" << best.vertex_count
        << " witness_min_vertex=" << best.min_vertex;
    return detail::outcome_ge(lhs, rhs, ctx.str());
}

namespace detail {

/// Shared core of the two density-control shapes: |e(H∩G) − p·e(H)| ≤ eps·p·e(H).
inline CheckOutcome density_control_core(std::uint64_t edges_in_both, std::uint64_t edges_in_h,
                                         std::uint64_t pairs_total, const Rational& p,
                                         const Rational& eps, std::string shape) {
    validate_unit_interval(eps, "eps");
    if (!(Rational(0) < p) || Rational(1) < p)
        throw std::invalid_argument("p must lie in (0,1], got " + p.str());
    if (Rational(static_cast<long long>(edges_in_h)) <
        eps * Rational(static_cast<long long>(pairs_total)))
        throw DensityPreconditionViolated(
            "e(H) = " + std::to_string(edges_in_h) + " below eps*C(n,2) = " +
            (eps * Rational(static_cast<long long>(pairs_total))).str());
    Rational mu = p * Rational(static_cast<long long>(edges_in_h));
    Rational dev = Rational(static_cast<long long>(edges_in_both)) - mu;
    if (dev < Rational(0)) dev = -dev;
    std::ostringstream ctx;
    ctx << shape << " e(H)=" << edges_in_h << " e(HnG)=" << edges_in_both << " mu=" << mu.str();
    return outcome_ge(eps * mu, dev, ctx.str());
}

}  // namespace detail

/// Density control for H = the clique on a vertex subset.
inline CheckOutcome check_density_control(const Graph& g, std::span<const std::uint32_t> subset,
                                          const Rational& p, const Rational& eps) {
    std::vector<std::uint32_t> uniq;
    {
        auto in = detail::membership(g, subset);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            if (in[v]) uniq.push_back(v);
    }
    const std::uint64_t s = uniq.size();
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t clique_edges = s < 2 ? 0 : s * (s - 1) / 2;
    return detail::density_control_core(count_edges_within(g, uniq), clique_edges,
                                        n * (n - 1) / 2, p, eps,
                                        "H=clique(|S|=" + std::to_string(s) + ")");
}

/// Density control for H = the complete multipartite graph on all of V(G).
inline CheckOutcome check_density_control(const Graph& g, const PartStructure& parts,
                                          const Rational& p, const Rational& eps) {
    if (parts.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not cover V(G)");
    std::uint64_t crossing = 0;
    for (const auto& e : g.edges())
        if (parts.block_of(e.u) != parts.block_of(e.v)) ++crossing;
    const std::uint64_t n = g.vertex_count();
    return detail::density_control_core(crossing, parts.multipartite_edge_count(), n * (n - 1) / 2,
                                        p, eps,
                                        "H=multipartite(k=" + std::to_string(parts.block_count()) +
                                            ")");
}

/// Vertex-count lower bound from the average degree of G[S]:
/// |S| > d̄·(1−eps)·n/(p(n−1)), strict; vacuous unless d̄ ≥ c0·p·(n−1).
inline CheckOutcome check_degree_bound(const Graph& g, std::span<const std::uint32_t> subset,
                                       const Rational& p, const Rational& eps, const Rational& c0) {
    validate_unit_interval(eps, "eps");
    validate_unit_interval(c0, "c0");
    std::vector<std::uint32_t> uniq;
    {
        auto in = detail::membership(g, subset);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            if (in[v]) uniq.push_back(v);
    }
    if (uniq.empty()) throw std::invalid_argument("S is empty");
    const long long n = g.vertex_count();
    const long long s = static_cast<long long>(uniq.size());
    const long long eh = static_cast<long long>(count_edges_within(g, uniq));
    Rational avg_deg = Rational(2 * eh, s);

    std::ostringstream ctx;
    ctx << "|S|=" << s << " e(G[S])=" << eh << " avg_deg=" << avg_deg.str();
    if (avg_deg < c0 * p * Rational(n - 1)) {
        CheckOutcome out = detail::outcome_ge(Rational(0), Rational(0), ctx.str());
        out.vacuous = true;
        out.context += " below_degree_floor";
        return out;
    }
    Rational rhs = avg_deg * (Rational(1) - eps) * Rational(n) / (p * Rational(n - 1));
    return detail::outcome_ge(Rational(s), rhs, ctx.str(), /*strict=*/true);
}

/// Sparse pair inequality on G' = G ∩ M: requires e_M(S,T) ≥ c·n², then
/// checks e_{G'}(S,T) ≥ (1−eps)·p·e_M(S,T) and
/// e_{G'}(S,T)² ≥ 4(1−eps)·e_{G'}(S)·e_{G'}(T).
inline CheckOutcome check_sparse_pair_inequality(const Graph& g, const PartStructure& parts,
                                                 std::span<const std::uint32_t> s,
                                                 std::span<const std::uint32_t> t,
                                                 const Rational& p, const Rational& eps,
                                                 const Rational& c) {
    validate_unit_interval(eps, "eps");
    validate_unit_interval(c, "c");
    MultipartiteCounts mc = multipartite_counts(parts, s, t);
    const long long n = g.vertex_count();
    if (Rational(static_cast<long long>(mc.between_ordered)) < c * Rational(n) * Rational(n))
        throw PreconditionViolated("e_M(S,T) = " + std::to_string(mc.between_ordered) +
                                   " below c*n^2 = " + (c * Rational(n) * Rational(n)).str());

    Graph gp = intersect_multipartite(g, parts);
    const long long est = static_cast<long long>(count_ordered_between(gp, s, t));
    const long long es = static_cast<long long>(count_edges_within(gp, s));
    const long long et = static_cast<long long>(count_edges_within(gp, t));
    const Rational one_minus_eps = Rational(1) - eps;

    Rational conc_lhs(est);
    Rational conc_rhs = one_minus_eps * p * Rational(static_cast<long long>(mc.between_ordered));
    bool concentration = !(conc_lhs < conc_rhs);

    Rational pair_lhs = Rational(est) * Rational(est);
    Rational pair_rhs = Rational(4) * one_minus_eps * Rational(es) * Rational(et);
    bool pair = !(pair_lhs < pair_rhs);

    std::ostringstream ctx;
    ctx << "|S|=" << s.size() << " |T|=" << t.size() << " e_M(S,T)=" << mc.between_ordered
        << " e_G'(S,T)=" << est << " e_G'(S)=" << es << " e_G'(T)=" << et
        << " concentration=" << (concentration ? "ok" : "FAIL");
    // Report the failing inequality's pair when only the concentration
    // half fails; otherwise the namesake pair inequality.
    CheckOutcome out = (!concentration && pair)
                           ? detail::outcome_ge(conc_lhs, conc_rhs, ctx.str())
                           : detail::outcome_ge(pair_lhs, pair_rhs, ctx.str());
    out.holds = concentration && pair;
    return out;
}

/// Sparse component density on G' = G ∩ M: some component H' of H has
/// e(H')·e(G') ≥ (1−eps)·e(H)², under the three stated preconditions.
inline CheckOutcome check_sparse_component_density(const Graph& g, const PartStructure& parts,
                                                   const Graph& h, const Rational& eps,
                                                   const Rational& c1, const Rational& c2) {
    validate_unit_interval(eps, "eps");
    validate_unit_interval(c1, "c1");
    validate_unit_interval(c2, "c2");
    if (parts.vertex_count() != g.vertex_count() || h.vertex_count() != g.vertex_count())
        throw std::invalid_argument("G, H, and partition disagree on vertex count");

    const long long n = g.vertex_count();
    if (Rational(1) - c1 < Rational(parts.max_block_size()) / Rational(n))
        throw PreconditionViolated("block of size " + std::to_string(parts.max_block_size()) +
                                   " exceeds (1-c1)n = " +
                                   ((Rational(1) - c1) * Rational(n)).str());
    Graph gp = intersect_multipartite(g, parts);
    for (const auto& e : h.edges())
        if (!gp.has_edge(e.u, e.v))
            throw PreconditionViolated("H edge {" + std::to_string(e.u) + "," +
                                       std::to_string(e.v) + "} is not an edge of G'");
    const long long egp = static_cast<long long>(gp.edge_count());
    const long long eh = static_cast<long long>(h.edge_count());
    if (egp == 0 || Rational(eh, egp) < c2)
        throw PreconditionViolated("e(H)/e(G') = " + std::to_string(eh) + "/" +
                                   std::to_string(egp) + " below c2 = " + c2.str());

    ComponentDecomposition comps = connected_components(h);
    const ComponentStats& best = comps.components.front();
    Rational lhs = Rational(static_cast<long long>(best.edge_count)) * Rational(egp);
    Rational rhs = (Rational(1) - eps) * Rational(eh) * Rational(eh);
    std::ostringstream ctx;
    ctx << "e(G')=" << egp << " e(H)=" << eh << " witness_edges=" << best.edge_count
        << " witness_vertices=" << best.vertex_count;
    return detail::outcome_ge(lhs, rhs, ctx.str());
}

/**
 * Verdict on a colored graph against the named thresholds. Edge-basis
 * entries (proven_1_6, conjectured_1_5, mindeg_3color, mindeg_r4) compare
 * z = largest component edges / e(G); vertex-basis entries
 * (vertex_gyarfas, vertex_bd) compare max component vertices / n. Every
 * threshold is stored as the exact rational fraction on its basis.
 */
struct BoundVerdict {
    Rational z;
    Rational max_vertex_fraction;
    std::map<std::string, Rational> thresholds;
    std::map<std::string, bool> pass;

    bool all_pass() const {
        for (const auto& [name, ok] : pass)
            if (!ok) return false;
        return true;
    }
};

struct VerdictContext {
    int r{2};
    std::optional<Rational> beta;  // enables the minimum-degree thresholds
    Rational vertex_eps{1, 2};     // slack in the random-graph vertex bound
};

inline BoundVerdict verdict_bounds(const Graph& g, const EdgeColoring& coloring,
                                   const VerdictContext& ctx) {
    if (coloring.r != ctx.r) throw std::invalid_argument("context r differs from coloring r");
    if (ctx.r < 2) throw std::invalid_argument("verdict requires r >= 2");
    if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");

    ComponentReport report = monochromatic_components(g, coloring);
    const long long n = g.vertex_count();
    const long long m = static_cast<long long>(g.edge_count());

    BoundVerdict v;
    v.z = report.z;
    v.max_vertex_fraction = Rational(report.max_component_vertices(), n);

    PredictedFractions pf = predicted_fractions(ctx.r);
    v.thresholds["proven_1_6"] = pf.proven;
    v.thresholds["conjectured_1_5"] = pf.conjectured;
    v.thresholds["vertex_gyarfas"] = pf.vertex;
    v.thresholds["vertex_bd"] = (Rational(1) - ctx.vertex_eps) * pf.vertex;

    if (ctx.beta) {
        const Rational& beta = *ctx.beta;
        if (beta < Rational(0) || !(beta < Rational(1)))
            throw std::invalid_argument("beta must lie in [0,1)");
        if (ctx.r == 3) {
            if (Rational(1, 25) < beta) throw Beta3ColorOutOfRange(beta);
            v.thresholds["mindeg_3color"] = Rational(1, 6);
        } else if (ctx.r >= 4) {
            Rational one_minus_beta = Rational(1) - beta;
            Rational fraction = one_minus_beta * one_minus_beta * pf.proven;  // basis C(n,2)
            v.thresholds["mindeg_r4"] =
                fraction * Rational(n * (n - 1) / 2) / Rational(m);  // rebased to e(G)
        }
    }

    for (const auto& [name, threshold] : v.thresholds) {
        bool vertex_basis = name.rfind("vertex", 0) == 0;
        const Rational& achieved = vertex_basis ? v.max_vertex_fraction : v.z;
        v.pass[name] = !(achieved < threshold);
    }
    return v;
}

}  // namespace monocomp
