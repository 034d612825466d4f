// cliques.hpp - maximal-clique censuses for graphs and r-uniform hypergraphs
//
// "Clique" throughout means MAXIMAL complete subgraph, so an isolated vertex
// is a clique of size 1. The fast graph enumerator is Bron-Kerbosch with
// Tomita pivoting; the naive enumerators test all vertex subsets and exist as
// independent oracles, so they deliberately share no code with the fast paths.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/graph.hpp"

namespace cliquex {

struct CliqueCensus {
    std::map<long, long long> histogram; // size -> count of maximal cliques
    long long total = 0;

    void record(long size) {
        ++histogram[size];
        ++total;
    }
    friend bool operator==(const CliqueCensus&, const CliqueCensus&) = default;
};

struct CensusOptions {
    long long count_cap = 10'000'000; // maximal cliques counted before giving up
    bool collect_witnesses = false;   // opt-in: censuses are the default output
};

struct CensusResult {
    CliqueCensus census;
    std::vector<std::vector<long>> witnesses; // filled only when requested
};

namespace detail {

template <typename Visit>
void bron_kerbosch(const Graph& g, std::vector<long>& grown, VertexSet& cand,
                   VertexSet& excluded, Visit&& visit) {
    if (cand.none() && excluded.none()) {
        visit(grown);
        return;
    }
    // Tomita pivot: a u in cand|excluded maximizing |cand & N(u)|.
    std::size_t pivot = VertexSet::npos;
    std::size_t best = 0;
    VertexSet both = cand | excluded;
    for (std::size_t u = both.find_first(); u != VertexSet::npos; u = both.find_next(u)) {
        std::size_t score = (cand & g.neighbors(static_cast<long>(u))).count();
        if (pivot == VertexSet::npos || score > best) {
            pivot = u;
            best = score;
        }
    }
    VertexSet ext = cand & ~g.neighbors(static_cast<long>(pivot));
    for (std::size_t v = ext.find_first(); v != VertexSet::npos; v = ext.find_next(v)) {
        const VertexSet& nv = g.neighbors(static_cast<long>(v));
        VertexSet cand2 = cand & nv;
        VertexSet excl2 = excluded & nv;
        grown.push_back(static_cast<long>(v));
        bron_kerbosch(g, grown, cand2, excl2, visit);
        grown.pop_back();
        cand.reset(v);
        excluded.set(v);
    }
}

inline void enforce_cap(long long total, long long cap) {
    if (total > cap) throw ResourceLimitError("maximal clique count exceeds configured cap");
}

} // namespace detail

inline CensusResult maximal_cliques_result(const Graph& g, const CensusOptions& opts = {}) {
    CensusResult out;
    std::vector<long> grown;
    VertexSet cand(static_cast<std::size_t>(g.vertex_count()));
    cand.set();
    VertexSet excluded(static_cast<std::size_t>(g.vertex_count()));
    detail::bron_kerbosch(g, grown, cand, excluded, [&](const std::vector<long>& clique) {
        out.census.record(static_cast<long>(clique.size()));
        detail::enforce_cap(out.census.total, opts.count_cap);
        if (opts.collect_witnesses) out.witnesses.push_back(clique);
    });
    return out;
}

inline CliqueCensus maximal_cliques(const Graph& g, const CensusOptions& opts = {}) {
    return maximal_cliques_result(g, opts).census;
}

// Oracle enumerator: every nonempty vertex subset is tested for completeness
// and maximality directly from the definition.
inline CliqueCensus maximal_cliques_naive(const Graph& g) {
    const long n = g.vertex_count();
    if (n > 15) throw ResourceLimitError("naive clique census is limited to 15 vertices");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= std::uint32_t{1} << v;

    CliqueCensus census;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        bool complete = true;
        for (long v = 0; v < n && complete; ++v)
            if (mask & (std::uint32_t{1} << v))
                complete = (adj[v] & mask) == (mask & ~(std::uint32_t{1} << v));
        if (!complete) continue;
        bool maximal = true;
        for (long v = 0; v < n && maximal; ++v)
            if (!(mask & (std::uint32_t{1} << v))) maximal = (adj[v] & mask) != mask;
        if (maximal) census.record(static_cast<long>(std::popcount(mask)));
    }
    return census;
}

// Re-verification helper for witness mode: complete and unextendable.
inline bool is_maximal_clique(const Graph& g, const std::vector<long>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    for (long v = 0; v < g.vertex_count(); ++v) {
        bool inside = false, adjacent_to_all = true;
        for (long u : vertices) {
            if (u == v) inside = true;
            else if (!g.has_edge(u, v)) adjacent_to_all = false;
        }
        if (!inside && adjacent_to_all) return false;
    }
    return true;
}

// --- hypergraph censuses -------------------------------------------------
//
// A set S is complete when every r-subset of S is an edge; sets with fewer
// than r vertices are complete vacuously, so maximal sets have size >= r-1.
// The enumerator grows S one vertex at a time. A candidate u survives the
// addition of v exactly when every r-subset of S+{v,u} containing both u and
// v is an edge: the remaining r-subsets were already certified when u and v
// became candidates. Tomita pivoting is unsound here (completeness is not a
// pairwise relation for r >= 3), so candidates are scanned exhaustively.

namespace detail {

// Applies fn to the packed mask of every k-subset of the vertices listed in pool.
template <typename Fn>
bool all_k_subsets(const std::vector<long>& pool, int k, Fn&& fn) {
    if (k < 0) return true;
    const int m = static_cast<int>(pool.size());
    if (k > m) return true; // no such subsets, vacuous
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
        if (!fn(mask)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool hyper_pair_compatible(const Hypergraph& h, const std::vector<long>& grown,
                                  long u, long v) {
    const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return all_k_subsets(grown, h.uniformity() - 2,
                         [&](std::uint64_t sub) { return h.has_edge_mask(sub | uv); });
}

template <typename Visit>
void hyper_extend(const Hypergraph& h, std::vector<long>& grown, std::uint64_t cand,
                  std::uint64_t excluded, Visit&& visit) {
    if (cand == 0 && excluded == 0) {
        visit(grown);
        return;
    }
    std::uint64_t rest = cand;
    while (rest) {
        const long v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t cand2 = 0, excl2 = 0;
        for (std::uint64_t bits = cand & ~(std::uint64_t{1} << v); bits; bits &= bits - 1) {
            const long u = std::countr_zero(bits);
            if (hyper_pair_compatible(h, grown, u, v)) cand2 |= std::uint64_t{1} << u;
        }
        for (std::uint64_t bits = excluded; bits; bits &= bits - 1) {
            const long u = std::countr_zero(bits);
            if (hyper_pair_compatible(h, grown, u, v)) excl2 |= std::uint64_t{1} << u;
        }
        grown.push_back(v);
        hyper_extend(h, grown, cand2, excl2, visit);
        grown.pop_back();
        cand &= ~(std::uint64_t{1} << v);
        excluded |= std::uint64_t{1} << v;
    }
}

} // namespace detail

inline CensusResult maximal_hypercliques_result(const Hypergraph& h,
                                                const CensusOptions& opts = {}) {
    CensusResult out;
    std::vector<long> grown;
    const std::uint64_t all =
        h.vertex_count() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << h.vertex_count()) - 1;
    detail::hyper_extend(h, grown, all, 0, [&](const std::vector<long>& clique) {
        out.census.record(static_cast<long>(clique.size()));
        detail::enforce_cap(out.census.total, opts.count_cap);
        if (opts.collect_witnesses) {
            out.witnesses.push_back(clique);
            std::sort(out.witnesses.back().begin(), out.witnesses.back().end());
        }
    });
    return out;
}

inline CliqueCensus maximal_hypercliques(const Hypergraph& h, const CensusOptions& opts = {}) {
    return maximal_hypercliques_result(h, opts).census;
}

// Oracle enumerator over all vertex subsets, straight from the definition.
inline CliqueCensus maximal_hypercliques_naive(const Hypergraph& h) {
    const long n = h.vertex_count();
    if (n > 12) throw ResourceLimitError("naive hyperclique census is limited to 12 vertices");
    const int r = h.uniformity();

    std::vector<long> members;
    auto complete = [&](std::uint64_t mask) {
        members.clear();
        for (std::uint64_t bits = mask; bits; bits &= bits - 1)
            members.push_back(std::countr_zero(bits));
        return detail::all_k_subsets(members, r,
                                     [&](std::uint64_t sub) { return h.has_edge_mask(sub); });
    };

    CliqueCensus census;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask <= all; ++mask) {
        if (!complete(mask)) continue;
        bool maximal = true;
        for (long v = 0; v < n && maximal; ++v)
            if (!(mask & (std::uint64_t{1} << v))) maximal = !complete(mask | (std::uint64_t{1} << v));
        if (maximal) census.record(static_cast<long>(std::popcount(mask)));
    }
    return census;
}

inline bool is_maximal_hyperclique(const Hypergraph& h, const std::vector<long>& vertices) {
    std::vector<long> pool = vertices;
    const int r = h.uniformity();
    if (!detail::all_k_subsets(pool, r,
                               [&](std::uint64_t sub) { return h.has_edge_mask(sub); }))
        return false;
    for (long v = 0; v < h.vertex_count(); ++v) {
        if (std::find(pool.begin(), pool.end(), v) != pool.end()) continue;
        pool.push_back(v);
        const std::uint64_t vb = std::uint64_t{1} << v;
        bool extendable = detail::all_k_subsets(pool, r, [&](std::uint64_t sub) {
            return (sub & vb) == 0 || h.has_edge_mask(sub);
        });
        pool.pop_back();
        if (extendable) return false;
    }
    return true;
}

} // namespace cliquex
