// oracle.hpp - exhaustive ground truth on tiny instances
//
// E[X] is recomputed from the other side of the law of total expectation:
// every labeled instance is enumerated, its maximal cliques are counted by the
// naive subset census (deliberately not the optimized enumerator under test),
// and Pr(instance) * count is accumulated in exact rational arithmetic.
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cliquex/cliques.hpp"
#include "cliquex/errors.hpp"
#include "cliquex/graph.hpp"
#include "cliquex/rational.hpp"

namespace cliquex {

struct RationalExpectation {
    long n = 0;
    Rational p;
    Rational total;
    std::map<long, Rational> per_size; // absent size means expected count 0
};

namespace detail {

// pw[i] = p^i and qw[i] = (1-p)^i for i = 0..m, exact.
inline std::pair<std::vector<Rational>, std::vector<Rational>> edge_prob_powers(const Rational& p,
                                                                                long m) {
    std::vector<Rational> pw(static_cast<std::size_t>(m) + 1), qw(static_cast<std::size_t>(m) + 1);
    pw[0] = 1;
    qw[0] = 1;
    const Rational q = 1 - p;
    for (long i = 1; i <= m; ++i) {
        pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * p;
        qw[static_cast<std::size_t>(i)] = qw[static_cast<std::size_t>(i - 1)] * q;
    }
    return {std::move(pw), std::move(qw)};
}

} // namespace detail

// All 2^C(n,2) labeled graphs. n = 6 visits 32768 instances; the cap can be
// raised to 7 (2 million instances) by a caller willing to wait.
inline RationalExpectation exhaustive_expected_cliques(long n, const Rational& p, long n_cap = 6) {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (p <= 0 || p >= 1) throw DomainError("p must lie strictly inside (0,1)");
    if (n > n_cap)
        throw ResourceLimitError("exhaustive graph oracle is capped at n <= " + std::to_string(n_cap));

    std::vector<std::pair<long, long>> pairs;
    for (long u = 0; u < n; ++u)
        for (long v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const long m = static_cast<long>(pairs.size());
    auto [pw, qw] = detail::edge_prob_powers(p, m);

    RationalExpectation out;
    out.n = n;
    out.p = p;
    const std::uint32_t masks = std::uint32_t{1} << m;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        Graph g(n);
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(bits))];
            g.add_edge(u, v);
        }
        const CliqueCensus census = maximal_cliques_naive(g);
        const int present = std::popcount(mask);
        const Rational pr = pw[static_cast<std::size_t>(present)] *
                            qw[static_cast<std::size_t>(m - present)];
        for (const auto& [size, count] : census.histogram)
            out.per_size[size] += pr * count;
        out.total += pr * census.total;
    }
    return out;
}

// All 2^C(n,r) labeled r-uniform hypergraphs, capped by hyperedge-slot count.
inline RationalExpectation exhaustive_expected_hypercliques(long n, int r, const Rational& p,
                                                            long edge_cap = 20) {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (r < 2 || r > n) throw DomainError("uniformity r must satisfy 2 <= r <= n");
    if (p <= 0 || p >= 1) throw DomainError("p must lie strictly inside (0,1)");

    std::vector<std::vector<long>> slots;
    std::vector<long> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
        slots.push_back(combo);
        int i = r - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    const long m = static_cast<long>(slots.size());
    if (m > edge_cap)
        throw ResourceLimitError("exhaustive hypergraph oracle is capped at C(n,r) <= " +
                                 std::to_string(edge_cap));
    auto [pw, qw] = detail::edge_prob_powers(p, m);

    RationalExpectation out;
    out.n = n;
    out.p = p;
    const std::uint32_t masks = std::uint32_t{1} << m;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        Hypergraph h(n, r);
        for (std::uint32_t bits = mask; bits; bits &= bits - 1)
            h.add_edge(slots[static_cast<std::size_t>(std::countr_zero(bits))]);
        const CliqueCensus census = maximal_hypercliques_naive(h);
        const int present = std::popcount(mask);
        const Rational pr = pw[static_cast<std::size_t>(present)] *
                            qw[static_cast<std::size_t>(m - present)];
        for (const auto& [size, count] : census.histogram)
            out.per_size[size] += pr * count;
        out.total += pr * census.total;
    }
    return out;
}

} // namespace cliquex
