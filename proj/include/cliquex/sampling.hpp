// sampling.hpp - seeded, reproducible G(n,p) and G^(r)(n,p) samplers
//
// Determinism contract: identical (parameters, seed) produce identical
// instances on every platform. Draws use the raw mt19937_64 stream (its
// seeding and outputs are pinned by the standard); the acceptance test
// u < floor(p * 2^64) keeps the comparison in exact integer arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/graph.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

// splitmix64 finalizer; the per-trial seed schedule below is its output stream.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for trial i of a run keyed by master_seed: splittable, so trials can be
// generated on any worker without shared RNG state.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64(master_seed + trial_index * 0x9e3779b97f4a7c15ULL);
}

namespace detail {

// Inclusion threshold on the raw 64-bit draw; error vs the exact p is < 2^-64.
inline std::uint64_t inclusion_threshold(const Real& p) {
    if (p.is_nan() || p < Real(0L) || p > Real(1L))
        throw DomainError("sampling probability must lie in [0,1]");
    if (p >= Real(1L)) return ~std::uint64_t{0}; // p=1: include always (see below)
    Real scaled = floor(p * pow(Real(2L, std::max<prec_t>(p.precision(), 70)), 64L));
    return static_cast<std::uint64_t>(mpfr_get_uj(scaled.raw(), MPFR_RNDZ));
}

} // namespace detail

// Each unordered pair {u,v}, u < v in lexicographic order, is included
// independently with probability p.
inline Graph sample_gnp(long n, const Real& p, std::uint64_t seed) {
    Graph g(n);
    const std::uint64_t thr = detail::inclusion_threshold(p);
    const bool always = p >= Real(1L);
    std::mt19937_64 rng(seed);
    for (long u = 0; u < n; ++u)
        for (long v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng();
            if (always || draw < thr) g.add_edge(u, v);
        }
    return g;
}

// Each r-subset, iterated in lexicographic order, is included independently
// with probability p.
inline Hypergraph sample_hypergraph(long n, int r, const Real& p, std::uint64_t seed) {
    Hypergraph h(n, r);
    const std::uint64_t thr = detail::inclusion_threshold(p);
    const bool always = p >= Real(1L);
    std::mt19937_64 rng(seed);

    std::vector<long> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
        const std::uint64_t draw = rng();
        if (always || draw < thr) h.add_edge(combo);
        int i = r - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    return h;
}

} // namespace cliquex
