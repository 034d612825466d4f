// graph.hpp - sampled instances: bitset-adjacency graphs and r-uniform hypergraphs
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "cliquex/errors.hpp"

namespace cliquex {

using VertexSet = boost::dynamic_bitset<>;

// Simple undirected graph, loop-free, adjacency kept as one bitset row per vertex.
class Graph {
public:
    explicit Graph(long n) : n_(n) {
        if (n < 1) throw DomainError("graph needs at least one vertex");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    }

    long vertex_count() const { return n_; }

    void add_edge(long u, long v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("self-loops are not allowed");
        adj_[u].set(static_cast<std::size_t>(v));
        adj_[v].set(static_cast<std::size_t>(u));
    }

    bool has_edge(long u, long v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(static_cast<std::size_t>(v));
    }

    const VertexSet& neighbors(long v) const {
        check_vertex(v);
        return adj_[v];
    }

    long edge_count() const {
        std::size_t twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return static_cast<long>(twice / 2);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(long v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
    }
    long n_;
    std::vector<VertexSet> adj_;
};

// r-uniform hypergraph: a set of r-element vertex subsets. Edges are stored
// sorted; membership queries use a packed bitmask key. Instances are capped at
// 64 vertices, which is ample for every census this library can afford (the
// analytic modules, not instances, cover large n).
class Hypergraph {
public:
    Hypergraph(long n, int r) : n_(n), r_(r) {
        if (n < 1) throw DomainError("hypergraph needs at least one vertex");
        if (r < 2 || r > n) throw DomainError("uniformity r must satisfy 2 <= r <= n");
        if (n > 64) throw ResourceLimitError("hypergraph instances are limited to 64 vertices");
    }

    long vertex_count() const { return n_; }
    int uniformity() const { return r_; }

    void add_edge(std::vector<long> vertices) {
        std::sort(vertices.begin(), vertices.end());
        if (static_cast<int>(vertices.size()) != r_)
            throw DomainError("hyperedge must have exactly r vertices");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0 || vertices[i] >= n_)
                throw DomainError("vertex index out of range");
            if (i > 0 && vertices[i] == vertices[i - 1])
                throw DomainError("hyperedge vertices must be distinct");
        }
        if (edge_set_.insert(mask_of(vertices)).second) edges_.push_back(std::move(vertices));
    }

    bool has_edge(const std::vector<long>& vertices) const {
        if (static_cast<int>(vertices.size()) != r_) return false;
        return edge_set_.count(mask_of(vertices)) != 0;
    }

    bool has_edge_mask(std::uint64_t mask) const { return edge_set_.count(mask) != 0; }

    const std::vector<std::vector<long>>& edges() const { return edges_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edge_set_ == b.edge_set_;
    }

private:
    static std::uint64_t mask_of(const std::vector<long>& vertices) {
        std::uint64_t m = 0;
        for (long v : vertices) m |= std::uint64_t{1} << v;
        return m;
    }

    long n_;
    int r_;
    std::vector<std::vector<long>> edges_;
    std::unordered_set<std::uint64_t> edge_set_;
};

// --- edge-list fixtures (debug/test format) ------------------------------
//
// Graph: header "<n> <edge_count>", then one 1-indexed "u v" pair per line.
// Hypergraph: header "<n> <r> <edge_count>", then r vertices per line.

inline void write_edge_list(const Graph& g, std::ostream& os) {
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (long u = 0; u < g.vertex_count(); ++u)
        for (long v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) os << (u + 1) << " " << (v + 1) << "\n";
    if (!os) throw IoError("failed writing edge list");
}

inline Graph read_edge_list(std::istream& is) {
    long n = 0, m = 0;
    if (!(is >> n >> m)) throw IoError("bad edge-list header");
    Graph g(n);
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(is >> u >> v)) throw IoError("truncated edge list");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

inline void write_edge_list(const Hypergraph& h, std::ostream& os) {
    os << h.vertex_count() << " " << h.uniformity() << " " << h.edge_count() << "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << (e[i] + 1);
        os << "\n";
    }
    if (!os) throw IoError("failed writing edge list");
}

inline Hypergraph read_hyper_edge_list(std::istream& is) {
    long n = 0, m = 0;
    int r = 0;
    if (!(is >> n >> r >> m)) throw IoError("bad hypergraph edge-list header");
    Hypergraph h(n, r);
    for (long i = 0; i < m; ++i) {
        std::vector<long> e(static_cast<std::size_t>(r));
        for (auto& v : e) {
            if (!(is >> v)) throw IoError("truncated hypergraph edge list");
            --v;
        }
        h.add_edge(std::move(e));
    }
    return h;
}

} // namespace cliquex
