#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

#include "gcg/gcs.hpp"
#include "gcg/group.hpp"

namespace gcg {

// An undirected graph over vertices 0..n-1 with 0/1 adjacency.  The diagonal
// may be set only when loops were allowed at construction.  Builders fill the
// edge set once; instances are treated as immutable afterwards.
class SimpleGraph {
public:
    SimpleGraph(int n, bool loops_allowed, std::vector<std::string> labels);

    int size() const { return n_; }
    bool loops_allowed() const { return loops_allowed_; }
    bool adjacent(int i, int j) const { return rows_[i].test(static_cast<std::size_t>(j)); }
    void add_edge(int i, int j);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    int degree(int i) const { return static_cast<int>(rows_[i].count()); }
    int max_degree() const;
    long long edge_count() const;  // undirected edges; loops count once
    std::vector<std::pair<int, int>> edges() const;  // (i, j) with i <= j, sorted
    const boost::dynamic_bitset<>& row(int i) const { return rows_[i]; }

    // Same vertex count, labels and adjacency (the loops flag is not compared).
    bool operator==(const SimpleGraph& o) const;
    bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

private:
    int n_;
    bool loops_allowed_;
    std::vector<std::string> labels_;
    std::vector<boost::dynamic_bitset<>> rows_;
};

// g ~ h  iff  alpha(g^-1) h in S.  Loop-free and |S|-regular; the symmetry of
// the edge relation is re-verified (InternalAsymmetry on any violation).
SimpleGraph build_gc_graph(const GCSubset& s);

// g ~ gt for t in T with T = T^-1 (NotSymmetricSet otherwise); a loop at
// every vertex whenever e is in T.
SimpleGraph build_cayley_graph(const FiniteGroup& g, const ElementSet& t);

// g ~ h iff gh in S, for abelian G and square-free S (NotAbelian /
// NotSquareFree with witness).  Loop-free: g = h would force a square into S.
SimpleGraph build_cayley_sum_graph(const FiniteGroup& g, const ElementSet& s);

// Tensor/direct product: (x1,y1) ~ (x2,y2) iff x1 ~ x2 and y1 ~ y2.
// Vertex (i, j) becomes index i*|Y|+j; labels are joined as flat tuples.
SimpleGraph direct_product_graph(const SimpleGraph& x, const SimpleGraph& y);

// BFS components in vertex order (each component ascending).
std::vector<std::vector<int>> connected_components(const SimpleGraph& x);

struct BipartiteCertificate {
    bool bipartite;
    // When bipartite: a 0/1 coloring per vertex.
    std::vector<int> coloring;
    // Otherwise: vertices c0..c_{L-1} of an odd closed cycle (consecutive
    // vertices adjacent, last adjacent to first; a loop yields L = 1).
    std::vector<int> odd_cycle;
};

BipartiteCertificate is_bipartite(const SimpleGraph& x);

// "dot": node statements for isolated vertices, then one line per edge with
// smaller endpoint first, all sorted by index.  "json": {n, labels, edges}.
std::string export_graph(const SimpleGraph& x, const std::string& format);

}  // namespace gcg
