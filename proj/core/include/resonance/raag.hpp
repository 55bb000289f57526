#pragma once

#include "resonance/koszul.hpp"
#include "resonance/multilinear.hpp"
#include "resonance/multipoly.hpp"
#include "resonance/resonance.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace resonance {

// Simple graph on vertices 0..n-1 (reported 1-based). At most 64 vertices.
class Graph {
public:
    using Edge = std::array<std::size_t, 2>;

    Graph() = default;
    // Edges may be given in either orientation; loops, duplicates and
    // out-of-range endpoints throw std::invalid_argument.
    Graph(std::size_t n, const std::vector<Edge>& edges);

    static Graph complete(std::size_t n);
    static Graph discrete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    // Disjoint union of the vertex sets with every cross edge added; b's vertices follow a's.
    static Graph join(const Graph& a, const Graph& b);
    static Graph complete_multipartite(const std::vector<std::size_t>& parts);
    // Graph whose edge set is the bitmask `code` over pairs(n) in lexicographic order.
    static Graph from_code(std::size_t n, std::uint64_t code);

    std::size_t n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }  // i<j, lexicographic
    bool has_edge(std::size_t i, std::size_t j) const;
    std::uint64_t neighbours(std::size_t v) const { return adjacency_[v]; }

    // Whether the subgraph induced on `mask` is connected (the empty set and single vertices are).
    bool induced_connected(std::uint64_t mask) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adjacency_;
};

using VertexSet = std::vector<std::size_t>;  // sorted, 0-based

inline constexpr std::size_t kRaagVertexGuard = 20;

struct RaagComponents {
    std::vector<VertexSet> components;  // lexicographic
};

// K = span{v_i∧v_j : ij edge}, K^⊥ = span{e_i∧e_j : ij non-edge}.
PairSpec graph_to_pairspec(const Graph& g);

// Maximal vertex subsets inducing a disconnected subgraph. Throws
// GuardExceeded above kRaagVertexGuard vertices unless force is set.
RaagComponents resonance_components(const Graph& g, bool force = false);

// Maximal coordinate subspaces contained in R(V,K) of graph_to_pairspec(g),
// found with component_in_resonance on every vertex subset. n ≤ 12.
RaagComponents generic_coordinate_components(const Graph& g);

SubspaceSpec vertex_subspace(const Graph& g, const VertexSet& subset);

// Both throw std::invalid_argument unless subset is one of resonance_components(g).
bool component_is_isotropic(const Graph& g, const VertexSet& subset);
bool component_is_separable(const Graph& g, const VertexSet& subset);

struct ThetaMatrix {
    std::vector<std::array<std::size_t, 3>> rows;  // triples with a missing edge
    std::vector<Graph::Edge> cols;                 // non-edges
    PolyMatrix matrix;
};

// Row ijk, column ij -> x_k, ik -> -x_j, jk -> x_i, other columns 0.
ThetaMatrix theta_matrix(const Graph& g);

struct RaagCrosscheckRow {
    std::size_t q = 0;
    std::size_t theta_cokernel = 0;
    std::size_t engine = 0;
};

// Degree-q cokernel of Θ against wq_dim_homology(graph_to_pairspec(g), q).
// Throws CrossCheckFailure on disagreement.
std::vector<RaagCrosscheckRow> raag_crosscheck(const Graph& g, std::size_t q_max, const EngineOptions& opts = {});

}  // namespace resonance
