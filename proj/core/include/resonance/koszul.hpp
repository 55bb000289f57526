#pragma once

#include "resonance/multilinear.hpp"
#include "resonance/multipoly.hpp"
#include "resonance/sparse.hpp"

#include <cstddef>
#include <vector>

namespace resonance {

// Largest allowed n * C(n+q, q+1) (the V⊗S_{q+1} dimension) without --force.
inline constexpr std::size_t kMatrixDimensionGuard = 50'000;

// Largest presentation (generators, nonzero relation rows) for Fitting minors without --force.
inline constexpr std::size_t kFittingGuard = 12;

struct EngineOptions {
    RankMode mode = RankMode::Modular;
    bool force = false;
};

// Throws GuardExceeded when the degree-q matrices exceed kMatrixDimensionGuard.
void check_degree_guard(std::size_t n, std::size_t q, bool force);

// dim W_q(V,K) as homology of K⊗S_q -> V⊗S_{q+1} -> S_{q+2}.
std::size_t wq_dim_homology(const PairSpec& spec, std::size_t q, const EngineOptions& opts = {});

// dim W_q(V,K) as the degree-q cokernel of Λ³V⊗S(-1) -> (Λ²V/K)⊗S.
std::size_t wq_dim_cokernel(const PairSpec& spec, std::size_t q, const EngineOptions& opts = {});

struct HilbertRow {
    std::size_t q = 0;
    std::size_t dim_homology = 0;
    std::size_t dim_cokernel = 0;
};

struct HilbertTable {
    PairSpec spec;
    std::vector<HilbertRow> rows;
};

// Rows q = 0..q_max by both routes. Throws CrossCheckFailure if they disagree.
HilbertTable hilbert_table(const PairSpec& spec, std::size_t q_max, const EngineOptions& opts = {});

// Relation matrix of W = coker(Λ³V⊗S(-1) -> (Λ²V/K)⊗S): one row per triple
// (i<j<k, lexicographic), one column per K^⊥ basis vector phi, entry
// phi(jk) x_i - phi(ik) x_j + phi(ij) x_k.
PolyMatrix presentation_matrix(const PairSpec& spec);

// Degree-d part of Ann W(V,K). W is generated in degree 0 by the image of
// Λ²V, so f annihilates W iff f·δ2(w) lies in δ2(K⊗S_d) for each w in a
// basis of a complement of K; all generators share the unknown f in one
// linear system.
IdealSlice annihilator_slice(const PairSpec& spec, std::size_t d);

struct FittingOptions {
    bool force = false;
};

// Maximal minors of presentation_matrix (size = dim Λ²V/K), zero minors
// dropped. The zero module reports the unit ideal {1}. Throws GuardExceeded
// when the presentation exceeds kFittingGuard and force is unset.
std::vector<MultiPoly> fitting_generators(const PairSpec& spec, const FittingOptions& opts = {});

}  // namespace resonance
