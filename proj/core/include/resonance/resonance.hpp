#pragma once

#include "resonance/exact_linalg.hpp"
#include "resonance/koszul.hpp"
#include "resonance/multilinear.hpp"
#include "resonance/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace resonance {

// A linear subspace of V^∨, given by coordinate vectors in the e-basis.
class SubspaceSpec {
public:
    SubspaceSpec() = default;
    // Throws std::invalid_argument on dependent vectors, wrong lengths or an empty list.
    SubspaceSpec(std::size_t n, const std::vector<RationalVector>& basis);

    // span{e_i : i in indices}, 0-based.
    static SubspaceSpec coordinate(std::size_t n, const std::vector<std::size_t>& indices);

    std::size_t n() const { return basis_.ambient_dim(); }
    std::size_t dim() const { return basis_.dim(); }
    const SubspaceBasis& basis() const { return basis_; }
    const RationalVector& operator[](std::size_t i) const { return basis_[i]; }

    // n x dim, columns are the basis vectors.
    Matrix as_columns() const { return basis_.as_columns(); }

private:
    SubspaceBasis basis_;
};

// {b in V^∨ : a∧b in K^⊥}. Throws std::invalid_argument when a = 0.
SubspaceBasis h_a(const PairSpec& spec, const RationalVector& a);

// a in R(V,K): dim h_a > 1, or a = 0.
bool in_resonance(const PairSpec& spec, const RationalVector& a);

// Checks that comp ⊆ R(V,K) on its basis vectors and `samples` random
// integer combinations drawn from `seed`.
bool component_in_resonance(const PairSpec& spec, const SubspaceSpec& comp, std::size_t samples = 8,
                            std::uint64_t seed = 1);

// A wedge c_s∧c_t of basis vectors outside K^⊥, if any.
std::optional<Bivector> isotropy_witness(const PairSpec& spec, const SubspaceSpec& comp);
bool check_isotropic(const PairSpec& spec, const SubspaceSpec& comp);

// An element of K^⊥ ∩ (V̄^∨∧V^∨) outside Λ²V̄^∨, if any.
std::optional<Bivector> separability_witness(const PairSpec& spec, const SubspaceSpec& comp);

// Subspace route. Throws CrossCheckFailure if check_separable_pm disagrees.
bool check_separable(const PairSpec& spec, const SubspaceSpec& comp);

// Adapted-basis route: surjectivity of p_M : K ∩ ker(Λ²π) -> M. When p_M is
// not surjective and `witness` is given, it receives an element of
// K^⊥ ∩ (V̄^∨∧V^∨) outside Λ²V̄^∨ in the original coordinates.
bool check_separable_pm(const PairSpec& spec, const SubspaceSpec& comp,
                        std::optional<Bivector>* witness = nullptr);

// Injectivity of μ : V̄^∨ ⊗ U^∨ -> K^∨. False for non-isotropic comp.
// The witness is the isotropy witness, or Σ α_st c_s∧u_t for a kernel element of μ.
bool check_strongly_isotropic(const PairSpec& spec, const SubspaceSpec& comp,
                              std::optional<Bivector>* witness = nullptr);

// (V̄, K̄) with K̄ = Λ²π(K), π: V -> V̄ dual to comp ⊆ V^∨.
PairSpec project_component(const PairSpec& spec, const SubspaceSpec& comp);

struct ComponentReport {
    SubspaceSpec subspace;
    bool isotropic = false;
    bool separable = false;
    bool strongly_isotropic = false;
    std::size_t kbar_dim = 0;
    std::optional<Bivector> isotropy_witness;
    std::optional<Bivector> separability_witness;
};

// All checks by both routes. Throws CrossCheckFailure on any disagreement.
ComponentReport analyze_component(const PairSpec& spec, const SubspaceSpec& comp);

struct DecompositionRow {
    std::size_t q = 0;
    std::size_t total = 0;               // dim W_q(V,K)
    std::vector<std::size_t> parts;      // dim W_q(V̄_t,K̄_t)
    std::size_t sum = 0;
    bool agrees() const { return total == sum; }
};

struct DecompositionReport {
    std::vector<SubspaceSpec> components;
    std::vector<DecompositionRow> rows;  // q = 0..q_max
    std::optional<std::size_t> first_agreement_q;
    bool pairwise_disjoint = true;       // comp_s ∩ comp_t = 0 for s != t
};

// Throws std::invalid_argument naming the first non-separable component.
DecompositionReport verify_decomposition(const PairSpec& spec, const std::vector<SubspaceSpec>& components,
                                         std::size_t q_max, const EngineOptions& opts = {});

// Generators of the linear ideal of P(comp): ker(π) ⊆ V = S_1.
std::vector<MultiPoly> component_ideal(const SubspaceSpec& comp);

struct ReducednessRow {
    std::size_t d = 0;
    std::size_t ann_dim = 0;
    std::size_t intersection_dim = 0;
    bool equal = false;
};

struct ReducednessReport {
    std::vector<ReducednessRow> rows;
    bool all_equal() const;
};

// Compares Ann_d W(V,K) with (∩_t I_t)_d for d = d_min..d_max.
ReducednessReport reducedness_window(const PairSpec& spec, const std::vector<SubspaceSpec>& components,
                                     std::size_t d_min, std::size_t d_max);

}  // namespace resonance
