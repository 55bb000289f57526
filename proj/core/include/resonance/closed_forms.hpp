#pragma once

#include "resonance/koszul.hpp"
#include "resonance/multilinear.hpp"
#include "resonance/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace resonance {

// Dimensions of the linear components of a resonance variety.
struct ChenProfile {
    std::vector<std::size_t> component_dims;
};

// dim W_q(V,0) = (q+1) C(q+n, q+2).
BigInt free_koszul_dim(std::size_t n, std::size_t q);

// Σ_t (q-1) C(q+d_t-2, q); requires q ≥ 2 and every d_t ≥ 1.
BigInt chen_rank_strongly_isotropic(const ChenProfile& profile, std::size_t q);

// Chen ranks of the genus-g surface group: 2g, 2g²-g-1, then
// (q-1) C(2g+q-2, q) - C(2g+q-3, q-2) for q ≥ 3. Requires g ≥ 2, q ≥ 1.
BigInt chen_rank_surface(std::size_t g, std::size_t q);

// Double Kodaira fibration with base genera b1, b2; requires b1, b2 ≥ 2, q ≥ 3.
BigInt chen_rank_kodaira(std::size_t b1, std::size_t b2, std::size_t q);

// Σ_g h_g θ_q(Π_g), the right side of the Chen ranks conjecture for Kähler
// groups (conjectural). Keys are genera ≥ 2.
BigInt kahler_conjecture_rhs(const std::map<std::size_t, std::size_t>& genus_counts, std::size_t q);

// Smallest a with a nonzero subpencil count: ceil((g+2)/2).
std::size_t subpencil_min_a(std::size_t g);

// (2^{2a-g-2}/(g+1)) · (g+1)!/((g-a+1)!(g-a+2)!(2a-g-2)!). Throws
// std::invalid_argument outside ceil((g+2)/2) ≤ a ≤ g+1 and ExactnessError
// if the division is not exact.
BigInt subpencil_count(std::size_t g, std::size_t a);

struct GrassmannianIdentity {
    BigInt lhs;  // Σ_a subpencil_count(g, a)
    BigInt rhs;  // (2g+2)!/((g+1)!(g+2)!)
    bool equal = false;
};

GrassmannianIdentity grassmannian_degree_identity(std::size_t g);

// coefficient · θ^theta_power; count = coefficient · g! when theta_power = g.
struct PorteousClass {
    Rational coefficient;
    std::size_t theta_power = 0;
    std::optional<BigInt> count;
};

// 2^{2g+2a-d-1} θ^{4g-d+1} / ((2g+2a-d-1)! (g-a+1)! (g-a+2)!). Throws
// std::invalid_argument unless g ≥ 1, 1 ≤ a ≤ g+1, 2g+2a-d-1 ≥ 0 and
// d ≤ 4g+1; ExactnessError if the degree-zero count is not an integer.
PorteousClass porteous_coefficient(std::size_t g, std::size_t a, std::size_t d);

// dim W_{q-2}(V,K); a Chen rank under 1-formality. Requires q ≥ 2.
BigInt chen_rank_via_engine(const PairSpec& spec, std::size_t q, const EngineOptions& opts = {});

// n = 2g, K spanned by Σ_i v_i∧v_{g+i}.
PairSpec surface_spec(std::size_t g);

}  // namespace resonance
