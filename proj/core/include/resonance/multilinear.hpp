#pragma once

#include "resonance/exact_linalg.hpp"
#include "resonance/matrix.hpp"
#include "resonance/rational.hpp"
#include "resonance/sparse.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace resonance {

using Exponents = std::vector<std::uint32_t>;

// Basis orderings used by every matrix in the library:
//   Sym^q V  monomials in lexicographic order with x1 > x2 > ... > xn,
//            so x1^q comes first and xn^q last;
//   Λ²V      pairs (i,j), i<j, lexicographic;
//   Λ³V      triples (i,j,k), i<j<k, lexicographic;
//   A⊗Sym^q  index(a, m) = a * sym_dim(n,q) + monomial_rank(m).
// Indices are 0-based internally; files and reports are 1-based.

std::size_t sym_dim(std::size_t n, std::size_t q);

// Exact for n + q below 68; callers stay far below that.
std::size_t binomial_size(std::size_t n, std::size_t k);

struct MonoIndex {
    Exponents exponents;
    std::uint32_t degree() const;
};

std::size_t monomial_rank(const Exponents& exps);
Exponents monomial_unrank(std::size_t n, std::size_t q, std::size_t index);
std::vector<Exponents> monomials(std::size_t n, std::size_t q);

std::size_t pair_count(std::size_t n);
std::size_t triple_count(std::size_t n);
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t n);
std::vector<std::array<std::size_t, 2>> pairs(std::size_t n);
std::vector<std::array<std::size_t, 3>> triples(std::size_t n);

// Element of Λ²V or Λ²V^∨ in the pair basis.
struct Bivector {
    std::size_t n = 0;
    RationalVector coords;

    static Bivector zero(std::size_t n);
    static Bivector basis(std::size_t n, std::size_t i, std::size_t j);
    Rational at(std::size_t i, std::size_t j) const;  // antisymmetric accessor
    bool is_zero() const { return resonance::is_zero(coords); }
};

struct Trivector {
    std::size_t n = 0;
    RationalVector coords;
};

// a∧b for coordinate vectors a, b of length n.
Bivector wedge(const RationalVector& a, const RationalVector& b);

// Coordinate pairing <v_i∧v_j, e_k∧e_l> = δ.
Rational pair(const Bivector& k, const Bivector& kperp);

// K ⊆ Λ²V together with its annihilator K^⊥ ⊆ Λ²V^∨.
class PairSpec {
public:
    PairSpec() = default;

    static PairSpec from_k(std::size_t n, const std::vector<Bivector>& k_basis);
    static PairSpec from_kperp(std::size_t n, const std::vector<Bivector>& kperp_basis);

    std::size_t n() const { return n_; }
    std::size_t k_dim() const { return k_.dim(); }
    std::size_t kperp_dim() const { return kperp_.dim(); }

    const SubspaceBasis& k() const { return k_; }
    const SubspaceBasis& kperp() const { return kperp_; }
    std::vector<Bivector> k_basis() const;
    std::vector<Bivector> kperp_basis() const;

    // Basis vectors scaled to primitive integer vectors (for the sparse builders).
    const std::vector<std::vector<BigInt>>& k_integral() const { return k_int_; }
    const std::vector<std::vector<BigInt>>& kperp_integral() const { return kperp_int_; }

private:
    PairSpec(std::size_t n, SubspaceBasis k, SubspaceBasis kperp);

    std::size_t n_ = 0;
    SubspaceBasis k_;
    SubspaceBasis kperp_;
    std::vector<std::vector<BigInt>> k_int_;
    std::vector<std::vector<BigInt>> kperp_int_;
};

struct PartialPairSpec {
    std::size_t n = 0;
    std::optional<std::vector<Bivector>> k_basis;
    std::optional<std::vector<Bivector>> kperp_basis;
};

// Fills in the missing side as the null space of the pairing matrix. Throws
// std::invalid_argument if both or neither side is supplied, or the supplied
// vectors are dependent.
PairSpec complete_perp(const PartialPairSpec& partial);

// Koszul differentials, graded pieces of the degree-q complex
//   Λ³V⊗S_{q-1} --δ3--> Λ²V⊗S_q --δ2--> V⊗S_{q+1} --δ1--> S_{q+2}.
SparseMatrix delta1_sparse(std::size_t n, std::size_t q);
SparseMatrix delta2_sparse(std::size_t n, std::size_t q);
SparseMatrix delta3_sparse(std::size_t n, std::size_t q);

Matrix delta1_matrix(std::size_t n, std::size_t q);
Matrix delta2_matrix(std::size_t n, std::size_t q);
Matrix delta3_matrix(std::size_t n, std::size_t q);

// δ2 restricted to K⊗S_q; columns indexed (k-basis index, monomial).
SparseMatrix delta2_on_k(const PairSpec& spec, std::size_t q);

// δ3 followed by Λ²V⊗S_q -> (Λ²V/K)⊗S_q, with Λ²V/K coordinatized by the
// K^⊥ basis; rows indexed (K^⊥ basis index, monomial).
SparseMatrix delta3_mod_k(const PairSpec& spec, std::size_t q);

// Λ²p for p: Q^n -> Q^m, a C(m,2) x C(n,2) matrix.
Matrix wedge_square_map(const Matrix& p);

}  // namespace resonance
