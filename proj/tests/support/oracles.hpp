#pragma once

// Reference implementations for tests. Everything here is built directly
// from definitions with plain Gauss-Jordan elimination over Q and shares no
// code with the library beyond the number types and PairSpec inputs.

#include "resonance/multilinear.hpp"
#include "resonance/raag.hpp"
#include "resonance/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using resonance::BigInt;
using resonance::Rational;
using Dense = std::vector<std::vector<Rational>>;  // row-major

std::size_t rank(Dense m);

// Basis of {x : m x = 0}; m has `cols` columns.
std::vector<std::vector<Rational>> kernel(Dense m, std::size_t cols);

// Degree-q monomials in n variables, x1^q first (lexicographic, x1 > ... > xn).
std::vector<std::vector<int>> monomials(int n, int q);
std::map<std::vector<int>, std::size_t> monomial_index(int n, int q);

// dim W_q(V,K) = dim ker(δ1) - rank(δ2|K) from freshly built dense matrices.
std::size_t wq_dim(const resonance::PairSpec& spec, int q);

// dim W_q from the presentation Λ³V⊗S_{q-1} -> (Λ²V/K)⊗S_q.
std::size_t wq_dim_presentation(const resonance::PairSpec& spec, int q);

// Degree-d annihilator of W computed from the presentation: f with
// f·g_l in the image for every generator g_l. Returns its dimension and a basis.
std::vector<std::vector<Rational>> annihilator(const resonance::PairSpec& spec, int d);

// a ∈ R(V,K) iff the n x dim K matrix (b ↦ <a∧b, κ>) has rank < n - 1.
bool in_resonance(const resonance::PairSpec& spec, const std::vector<Rational>& a);

BigInt binomial(int n, int k);     // Pascal's triangle
BigInt catalan(int m);              // recurrence C_{m+1} = Σ C_i C_{m-i}

// Components of a graph's resonance variety: maximal disconnected induced
// subgraphs, by union-find on every vertex subset.
std::vector<std::vector<std::size_t>> graph_components(const resonance::Graph& g);

// Determinant by permutation expansion of a square matrix of polynomials.
resonance::MultiPoly leibniz(const std::vector<std::vector<resonance::MultiPoly>>& m, std::size_t nvars);

// Random K ⊆ Λ²V of the given dimension with small integer entries.
resonance::PairSpec random_spec(std::mt19937_64& rng, std::size_t n, std::size_t k_dim);

// Random subspace of V^∨ of dimension d, sometimes coordinate, sometimes generic.
std::vector<std::vector<Rational>> random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t d);

}  // namespace oracle
