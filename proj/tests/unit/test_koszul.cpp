#include "support/oracles.hpp"

#include "resonance/closed_forms.hpp"
#include "resonance/errors.hpp"
#include "resonance/koszul.hpp"
#include "resonance/raag.hpp"

#include <doctest.h>

#include <random>

using namespace resonance;

namespace {

PairSpec full_k(std::size_t n) { return PairSpec::from_kperp(n, {}); }
PairSpec zero_k(std::size_t n) { return PairSpec::from_k(n, {}); }

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("both routes match the reference complex on random instances") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const PairSpec s = oracle::random_spec(rng, n, rng() % (pair_count(n) + 1));
        const std::size_t q = rng() % 3;
        const std::size_t expected = oracle::wq_dim(s, static_cast<int>(q));
        CHECK(oracle::wq_dim_presentation(s, static_cast<int>(q)) == expected);
        CHECK(wq_dim_homology(s, q) == expected);
        CHECK(wq_dim_cokernel(s, q) == expected);
        CHECK(wq_dim_homology(s, q, {RankMode::Exact, false}) == expected);
    }
}

TEST_CASE("free module: dim W_q(V,0) = (q+1) C(q+n, q+2)") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t q = 0; q <= 4; ++q) {
            const BigInt expected = free_koszul_dim(n, q);
            CHECK(BigInt(static_cast<unsigned long>(wq_dim_homology(zero_k(n), q))) == expected);
            CHECK(BigInt(static_cast<unsigned long>(wq_dim_cokernel(zero_k(n), q))) == expected);
        }
    // n = 2: 1, 2, 3, 4, 5
    const auto table = hilbert_table(zero_k(2), 4);
    for (std::size_t q = 0; q <= 4; ++q) CHECK(table.rows[q].dim_homology == q + 1);
}

TEST_CASE("K = Λ²V gives the zero module") {
    for (std::size_t q = 0; q <= 4; ++q) {
        CHECK(wq_dim_homology(full_k(4), q) == 0);
        CHECK(wq_dim_cokernel(full_k(4), q) == 0);
    }
}

TEST_CASE("P4: W_0 has dimension 3") {
    const PairSpec p4 = graph_to_pairspec(Graph::path(4));
    CHECK(wq_dim_homology(p4, 0) == 3);
    CHECK(hilbert_table(p4, 3).rows.size() == 4);
}

TEST_CASE("degree guard") {
    CHECK_NOTHROW(check_degree_guard(6, 5, false));
    CHECK_THROWS_AS(check_degree_guard(12, 6, false), GuardExceeded);
    CHECK_NOTHROW(check_degree_guard(12, 6, true));
    CHECK_THROWS_AS(wq_dim_homology(zero_k(12), 6), GuardExceeded);
}

TEST_CASE("presentation matrix of the discrete graph on three vertices") {
    const PolyMatrix m = presentation_matrix(zero_k(3));
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 3);
    const MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1), x3 = MultiPoly::variable(3, 2);
    // K^⊥ basis of the zero subspace is the coordinate basis (12), (13), (23).
    CHECK(m(0, 0) == x3);
    CHECK(m(0, 1) == -x2);
    CHECK(m(0, 2) == x1);
}

TEST_CASE("annihilator slices match the presentation-side reference") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const PairSpec s = oracle::random_spec(rng, n, rng() % (pair_count(n) + 1));
        for (std::size_t d = 0; d <= 2; ++d) {
            const auto ref = oracle::annihilator(s, static_cast<int>(d));
            const SubspaceBasis ours = annihilator_slice(s, d).subspace();
            CHECK(same_subspace(ours, SubspaceBasis::span(sym_dim(n, d), ref)));
        }
    }
}

TEST_CASE("P4 annihilator and Fitting ideal") {
    const PairSpec p4 = graph_to_pairspec(Graph::path(4));
    CHECK(annihilator_slice(p4, 0).basis.empty());
    CHECK(annihilator_slice(p4, 1).basis.empty());
    const auto ann2 = annihilator_slice(p4, 2);
    const MultiPoly x2x3 = MultiPoly::variable(4, 1) * MultiPoly::variable(4, 2);
    REQUIRE(ann2.basis.size() == 1);
    CHECK(same_subspace(ann2.subspace(), ideal_slice({x2x3}, 4, 2)));

    const auto fitt = fitting_generators(p4);
    CHECK(fitt.size() == 4);
    CHECK(same_subspace(ideal_slice(fitt, 4, 3), ideal_slice({x2x3}, 4, 3)));
    for (const auto& f : fitt) CHECK(f.degree() == 3);
}

TEST_CASE("Fitting minors agree with permutation expansion") {
    std::mt19937_64 rng(23);
    const PairSpec s = oracle::random_spec(rng, 4, 4);  // dim Λ²V/K = 2
    const PolyMatrix p = presentation_matrix(s);
    std::vector<MultiPoly> expected;
    for (std::size_t a = 0; a < p.rows(); ++a)
        for (std::size_t b = a + 1; b < p.rows(); ++b) {
            const MultiPoly det = oracle::leibniz({{p(a, 0), p(a, 1)}, {p(b, 0), p(b, 1)}}, 4);
            if (!det.is_zero()) expected.push_back(det);
        }
    CHECK(fitting_generators(s) == expected);
}

TEST_CASE("Fitting ideal edge cases") {
    const auto unit = fitting_generators(full_k(4));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == MultiPoly::constant(4, 1));
    CHECK_THROWS_AS(fitting_generators(zero_k(6)), GuardExceeded);
    // One generator and no relations: no 1x1 minor exists.
    CHECK(fitting_generators(PairSpec::from_kperp(2, {Bivector::basis(2, 0, 1)})).size() == 0);
}

TEST_CASE("modular and exact modes agree on surfaces") {
    const PairSpec s = surface_spec(2);
    for (std::size_t q = 0; q <= 4; ++q)
        CHECK(wq_dim_homology(s, q, {RankMode::Modular, false}) == wq_dim_homology(s, q, {RankMode::Exact, false}));
}

}
