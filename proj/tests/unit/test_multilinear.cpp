#include "support/oracles.hpp"

#include "resonance/multilinear.hpp"
#include "resonance/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace resonance;

TEST_SUITE("multilinear") {

TEST_CASE("monomial order matches the reference enumeration") {
    for (int n = 1; n <= 5; ++n)
        for (int q = 0; q <= 5; ++q) {
            const auto ref = oracle::monomials(n, q);
            const auto ours = monomials(n, q);
            REQUIRE(ours.size() == ref.size());
            CHECK(sym_dim(n, q) == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(std::vector<int>(ours[i].begin(), ours[i].end()) == ref[i]);
                CHECK(monomial_rank(ours[i]) == i);
                CHECK(monomial_unrank(n, q, i) == ours[i]);
            }
        }
    CHECK(monomials(3, 2).front() == Exponents{2, 0, 0});
    CHECK(monomials(3, 2).back() == Exponents{0, 0, 2});
}

TEST_CASE("pair and triple indices are lexicographic") {
    const auto prs = pairs(4);
    REQUIRE(prs.size() == 6);
    CHECK(prs[0] == std::array<std::size_t, 2>{0, 1});
    CHECK(prs[5] == std::array<std::size_t, 2>{2, 3});
    for (std::size_t p = 0; p < prs.size(); ++p) CHECK(pair_index(prs[p][0], prs[p][1], 4) == p);
    const auto trs = triples(5);
    CHECK(trs.size() == triple_count(5));
    for (std::size_t t = 0; t < trs.size(); ++t) CHECK(triple_index(trs[t][0], trs[t][1], trs[t][2], 5) == t);
}

TEST_CASE("Koszul differentials compose to zero") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t q = 1; q <= 3; ++q) {
            CHECK((delta1_matrix(n, q) * delta2_matrix(n, q)).is_zero());
            CHECK((delta2_matrix(n, q) * delta3_matrix(n, q)).is_zero());
            CHECK(delta2_sparse(n, q).to_dense() == delta2_matrix(n, q));
        }
}

TEST_CASE("δ2 and δ3 on basis elements") {
    // δ2(v1∧v2 ⊗ 1) = v2⊗x1 - v1⊗x2 with n = 2, q = 0.
    const Matrix d2 = delta2_matrix(2, 0);
    REQUIRE(d2.rows() == 4);
    REQUIRE(d2.cols() == 1);
    CHECK(d2.column(0) == RationalVector{0, -1, 1, 0});
    // δ3(v1∧v2∧v3 ⊗ 1) = (23)⊗x1 - (13)⊗x2 + (12)⊗x3.
    const Matrix d3 = delta3_matrix(3, 1);
    REQUIRE(d3.cols() == 1);
    RationalVector expected(9);
    expected[0 * 3 + 2] = 1;   // (12) ⊗ x3
    expected[1 * 3 + 1] = -1;  // (13) ⊗ x2
    expected[2 * 3 + 0] = 1;   // (23) ⊗ x1
    CHECK(d3.column(0) == expected);
}

TEST_CASE("PairSpec completes the orthogonal side") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const std::size_t k = rng() % (pair_count(n) + 1);
        const PairSpec s = oracle::random_spec(rng, n, k);
        CHECK(s.k_dim() + s.kperp_dim() == pair_count(n));
        for (const auto& a : s.k_basis())
            for (const auto& b : s.kperp_basis()) CHECK(pair(a, b) == 0);
        const PairSpec back = PairSpec::from_kperp(n, s.kperp_basis());
        CHECK(same_subspace(back.k(), s.k()));
        const PairSpec via = complete_perp(PartialPairSpec{n, s.k_basis(), std::nullopt});
        CHECK(same_subspace(via.kperp(), s.kperp()));
    }
    CHECK_THROWS_AS(complete_perp(PartialPairSpec{3, std::nullopt, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(PairSpec::from_k(3, {Bivector::basis(3, 0, 1), Bivector::basis(3, 0, 1)}), std::invalid_argument);
}

TEST_CASE("Λ² is functorial") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(3, 4), b(4, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = c(rng);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) b(i, j) = c(rng);
        CHECK(wedge_square_map(a * b) == wedge_square_map(a) * wedge_square_map(b));
    }
    CHECK(wedge_square_map(Matrix::identity(4)) == Matrix::identity(6));
}

TEST_CASE("wedge of coordinate vectors") {
    const Bivector w = wedge({1, 0, 0}, {0, 0, 1});
    CHECK(w.at(0, 2) == 1);
    CHECK(w.at(2, 0) == -1);
    CHECK(w.at(0, 1) == 0);
    CHECK(wedge({1, 2, 0}, {2, 4, 0}).is_zero());
}

TEST_CASE("polynomial arithmetic and coordinates") {
    const MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1), x3 = MultiPoly::variable(3, 2);
    const MultiPoly f = x1 * x2 - x3 * x3 * make_rational(1, 2);
    CHECK(f.to_string() == "x1*x2 - 1/2*x3^2");
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(MultiPoly::from_coordinates(3, 2, f.coordinates(2)) == f);
    CHECK((f - f).is_zero());
    CHECK_FALSE((f + x1).is_homogeneous());
    CHECK_THROWS_AS(MultiPoly(3).degree(), std::logic_error);
}

TEST_CASE("determinant agrees with permutation expansion") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t k = 1 + rng() % 4;
        PolyMatrix m(k, k, 3);
        std::vector<std::vector<MultiPoly>> ref(k, std::vector<MultiPoly>(k, MultiPoly(3)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                MultiPoly e(3);
                for (std::size_t v = 0; v < 3; ++v) e += MultiPoly::variable(3, v) * Rational(c(rng));
                m(i, j) = e;
                ref[i][j] = e;
            }
        CHECK(determinant(m) == oracle::leibniz(ref, 3));
    }
}

TEST_CASE("ideal slices of monomial ideals") {
    const std::size_t n = 4;
    const MultiPoly x2 = MultiPoly::variable(n, 1), x3 = MultiPoly::variable(n, 2);
    for (std::size_t d = 1; d <= 4; ++d) {
        // (x2)_d: monomials divisible by x2.
        CHECK(ideal_slice({x2}, n, d).dim() == sym_dim(n, d - 1));
        // (x2) ∩ (x3) = (x2 x3).
        const auto cap = intersection_slice({{x2}, {x3}}, n, d);
        CHECK(cap.dim() == (d >= 2 ? sym_dim(n, d - 2) : 0));
        CHECK(same_subspace(cap, ideal_slice({x2 * x3}, n, d)));
    }
    CHECK(intersection_slice({}, n, 2).dim() == sym_dim(n, 2));
}

}
