#include "support/oracles.hpp"

#include "resonance/errors.hpp"
#include "resonance/koszul.hpp"
#include "resonance/raag.hpp"

#include <doctest.h>

#include <algorithm>

using namespace resonance;

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(4, i - 1); }

}  // namespace

TEST_SUITE("raag") {

TEST_CASE("graph constructors") {
    CHECK(Graph::complete(5).edges().size() == 10);
    CHECK(Graph::discrete(5).edges().empty());
    CHECK(Graph::path(4).edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(Graph::cycle(4).has_edge(3, 0));
    const Graph j = Graph::join(Graph::discrete(3), Graph::discrete(2));
    CHECK(j.n() == 5);
    CHECK(j.edges().size() == 6);
    CHECK(j.edges() == Graph::complete_multipartite({3, 2}).edges());
    CHECK(Graph::from_code(3, 0b101).edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("pair spec of a graph") {
    const PairSpec s = graph_to_pairspec(Graph::path(4));
    CHECK(s.k_dim() == 3);
    CHECK(s.kperp().contains(Bivector::basis(4, 0, 2).coords));
    CHECK(s.kperp().contains(Bivector::basis(4, 0, 3).coords));
    CHECK(s.kperp().contains(Bivector::basis(4, 1, 3).coords));
    CHECK(graph_to_pairspec(Graph::complete(4)).kperp_dim() == 0);
}

TEST_CASE("components of the path on four vertices") {
    const Graph p4 = Graph::path(4);
    const auto comps = resonance_components(p4).components;
    CHECK(comps == std::vector<VertexSet>{{0, 1, 3}, {0, 2, 3}});
    CHECK(generic_coordinate_components(p4).components == comps);
    for (const auto& c : comps) {
        CHECK_FALSE(component_is_isotropic(p4, c));
        CHECK_FALSE(component_is_separable(p4, c));
    }
    CHECK_THROWS_AS(component_is_isotropic(p4, {0, 1}), std::invalid_argument);
}

TEST_CASE("components of joins of discrete graphs") {
    const Graph c4 = Graph::cycle(4);
    CHECK(resonance_components(c4).components == std::vector<VertexSet>{{0, 2}, {1, 3}});
    for (const auto& c : resonance_components(c4).components) {
        CHECK(component_is_isotropic(c4, c));
        CHECK(component_is_separable(c4, c));
    }
    const Graph j = Graph::complete_multipartite({3, 2});
    CHECK(resonance_components(j).components == std::vector<VertexSet>{{0, 1, 2}, {3, 4}});
    CHECK(resonance_components(Graph::complete(5)).components.empty());
    CHECK(resonance_components(Graph::discrete(3)).components == std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("combinatorial components match the union-find reference") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::uint64_t codes = 1ULL << pair_count(n);
        for (std::uint64_t code = 0; code < codes; ++code) {
            const Graph g = Graph::from_code(n, code);
            CHECK(resonance_components(g).components == oracle::graph_components(g));
        }
    }
}

TEST_CASE("generic route agrees on small graphs") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::uint64_t codes = 1ULL << pair_count(n);
        for (std::uint64_t code = 0; code < codes; ++code) {
            const Graph g = Graph::from_code(n, code);
            CHECK(generic_coordinate_components(g).components == resonance_components(g).components);
        }
    }
}

TEST_CASE("isotropy and separability follow the combinatorial criteria") {
    for (std::uint64_t code = 0; code < (1ULL << pair_count(5)); code += 7) {
        const Graph g = Graph::from_code(5, code);
        for (const auto& c : resonance_components(g).components) {
            bool discrete = true;
            for (std::size_t a = 0; a < c.size(); ++a)
                for (std::size_t b = a + 1; b < c.size(); ++b) discrete &= !g.has_edge(c[a], c[b]);
            bool joined = true;
            for (std::size_t v = 0; v < g.n(); ++v) {
                if (std::find(c.begin(), c.end(), v) != c.end()) continue;
                for (auto u : c) joined &= g.has_edge(u, v);
            }
            CHECK(component_is_isotropic(g, c) == discrete);
            CHECK(component_is_separable(g, c) == joined);
        }
    }
}

TEST_CASE("vertex guard") {
    CHECK_THROWS_AS(resonance_components(Graph::discrete(kRaagVertexGuard + 1)), GuardExceeded);
    CHECK_NOTHROW(resonance_components(Graph::complete(kRaagVertexGuard + 1), true));
}

TEST_CASE("theta matrix of the path on four vertices") {
    const ThetaMatrix t = theta_matrix(Graph::path(4));
    using Triple = std::array<std::size_t, 3>;
    CHECK(t.rows == std::vector<Triple>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(t.cols == std::vector<Graph::Edge>{{0, 2}, {0, 3}, {1, 3}});
    const MultiPoly z = MultiPoly::constant(4, 0);
    const std::vector<std::vector<MultiPoly>> expected{
        {-x(2), z, z}, {z, -x(2), x(1)}, {x(4), -x(3), z}, {z, z, -x(3)}};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(t.matrix(r, c) == expected[r][c]);
}

TEST_CASE("theta matrix extremes") {
    const ThetaMatrix complete = theta_matrix(Graph::complete(4));
    CHECK(complete.rows.empty());
    CHECK(complete.cols.empty());
    const ThetaMatrix d3 = theta_matrix(Graph::discrete(3));
    CHECK(d3.rows.size() == 1);
    CHECK(d3.cols.size() == 3);
}

TEST_CASE("theta cokernel matches the Koszul engine") {
    const auto rows = raag_crosscheck(Graph::path(4), 4);
    std::vector<std::size_t> dims;
    for (const auto& r : rows) dims.push_back(r.engine);
    CHECK(dims == std::vector<std::size_t>{3, 8, 15, 24, 35});
    for (const auto& r : raag_crosscheck(Graph::discrete(3), 3))
        CHECK(r.engine == oracle::wq_dim(PairSpec::from_k(3, {}), static_cast<int>(r.q)));
    for (const auto& r : raag_crosscheck(Graph::complete(4), 3)) CHECK(r.engine == 0);
}

}
