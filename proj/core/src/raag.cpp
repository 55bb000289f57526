#include "resonance/raag.hpp"

#include "resonance/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace resonance {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adjacency_(n, 0) {
    if (n > 64) throw std::invalid_argument("Graph: at most 64 vertices");
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
        if (i == j) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(i + 1));
        if (i > j) std::swap(i, j);
        if (adjacency_[i] >> j & 1U)
            throw std::invalid_argument("Graph: duplicate edge " + std::to_string(i + 1) + "-" +
                                        std::to_string(j + 1));
        adjacency_[i] |= std::uint64_t{1} << j;
        adjacency_[j] |= std::uint64_t{1} << i;
        edges_.push_back({i, j});
    }
    std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(std::size_t n) { return Graph(n, pairs(n)); }

Graph Graph::discrete(std::size_t n) { return Graph(n, {}); }

Graph Graph::path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("Graph::cycle: need at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph Graph::join(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [i, j] : b.edges()) e.push_back({a.n() + i, a.n() + j});
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < b.n(); ++j) e.push_back({i, a.n() + j});
    return Graph(a.n() + b.n(), e);
}

Graph Graph::complete_multipartite(const std::vector<std::size_t>& parts) {
    Graph g;
    for (std::size_t p : parts) g = join(g, discrete(p));
    return g;
}

Graph Graph::from_code(std::size_t n, std::uint64_t code) {
    const auto prs = pairs(n);
    if (prs.size() > 64) throw std::invalid_argument("Graph::from_code: too many vertex pairs");
    std::vector<Edge> e;
    for (std::size_t p = 0; p < prs.size(); ++p)
        if (code >> p & 1U) e.push_back(prs[p]);
    return Graph(n, e);
}

bool Graph::has_edge(std::size_t i, std::size_t j) const { return i < n_ && j < n_ && (adjacency_[i] >> j & 1U); }

bool Graph::induced_connected(std::uint64_t mask) const {
    if (mask == 0) return true;
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adjacency_[std::countr_zero(f)];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

namespace {

VertexSet to_set(std::uint64_t mask) {
    VertexSet out;
    for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    return out;
}

// Maximal elements of a family given by a predicate on all 2^n masks.
std::vector<VertexSet> maximal_sets(std::size_t n, const std::vector<char>& member) {
    const std::size_t full = std::size_t{1} << n;
    std::vector<char> up = member;  // up[m]: some superset of m (m included) is a member
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t m = 0; m < full; ++m)
            if (!(m >> bit & 1U) && up[m | (std::size_t{1} << bit)]) up[m] = 1;
    std::vector<VertexSet> out;
    for (std::size_t m = 0; m < full; ++m) {
        if (!member[m]) continue;
        bool maximal = true;
        for (std::size_t bit = 0; bit < n && maximal; ++bit)
            if (!(m >> bit & 1U) && up[m | (std::size_t{1} << bit)]) maximal = false;
        if (maximal) out.push_back(to_set(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (std::size_t v : s) m |= std::uint64_t{1} << v;
    return m;
}

void require_component(const Graph& g, const VertexSet& subset, const char* op) {
    const auto comps = resonance_components(g, true).components;
    VertexSet sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
        throw std::invalid_argument(std::string(op) + ": subset is not a maximal disconnected induced subgraph");
}

}  // namespace

PairSpec graph_to_pairspec(const Graph& g) {
    std::vector<Bivector> k;
    for (auto [i, j] : g.edges()) k.push_back(Bivector::basis(g.n(), i, j));
    return PairSpec::from_k(g.n(), k);
}

RaagComponents resonance_components(const Graph& g, bool force) {
    const std::size_t n = g.n();
    if (n > kRaagVertexGuard && !force)
        throw GuardExceeded("resonance_components: " + std::to_string(n) + " vertices exceeds the limit of " +
                            std::to_string(kRaagVertexGuard));
    if (n > 30) throw GuardExceeded("resonance_components: subset scan limited to 30 vertices");
    std::vector<char> disconnected(std::size_t{1} << n, 0);
    for (std::size_t m = 0; m < disconnected.size(); ++m) disconnected[m] = !g.induced_connected(m);
    return RaagComponents{maximal_sets(n, disconnected)};
}

SubspaceSpec vertex_subspace(const Graph& g, const VertexSet& subset) { return SubspaceSpec::coordinate(g.n(), subset); }

RaagComponents generic_coordinate_components(const Graph& g) {
    const std::size_t n = g.n();
    if (n > 12) throw GuardExceeded("generic_coordinate_components: limited to 12 vertices");
    const PairSpec spec = graph_to_pairspec(g);
    std::vector<char> inside(std::size_t{1} << n, 0);
    for (std::size_t m = 1; m < inside.size(); ++m) {
        // A subspace of R has all its coordinate subspaces in R.
        bool subsets_ok = true;
        for (std::size_t bit = 0; bit < n && subsets_ok; ++bit)
            if ((m >> bit & 1U) && (m & (m - 1)) && !inside[m & ~(std::size_t{1} << bit)]) subsets_ok = false;
        if (!subsets_ok) continue;
        inside[m] = component_in_resonance(spec, vertex_subspace(g, to_set(m)), 8, 0x9e3779b97f4a7c15ULL ^ m);
    }
    return RaagComponents{maximal_sets(n, inside)};
}

bool component_is_isotropic(const Graph& g, const VertexSet& subset) {
    require_component(g, subset, "component_is_isotropic");
    const std::uint64_t mask = to_mask(subset);
    for (std::size_t v : subset)
        if (g.neighbours(v) & mask) return false;
    return true;
}

bool component_is_separable(const Graph& g, const VertexSet& subset) {
    require_component(g, subset, "component_is_separable");
    const std::uint64_t mask = to_mask(subset);
    const std::uint64_t all = g.n() == 64 ? ~0ULL : (std::uint64_t{1} << g.n()) - 1;
    const std::uint64_t outside = all & ~mask;
    for (std::size_t v : subset)
        if ((g.neighbours(v) & outside) != outside) return false;
    return true;
}

ThetaMatrix theta_matrix(const Graph& g) {
    const std::size_t n = g.n();
    ThetaMatrix theta;
    for (const auto& t : triples(n))
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2])) theta.rows.push_back(t);
    for (const auto& p : pairs(n))
        if (!g.has_edge(p[0], p[1])) theta.cols.push_back(p);
    theta.matrix = PolyMatrix(theta.rows.size(), theta.cols.size(), n);
    for (std::size_t r = 0; r < theta.rows.size(); ++r) {
        const auto [i, j, k] = theta.rows[r];
        for (std::size_t c = 0; c < theta.cols.size(); ++c) {
            const Graph::Edge col = theta.cols[c];
            if (col == Graph::Edge{i, j}) theta.matrix(r, c) = MultiPoly::variable(n, k);
            else if (col == Graph::Edge{i, k}) theta.matrix(r, c) = -MultiPoly::variable(n, j);
            else if (col == Graph::Edge{j, k}) theta.matrix(r, c) = MultiPoly::variable(n, i);
            else theta.matrix(r, c) = MultiPoly(n);
        }
    }
    return theta;
}

std::vector<RaagCrosscheckRow> raag_crosscheck(const Graph& g, std::size_t q_max, const EngineOptions& opts) {
    const PairSpec spec = graph_to_pairspec(g);
    const ThetaMatrix theta = theta_matrix(g);
    std::vector<RaagCrosscheckRow> rows;
    for (std::size_t q = 0; q <= q_max; ++q) {
        check_degree_guard(g.n(), q, opts.force);
        const SparseMatrix piece = theta.matrix.graded_piece(q);
        RaagCrosscheckRow row{q, piece.rows() - certified_rank(piece, opts.mode).rank, wq_dim_homology(spec, q, opts)};
        if (row.theta_cokernel != row.engine)
            throw CrossCheckFailure("raag_crosscheck: Theta cokernel " + std::to_string(row.theta_cokernel) +
                                    " != engine " + std::to_string(row.engine) + " at q=" + std::to_string(q));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace resonance
