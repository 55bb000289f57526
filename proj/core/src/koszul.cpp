#include "resonance/koszul.hpp"

#include "resonance/errors.hpp"
#include "resonance/parallel.hpp"

#include <string>

namespace resonance {

void check_degree_guard(std::size_t n, std::size_t q, bool force) {
    if (force) return;
    const std::size_t dim = n * sym_dim(n, q + 1);
    if (dim > kMatrixDimensionGuard)
        throw GuardExceeded("degree guard: n*C(n+q,q+1) = " + std::to_string(dim) + " exceeds " +
                            std::to_string(kMatrixDimensionGuard) + " at n=" + std::to_string(n) +
                            ", q=" + std::to_string(q) + " (use --force to override)");
}

std::size_t wq_dim_homology(const PairSpec& spec, std::size_t q, const EngineOptions& opts) {
    const std::size_t n = spec.n();
    check_degree_guard(n, q, opts.force);
    const SparseMatrix d1 = delta1_sparse(n, q);
    const std::size_t kernel_dim = d1.cols() - certified_rank(d1, opts.mode).rank;
    const std::size_t boundary_rank = certified_rank(delta2_on_k(spec, q), opts.mode).rank;
    if (boundary_rank > kernel_dim)
        throw CrossCheckFailure("wq_dim_homology: image of δ2 exceeds ker δ1 at q=" + std::to_string(q));
    return kernel_dim - boundary_rank;
}

std::size_t wq_dim_cokernel(const PairSpec& spec, std::size_t q, const EngineOptions& opts) {
    const std::size_t n = spec.n();
    check_degree_guard(n, q, opts.force);
    const SparseMatrix rel = delta3_mod_k(spec, q);
    return rel.rows() - certified_rank(rel, opts.mode).rank;
}

HilbertTable hilbert_table(const PairSpec& spec, std::size_t q_max, const EngineOptions& opts) {
    for (std::size_t q = 0; q <= q_max; ++q) check_degree_guard(spec.n(), q, opts.force);
    HilbertTable table{spec, std::vector<HilbertRow>(q_max + 1)};
    parallel_for(q_max + 1, [&](std::size_t q) {
        table.rows[q] = HilbertRow{q, wq_dim_homology(spec, q, opts), wq_dim_cokernel(spec, q, opts)};
    });
    for (const auto& row : table.rows) {
        if (row.dim_homology != row.dim_cokernel)
            throw CrossCheckFailure("hilbert_table: routes disagree at q=" + std::to_string(row.q) +
                                    " (homology " + std::to_string(row.dim_homology) + ", cokernel " +
                                    std::to_string(row.dim_cokernel) + ")");
    }
    return table;
}

PolyMatrix presentation_matrix(const PairSpec& spec) {
    const std::size_t n = spec.n();
    const auto phis = spec.kperp_basis();
    const auto trips = triples(n);
    PolyMatrix m(trips.size(), phis.size(), n);
    for (std::size_t t = 0; t < trips.size(); ++t) {
        const auto [i, j, k] = trips[t];
        for (std::size_t l = 0; l < phis.size(); ++l) {
            MultiPoly entry(n);
            entry += MultiPoly::variable(n, i) * phis[l].at(j, k);
            entry -= MultiPoly::variable(n, j) * phis[l].at(i, k);
            entry += MultiPoly::variable(n, k) * phis[l].at(i, j);
            m(t, l) = std::move(entry);
        }
    }
    return m;
}

IdealSlice annihilator_slice(const PairSpec& spec, std::size_t d) {
    const std::size_t n = spec.n();
    const std::size_t sd = sym_dim(n, d);
    if (spec.kperp_dim() == 0) return IdealSlice::from_subspace(n, d, SubspaceBasis::full(sd));

    const std::size_t tgt = sym_dim(n, d + 1);
    const std::size_t target_dim = n * tgt;

    // Functionals vanishing on δ2(K⊗S_d).
    const SparseMatrix boundary = delta2_on_k(spec, d);
    const SubspaceBasis annihilating = boundary.cols() == 0
                                           ? SubspaceBasis::full(target_dim)
                                           : left_kernel_basis(boundary.to_dense());

    // Coordinate bivectors completing K to Λ²V: generators of W.
    std::vector<RationalVector> candidates = spec.k().vectors();
    const std::size_t kd = candidates.size();
    for (std::size_t p = 0; p < pair_count(n); ++p) {
        RationalVector e(pair_count(n));
        e[p] = 1;
        candidates.push_back(std::move(e));
    }
    const auto chosen = SubspaceBasis::span(pair_count(n), candidates);
    std::vector<std::array<std::size_t, 2>> generators;
    const auto prs = pairs(n);
    for (const auto& v : chosen.vectors()) {
        for (std::size_t p = 0; p < prs.size(); ++p) {
            if (v == candidates[kd + p]) {
                generators.push_back(prs[p]);
                break;
            }
        }
    }

    const auto monos = monomials(n, d);
    Matrix system(generators.size() * annihilating.dim(), sd);
    std::size_t row = 0;
    for (const auto& [i, j] : generators) {
        for (const auto& y : annihilating.vectors()) {
            // y applied to f·δ2(v_i∧v_j) = v_j⊗x_i f - v_i⊗x_j f, f = monomial s
            for (std::size_t s = 0; s < sd; ++s) {
                Exponents xi = monos[s], xj = monos[s];
                ++xi[i];
                ++xj[j];
                system(row, s) = y[j * tgt + monomial_rank(xi)] - y[i * tgt + monomial_rank(xj)];
            }
            ++row;
        }
    }
    return IdealSlice::from_subspace(n, d, kernel_basis(system));
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        for_each_subset(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiPoly> fitting_generators(const PairSpec& spec, const FittingOptions& opts) {
    const std::size_t n = spec.n();
    const std::size_t r = spec.kperp_dim();
    if (r == 0) return {MultiPoly::constant(n, 1)};

    const PolyMatrix pres = presentation_matrix(spec);
    std::vector<std::size_t> live_rows;
    for (std::size_t t = 0; t < pres.rows(); ++t)
        if (!pres.row_is_zero(t)) live_rows.push_back(t);

    if (!opts.force && (r > kFittingGuard || live_rows.size() > kFittingGuard))
        throw GuardExceeded("Fitting guard: presentation has " + std::to_string(live_rows.size()) +
                            " nonzero relations and " + std::to_string(r) + " generators; limit " +
                            std::to_string(kFittingGuard) + " (use --force to override)");

    std::vector<MultiPoly> minors;
    if (live_rows.size() < r) return minors;
    std::vector<std::size_t> cur;
    for_each_subset(live_rows.size(), r, cur, 0, [&](const std::vector<std::size_t>& subset) {
        PolyMatrix sq(r, r, n);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < r; ++c) sq(a, c) = pres(live_rows[subset[a]], c);
        MultiPoly det = determinant(sq);
        if (!det.is_zero()) minors.push_back(std::move(det));
    });
    return minors;
}

}  // namespace resonance
