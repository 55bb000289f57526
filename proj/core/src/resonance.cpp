#include "resonance/resonance.hpp"

#include "resonance/errors.hpp"
#include "resonance/parallel.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace resonance {

SubspaceSpec::SubspaceSpec(std::size_t n, const std::vector<RationalVector>& basis) : basis_(n, basis) {
    if (basis.empty()) throw std::invalid_argument("SubspaceSpec: empty basis");
}

SubspaceSpec SubspaceSpec::coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<RationalVector> vecs;
    for (std::size_t i : indices) {
        if (i >= n) throw std::invalid_argument("SubspaceSpec: coordinate index out of range");
        RationalVector v(n);
        v[i] = 1;
        vecs.push_back(std::move(v));
    }
    return SubspaceSpec(n, vecs);
}

namespace {

RationalVector unit(std::size_t n, std::size_t i) {
    RationalVector v(n);
    v[i] = 1;
    return v;
}

// <omega, kappa> for every kappa in the K basis.
RationalVector pair_with_k(const PairSpec& spec, const RationalVector& omega) {
    RationalVector out;
    out.reserve(spec.k_dim());
    for (const auto& kappa : spec.k().vectors()) {
        Rational s = 0;
        for (std::size_t p = 0; p < omega.size(); ++p)
            if (omega[p] != 0 && kappa[p] != 0) s += omega[p] * kappa[p];
        out.push_back(s);
    }
    return out;
}

bool in_kperp(const PairSpec& spec, const RationalVector& omega) {
    return resonance::is_zero(pair_with_k(spec, omega));
}

void require_ambient(const PairSpec& spec, const SubspaceSpec& comp, const char* op) {
    if (comp.n() != spec.n())
        throw std::invalid_argument(std::string(op) + ": component lives in dimension " +
                                    std::to_string(comp.n()) + ", expected " + std::to_string(spec.n()));
}

// Standard basis indices completing comp to a basis of V^∨.
std::vector<std::size_t> completion(const SubspaceSpec& comp) {
    const std::size_t n = comp.n();
    std::vector<RationalVector> candidates = comp.basis().vectors();
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit(n, i));
    const auto chosen = SubspaceBasis::span(n, candidates);
    std::vector<std::size_t> out;
    for (std::size_t k = comp.dim(); k < chosen.dim(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (chosen[k] == candidates[comp.dim() + i]) out.push_back(i);
    return out;
}

SubspaceBasis wedge_square_of(const SubspaceSpec& comp) {
    const std::size_t n = comp.n();
    std::vector<RationalVector> vecs;
    for (std::size_t s = 0; s < comp.dim(); ++s)
        for (std::size_t t = s + 1; t < comp.dim(); ++t) vecs.push_back(wedge(comp[s], comp[t]).coords);
    return SubspaceBasis::span(pair_count(n), vecs);
}

}  // namespace

SubspaceBasis h_a(const PairSpec& spec, const RationalVector& a) {
    const std::size_t n = spec.n();
    if (a.size() != n) throw std::invalid_argument("h_a: vector has wrong length");
    if (resonance::is_zero(a)) throw std::invalid_argument("h_a: a must be nonzero");
    // b ↦ a∧b, then the pairing with K identifies Λ²V^∨/K^⊥ with K^∨.
    Matrix m(spec.k_dim(), n);
    for (std::size_t b = 0; b < n; ++b) {
        const RationalVector col = pair_with_k(spec, wedge(a, unit(n, b)).coords);
        for (std::size_t k = 0; k < col.size(); ++k) m(k, b) = col[k];
    }
    return kernel_basis(m);
}

bool in_resonance(const PairSpec& spec, const RationalVector& a) {
    if (resonance::is_zero(a)) return true;
    return h_a(spec, a).dim() > 1;
}

bool component_in_resonance(const PairSpec& spec, const SubspaceSpec& comp, std::size_t samples,
                            std::uint64_t seed) {
    require_ambient(spec, comp, "component_in_resonance");
    for (const auto& v : comp.basis().vectors())
        if (!in_resonance(spec, v)) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (std::size_t s = 0; s < samples; ++s) {
        RationalVector a(spec.n());
        for (const auto& v : comp.basis().vectors()) {
            const Rational c = coeff(rng);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * v[i];
        }
        if (!in_resonance(spec, a)) return false;
    }
    return true;
}

std::optional<Bivector> isotropy_witness(const PairSpec& spec, const SubspaceSpec& comp) {
    require_ambient(spec, comp, "check_isotropic");
    for (std::size_t s = 0; s < comp.dim(); ++s)
        for (std::size_t t = s + 1; t < comp.dim(); ++t) {
            Bivector w = wedge(comp[s], comp[t]);
            if (!in_kperp(spec, w.coords)) return w;
        }
    return std::nullopt;
}

bool check_isotropic(const PairSpec& spec, const SubspaceSpec& comp) { return !isotropy_witness(spec, comp); }

std::optional<Bivector> separability_witness(const PairSpec& spec, const SubspaceSpec& comp) {
    require_ambient(spec, comp, "check_separable");
    const std::size_t n = spec.n();
    std::vector<RationalVector> gens;
    for (const auto& c : comp.basis().vectors())
        for (std::size_t j = 0; j < n; ++j) gens.push_back(wedge(c, unit(n, j)).coords);
    const SubspaceBasis exterior = SubspaceBasis::span(pair_count(n), gens);
    const SubspaceBasis x = intersect(spec.kperp(), exterior);
    const SubspaceBasis inner = wedge_square_of(comp);
    for (const auto& v : x.vectors())
        if (!inner.contains(v)) return Bivector{n, v};
    return std::nullopt;
}

bool check_separable(const PairSpec& spec, const SubspaceSpec& comp) {
    const bool by_subspaces = !separability_witness(spec, comp);
    const bool by_pm = check_separable_pm(spec, comp);
    if (by_subspaces != by_pm)
        throw CrossCheckFailure("check_separable: subspace route and p_M route disagree");
    return by_subspaces;
}

bool check_separable_pm(const PairSpec& spec, const SubspaceSpec& comp, std::optional<Bivector>* witness) {
    require_ambient(spec, comp, "check_separable_pm");
    const std::size_t n = spec.n();
    const std::size_t nbar = comp.dim();
    if (witness) witness->reset();
    if (nbar == n) return true;

    // Adapted basis f of V^∨ (columns of P): comp first, then standard vectors.
    Matrix p(n, n);
    for (std::size_t s = 0; s < nbar; ++s)
        for (std::size_t i = 0; i < n; ++i) p(i, s) = comp[s][i];
    const auto extra = completion(comp);
    for (std::size_t t = 0; t < extra.size(); ++t) p(extra[t], nbar + t) = 1;

    // V-coordinates change by P^T, so K in the dual basis of f is Λ²(P^T) K.
    const Matrix k_adapted = wedge_square_map(p.transpose()) * spec.k().as_columns();
    const auto prs = pairs(n);
    std::vector<std::size_t> l_rows, m_rows;
    for (std::size_t r = 0; r < prs.size(); ++r) {
        const auto [s, t] = prs[r];
        if (t < nbar) l_rows.push_back(r);
        else if (s < nbar) m_rows.push_back(r);
    }
    const std::size_t kd = spec.k_dim();
    Matrix k_l(l_rows.size(), kd), k_m(m_rows.size(), kd);
    for (std::size_t c = 0; c < kd; ++c) {
        for (std::size_t r = 0; r < l_rows.size(); ++r) k_l(r, c) = k_adapted(l_rows[r], c);
        for (std::size_t r = 0; r < m_rows.size(); ++r) k_m(r, c) = k_adapted(m_rows[r], c);
    }

    // p_M on K ∩ ker Λ²π, the elements with vanishing L-part.
    const SubspaceBasis inside = kernel_basis(k_l);
    const Matrix p_m = k_m * inside.as_columns();
    if (rank(p_m) == m_rows.size()) return true;
    if (!witness) return false;

    // y in M^∨ killing im p_M; extend by ℓ on L so that (ℓ, y, 0) kills all of K.
    const RationalVector y = left_kernel_basis(p_m)[0];
    RationalVector rhs(kd);
    for (std::size_t c = 0; c < kd; ++c)
        for (std::size_t r = 0; r < m_rows.size(); ++r) rhs[c] += y[r] * k_m(r, c);
    Matrix system(kd, l_rows.size() + 1);
    for (std::size_t c = 0; c < kd; ++c) {
        for (std::size_t r = 0; r < l_rows.size(); ++r) system(c, r) = k_l(r, c);
        system(c, l_rows.size()) = rhs[c];
    }
    RationalVector ell(l_rows.size());
    bool solved = false;
    const SubspaceBasis solutions = kernel_basis(system);
    for (const auto& z : solutions.vectors()) {
        const Rational last = z[l_rows.size()];
        if (last == 0) continue;
        for (std::size_t r = 0; r < l_rows.size(); ++r) ell[r] = z[r] / last;
        solved = true;
        break;
    }
    if (!solved) throw CrossCheckFailure("check_separable_pm: cokernel element does not lift to K^perp");

    RationalVector omega_adapted(prs.size());
    for (std::size_t r = 0; r < l_rows.size(); ++r) omega_adapted[l_rows[r]] = ell[r];
    for (std::size_t r = 0; r < m_rows.size(); ++r) omega_adapted[m_rows[r]] = y[r];
    *witness = Bivector{n, wedge_square_map(p).apply(omega_adapted)};
    return false;
}

bool check_strongly_isotropic(const PairSpec& spec, const SubspaceSpec& comp, std::optional<Bivector>* witness) {
    require_ambient(spec, comp, "check_strongly_isotropic");
    if (witness) witness->reset();
    if (auto iso = isotropy_witness(spec, comp)) {
        if (witness) *witness = iso;
        return false;
    }
    const std::size_t n = spec.n();
    const auto extra = completion(comp);
    const std::size_t cols = comp.dim() * extra.size();
    Matrix mu(spec.k_dim(), cols);
    std::vector<Bivector> images;
    images.reserve(cols);
    for (std::size_t s = 0; s < comp.dim(); ++s)
        for (std::size_t t = 0; t < extra.size(); ++t) {
            images.push_back(wedge(comp[s], unit(n, extra[t])));
            const RationalVector col = pair_with_k(spec, images.back().coords);
            for (std::size_t k = 0; k < col.size(); ++k) mu(k, images.size() - 1) = col[k];
        }
    const SubspaceBasis ker = kernel_basis(mu);
    if (ker.is_zero()) return true;
    if (witness) {
        Bivector w = Bivector::zero(n);
        for (std::size_t c = 0; c < cols; ++c)
            if (ker[0][c] != 0)
                for (std::size_t p = 0; p < w.coords.size(); ++p) w.coords[p] += ker[0][c] * images[c].coords[p];
        *witness = std::move(w);
    }
    return false;
}

PairSpec project_component(const PairSpec& spec, const SubspaceSpec& comp) {
    require_ambient(spec, comp, "project_component");
    const Matrix lambda_pi = wedge_square_map(comp.as_columns().transpose());
    std::vector<RationalVector> images;
    for (const auto& k : spec.k().vectors()) images.push_back(lambda_pi.apply(k));
    const SubspaceBasis kbar = SubspaceBasis::span(pair_count(comp.dim()), images);
    std::vector<Bivector> basis;
    for (const auto& v : kbar.vectors()) basis.push_back(Bivector{comp.dim(), v});
    return PairSpec::from_k(comp.dim(), basis);
}

ComponentReport analyze_component(const PairSpec& spec, const SubspaceSpec& comp) {
    ComponentReport report;
    report.subspace = comp;
    report.isotropy_witness = isotropy_witness(spec, comp);
    report.isotropic = !report.isotropy_witness;
    report.separability_witness = separability_witness(spec, comp);
    report.separable = !report.separability_witness;
    report.kbar_dim = project_component(spec, comp).k_dim();

    std::optional<Bivector> pm_witness;
    if (check_separable_pm(spec, comp, &pm_witness) != report.separable)
        throw CrossCheckFailure("analyze_component: separability routes disagree");
    if (pm_witness && !report.separability_witness) report.separability_witness = pm_witness;
    report.strongly_isotropic = check_strongly_isotropic(spec, comp);
    if (report.strongly_isotropic != (report.isotropic && report.separable))
        throw CrossCheckFailure("analyze_component: strong isotropy disagrees with isotropic and separable");
    if (report.isotropic != (report.kbar_dim == 0))
        throw CrossCheckFailure("analyze_component: isotropy disagrees with dim Kbar");
    return report;
}

DecompositionReport verify_decomposition(const PairSpec& spec, const std::vector<SubspaceSpec>& components,
                                         std::size_t q_max, const EngineOptions& opts) {
    DecompositionReport report;
    report.components = components;
    std::vector<PairSpec> projected;
    for (std::size_t t = 0; t < components.size(); ++t) {
        if (!check_separable(spec, components[t]))
            throw std::invalid_argument("verify_decomposition: component " + std::to_string(t + 1) +
                                        " is not separable");
        projected.push_back(project_component(spec, components[t]));
    }
    for (std::size_t s = 0; s < components.size(); ++s)
        for (std::size_t t = s + 1; t < components.size(); ++t)
            if (!intersect(components[s].basis(), components[t].basis()).is_zero()) report.pairwise_disjoint = false;

    for (std::size_t q = 0; q <= q_max; ++q) {
        check_degree_guard(spec.n(), q, opts.force);
        for (const auto& p : projected) check_degree_guard(p.n(), q, opts.force);
    }

    // One task per (instance, q); slot 0 is the ambient instance.
    const std::size_t width = projected.size() + 1;
    std::vector<std::size_t> dims(width * (q_max + 1));
    parallel_for(dims.size(), [&](std::size_t idx) {
        const std::size_t q = idx / width;
        const std::size_t which = idx % width;
        dims[idx] = which == 0 ? wq_dim_cokernel(spec, q, opts) : wq_dim_cokernel(projected[which - 1], q, opts);
    });
    for (std::size_t q = 0; q <= q_max; ++q) {
        DecompositionRow row;
        row.q = q;
        row.total = dims[q * width];
        for (std::size_t t = 1; t < width; ++t) {
            row.parts.push_back(dims[q * width + t]);
            row.sum += dims[q * width + t];
        }
        report.rows.push_back(std::move(row));
    }
    for (std::size_t q = q_max + 1; q-- > 0;) {
        if (!report.rows[q].agrees()) break;
        report.first_agreement_q = q;
    }
    return report;
}

std::vector<MultiPoly> component_ideal(const SubspaceSpec& comp) {
    const std::size_t n = comp.n();
    std::vector<MultiPoly> gens;
    const SubspaceBasis linear = kernel_basis(comp.as_columns().transpose());
    for (const auto& v : linear.vectors()) {
        MultiPoly f(n);
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0) f += MultiPoly::variable(n, i) * v[i];
        gens.push_back(std::move(f));
    }
    return gens;
}

bool ReducednessReport::all_equal() const {
    for (const auto& row : rows)
        if (!row.equal) return false;
    return true;
}

ReducednessReport reducedness_window(const PairSpec& spec, const std::vector<SubspaceSpec>& components,
                                     std::size_t d_min, std::size_t d_max) {
    std::vector<std::vector<MultiPoly>> ideals;
    for (const auto& comp : components) {
        require_ambient(spec, comp, "reducedness_window");
        ideals.push_back(component_ideal(comp));
    }
    ReducednessReport report;
    if (d_max < d_min) return report;
    report.rows.resize(d_max - d_min + 1);
    parallel_for(report.rows.size(), [&](std::size_t i) {
        const std::size_t d = d_min + i;
        const SubspaceBasis ann = annihilator_slice(spec, d).subspace();
        const SubspaceBasis radical = intersection_slice(ideals, spec.n(), d);
        report.rows[i] = ReducednessRow{d, ann.dim(), radical.dim(), same_subspace(ann, radical)};
    });
    return report;
}

}  // namespace resonance
