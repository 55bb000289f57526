#include "support/oracles.hpp"

#include "resonance/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Dense& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t pair_pos(std::size_t i, std::size_t j, std::size_t n) {
    std::size_t pos = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b, ++pos)
            if (a == i && b == j) return pos;
    return pos;
}

void gen(int n, int q, int var, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (var == n - 1) {
        cur[var] = q;
        out.push_back(cur);
        return;
    }
    for (int e = q; e >= 0; --e) {
        cur[var] = e;
        gen(n, q - e, var + 1, cur, out);
    }
}

std::vector<int> times(std::vector<int> m, std::size_t i) {
    ++m[i];
    return m;
}

}  // namespace

std::size_t rank(Dense m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    return rref(m, cols).size();
}

std::vector<std::vector<Rational>> kernel(Dense m, std::size_t cols) {
    const auto pivots = rref(m, cols);
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<int>> monomials(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0) return out;
    std::vector<int> cur(n);
    gen(n, q, 0, cur, out);
    return out;
}

std::map<std::vector<int>, std::size_t> monomial_index(int n, int q) {
    std::map<std::vector<int>, std::size_t> idx;
    const auto ms = monomials(n, q);
    for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
    return idx;
}

std::size_t wq_dim(const resonance::PairSpec& spec, int q) {
    const int n = static_cast<int>(spec.n());
    const auto src = monomials(n, q);
    const auto mid = monomials(n, q + 1);
    const auto mid_idx = monomial_index(n, q + 1);
    const auto top_idx = monomial_index(n, q + 2);

    // δ1 : V⊗S_{q+1} -> S_{q+2}, v_i⊗f ↦ x_i f.
    Dense d1(top_idx.size(), std::vector<Rational>(n * mid.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t s = 0; s < mid.size(); ++s) d1[top_idx.at(times(mid[s], i))][i * mid.size() + s] += 1;
    const std::size_t ker1 = n * mid.size() - rank(d1);

    // δ2 on K⊗S_q: Σ c_ij v_i∧v_j ⊗ f ↦ Σ c_ij (v_j⊗x_i f - v_i⊗x_j f).
    const auto kbasis = spec.k().vectors();
    Dense d2(n * mid.size(), std::vector<Rational>(kbasis.size() * src.size()));
    for (std::size_t k = 0; k < kbasis.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational c = kbasis[k][pair_pos(i, j, n)];
                if (c == 0) continue;
                for (std::size_t s = 0; s < src.size(); ++s) {
                    const std::size_t col = k * src.size() + s;
                    d2[j * mid.size() + mid_idx.at(times(src[s], i))][col] += c;
                    d2[i * mid.size() + mid_idx.at(times(src[s], j))][col] -= c;
                }
            }
    return ker1 - rank(d2);
}

namespace {

// Image of Λ³V⊗S_{d-1} in (Λ²V/K)⊗S_d, coordinates via the K^⊥ basis.
Dense presentation_image(const resonance::PairSpec& spec, int d) {
    const int n = static_cast<int>(spec.n());
    const auto phis = spec.kperp().vectors();
    const auto tgt_idx = monomial_index(n, d);
    const auto src = monomials(n, d - 1);
    std::size_t triples = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) ++triples;
    Dense img(phis.size() * tgt_idx.size(), std::vector<Rational>(triples * src.size()));
    std::size_t t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t)
                for (std::size_t l = 0; l < phis.size(); ++l)
                    for (std::size_t s = 0; s < src.size(); ++s) {
                        const std::size_t col = t * src.size() + s;
                        const std::size_t base = l * tgt_idx.size();
                        img[base + tgt_idx.at(times(src[s], i))][col] += phis[l][pair_pos(j, k, n)];
                        img[base + tgt_idx.at(times(src[s], j))][col] -= phis[l][pair_pos(i, k, n)];
                        img[base + tgt_idx.at(times(src[s], k))][col] += phis[l][pair_pos(i, j, n)];
                    }
    return img;
}

}  // namespace

std::size_t wq_dim_presentation(const resonance::PairSpec& spec, int q) {
    const Dense img = presentation_image(spec, q);
    return img.size() - rank(img);
}

std::vector<std::vector<Rational>> annihilator(const resonance::PairSpec& spec, int d) {
    const int n = static_cast<int>(spec.n());
    const std::size_t sd = monomials(n, d).size();
    const std::size_t gens = spec.kperp_dim();
    const Dense img = presentation_image(spec, d);
    const std::size_t rows = gens * sd;
    // Functionals y on the target vanishing on the image: kernel of img^T.
    Dense imgT(img.empty() ? 0 : img[0].size(), std::vector<Rational>(rows));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < imgT.size(); ++c) imgT[c][r] = img[r][c];
    const auto ys = kernel(imgT, rows);
    // f·g_l lies in the image iff y(f placed in block l) = 0 for every y.
    Dense system;
    for (std::size_t l = 0; l < gens; ++l)
        for (const auto& y : ys) {
            std::vector<Rational> row(sd);
            for (std::size_t s = 0; s < sd; ++s) row[s] = y[l * sd + s];
            system.push_back(std::move(row));
        }
    return kernel(system, sd);
}

bool in_resonance(const resonance::PairSpec& spec, const std::vector<Rational>& a) {
    const std::size_t n = spec.n();
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) return true;
    const auto kb = spec.k().vectors();
    Dense m(n, std::vector<Rational>(kb.size()));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < kb.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (i == b || a[i] == 0) continue;
                // a∧e_b = Σ_i a_i e_i∧e_b
                const Rational sign = i < b ? 1 : -1;
                m[b][k] += sign * a[i] * kb[k][i < b ? pair_pos(i, b, n) : pair_pos(b, i, n)];
            }
    return n - rank(m) > 1;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

BigInt catalan(int m) {
    std::vector<BigInt> c{1};
    for (int k = 1; k <= m; ++k) {
        BigInt s = 0;
        for (int i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
        c.push_back(s);
    }
    return c[m];
}

std::vector<std::vector<std::size_t>> graph_components(const resonance::Graph& g) {
    const std::size_t n = g.n();
    auto disconnected = [&](std::uint32_t mask) {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (const auto& e : g.edges())
            if ((mask >> e[0] & 1) && (mask >> e[1] & 1)) parent[find(e[0])] = find(e[1]);
        std::size_t roots = 0;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v & 1) && find(v) == v) ++roots;
        return roots >= 2;
    };
    std::vector<std::uint32_t> dis;
    for (std::uint32_t m = 0; m < (1U << n); ++m)
        if (disconnected(m)) dis.push_back(m);
    std::vector<std::vector<std::size_t>> out;
    for (auto m : dis) {
        bool maximal = true;
        for (auto o : dis)
            if (o != m && (o & m) == m) maximal = false;
        if (!maximal) continue;
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v)
            if (m >> v & 1) s.push_back(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

resonance::MultiPoly leibniz(const std::vector<std::vector<resonance::MultiPoly>>& m, std::size_t nvars) {
    const std::size_t k = m.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    resonance::MultiPoly det(nvars);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        resonance::MultiPoly term = resonance::MultiPoly::constant(nvars, inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < k; ++i) term = term * m[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

resonance::PairSpec random_spec(std::mt19937_64& rng, std::size_t n, std::size_t k_dim) {
    const std::size_t pc = n * (n - 1) / 2;
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (;;) {
        std::vector<resonance::Bivector> basis;
        for (std::size_t k = 0; k < k_dim; ++k) {
            resonance::Bivector b = resonance::Bivector::zero(n);
            for (std::size_t p = 0; p < pc; ++p)
                if (sparse(rng) == 0) b.coords[p] = coeff(rng);
            basis.push_back(std::move(b));
        }
        Dense rows;
        for (const auto& b : basis) rows.push_back(b.coords);
        if (rank(rows) == k_dim) return resonance::PairSpec::from_k(n, basis);
    }
}

std::vector<std::vector<Rational>> random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    const bool coordinate = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    for (;;) {
        std::vector<std::vector<Rational>> vecs;
        if (coordinate) {
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<Rational> v(n);
                v[idx[i]] = 1;
                vecs.push_back(std::move(v));
            }
        } else {
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<Rational> v(n);
                for (auto& x : v) x = coeff(rng);
                vecs.push_back(std::move(v));
            }
        }
        if (rank(vecs) == d) return vecs;
    }
}

}  // namespace oracle
