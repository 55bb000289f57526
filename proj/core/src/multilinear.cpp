#include "resonance/multilinear.hpp"

#include <numeric>
#include <stdexcept>

namespace resonance {

std::size_t binomial_size(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(r);
}

std::size_t sym_dim(std::size_t n, std::size_t q) {
    if (n == 0) return q == 0 ? 1 : 0;
    return binomial_size(n - 1 + q, q);
}

std::uint32_t MonoIndex::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

std::size_t monomial_rank(const Exponents& exps) {
    const std::size_t n = exps.size();
    std::size_t rem = std::accumulate(exps.begin(), exps.end(), std::size_t{0});
    std::size_t rank = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t a = exps[i];
        if (rem > a) rank += sym_dim(n - i, rem - a - 1);
        rem -= a;
    }
    return rank;
}

Exponents monomial_unrank(std::size_t n, std::size_t q, std::size_t index) {
    if (index >= sym_dim(n, q)) throw std::out_of_range("monomial_unrank: index out of range");
    Exponents exps(n, 0);
    std::size_t rem = q;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t b = rem + 1; b-- > 0;) {
            const std::size_t block = sym_dim(n - i - 1, rem - b);
            if (index < block) {
                exps[i] = static_cast<std::uint32_t>(b);
                rem -= b;
                break;
            }
            index -= block;
        }
    }
    if (n) exps[n - 1] = static_cast<std::uint32_t>(rem);
    return exps;
}

namespace {

void enumerate_monomials(std::size_t pos, std::size_t rem, Exponents& cur, std::vector<Exponents>& out) {
    const std::size_t n = cur.size();
    if (pos + 1 == n) {
        cur[pos] = static_cast<std::uint32_t>(rem);
        out.push_back(cur);
        return;
    }
    for (std::size_t b = rem + 1; b-- > 0;) {
        cur[pos] = static_cast<std::uint32_t>(b);
        enumerate_monomials(pos + 1, rem - b, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials(std::size_t n, std::size_t q) {
    std::vector<Exponents> out;
    if (n == 0) {
        if (q == 0) out.emplace_back();
        return out;
    }
    out.reserve(sym_dim(n, q));
    Exponents cur(n, 0);
    enumerate_monomials(0, q, cur, out);
    return out;
}

std::size_t pair_count(std::size_t n) { return binomial_size(n, 2); }
std::size_t triple_count(std::size_t n) { return binomial_size(n, 3); }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (!(i < j && j < n)) throw std::out_of_range("pair_index: need i < j < n");
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    if (!(i < j && j < k && k < n)) throw std::out_of_range("triple_index: need i < j < k < n");
    std::size_t idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += pair_count(n - a - 1);
    for (std::size_t b = i + 1; b < j; ++b) idx += n - b - 1;
    return idx + (k - j - 1);
}

std::vector<std::array<std::size_t, 2>> pairs(std::size_t n) {
    std::vector<std::array<std::size_t, 2>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

std::vector<std::array<std::size_t, 3>> triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    return out;
}

Bivector Bivector::zero(std::size_t n) { return Bivector{n, RationalVector(pair_count(n))}; }

Bivector Bivector::basis(std::size_t n, std::size_t i, std::size_t j) {
    Bivector b = zero(n);
    if (i < j)
        b.coords[pair_index(i, j, n)] = 1;
    else
        b.coords[pair_index(j, i, n)] = -1;
    return b;
}

Rational Bivector::at(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    if (i < j) return coords[pair_index(i, j, n)];
    return -coords[pair_index(j, i, n)];
}

Bivector wedge(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("wedge: length mismatch");
    const std::size_t n = a.size();
    Bivector out = Bivector::zero(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++idx) out.coords[idx] = a[i] * b[j] - a[j] * b[i];
    return out;
}

Rational pair(const Bivector& k, const Bivector& kperp) {
    if (k.coords.size() != kperp.coords.size()) throw std::invalid_argument("pair: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < k.coords.size(); ++i)
        if (k.coords[i] != 0 && kperp.coords[i] != 0) acc += k.coords[i] * kperp.coords[i];
    return acc;
}

namespace {

std::vector<RationalVector> coords_of(std::size_t n, const std::vector<Bivector>& vs) {
    std::vector<RationalVector> out;
    out.reserve(vs.size());
    for (const auto& b : vs) {
        if (b.n != n || b.coords.size() != pair_count(n))
            throw std::invalid_argument("bivector dimension does not match the instance");
        out.push_back(b.coords);
    }
    return out;
}

std::vector<std::vector<BigInt>> integral(const SubspaceBasis& s) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& v : s.vectors()) out.push_back(primitive_integer_vector(v));
    return out;
}

SubspaceBasis annihilator(std::size_t n, const SubspaceBasis& s) {
    if (s.is_zero()) return SubspaceBasis::full(pair_count(n));
    return kernel_basis(Matrix::from_rows(s.vectors(), pair_count(n)));
}

}  // namespace

PairSpec::PairSpec(std::size_t n, SubspaceBasis k, SubspaceBasis kperp)
    : n_(n), k_(std::move(k)), kperp_(std::move(kperp)), k_int_(integral(k_)), kperp_int_(integral(kperp_)) {}

PairSpec PairSpec::from_k(std::size_t n, const std::vector<Bivector>& k_basis) {
    if (n == 0) throw std::invalid_argument("PairSpec: dim V must be positive");
    SubspaceBasis k(pair_count(n), coords_of(n, k_basis));
    SubspaceBasis kperp = annihilator(n, k);
    return PairSpec(n, std::move(k), std::move(kperp));
}

PairSpec PairSpec::from_kperp(std::size_t n, const std::vector<Bivector>& kperp_basis) {
    if (n == 0) throw std::invalid_argument("PairSpec: dim V must be positive");
    SubspaceBasis kperp(pair_count(n), coords_of(n, kperp_basis));
    SubspaceBasis k = annihilator(n, kperp);
    return PairSpec(n, std::move(k), std::move(kperp));
}

std::vector<Bivector> PairSpec::k_basis() const {
    std::vector<Bivector> out;
    for (const auto& v : k_.vectors()) out.push_back(Bivector{n_, v});
    return out;
}

std::vector<Bivector> PairSpec::kperp_basis() const {
    std::vector<Bivector> out;
    for (const auto& v : kperp_.vectors()) out.push_back(Bivector{n_, v});
    return out;
}

PairSpec complete_perp(const PartialPairSpec& partial) {
    if (partial.k_basis.has_value() == partial.kperp_basis.has_value())
        throw std::invalid_argument("complete_perp: supply exactly one of K and K^perp");
    if (partial.k_basis) return PairSpec::from_k(partial.n, *partial.k_basis);
    return PairSpec::from_kperp(partial.n, *partial.kperp_basis);
}

namespace {

Exponents times_variable(const Exponents& m, std::size_t var) {
    Exponents out = m;
    ++out[var];
    return out;
}

std::uint32_t as_row(std::size_t r) { return static_cast<std::uint32_t>(r); }

}  // namespace

SparseMatrix delta1_sparse(std::size_t n, std::size_t q) {
    const std::size_t src = sym_dim(n, q + 1);
    SparseMatrix m(sym_dim(n, q + 2), n * src);
    const auto monos = monomials(n, q + 1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < monos.size(); ++r) {
            ColumnBuilder col;
            col.add(as_row(monomial_rank(times_variable(monos[r], a))), 1);
            m.set_column(a * src + r, col.finish());
        }
    return m;
}

SparseMatrix delta2_sparse(std::size_t n, std::size_t q) {
    const std::size_t src = sym_dim(n, q);
    const std::size_t tgt = sym_dim(n, q + 1);
    SparseMatrix m(n * tgt, pair_count(n) * src);
    const auto monos = monomials(n, q);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++p)
            for (std::size_t r = 0; r < monos.size(); ++r) {
                // v_i∧v_j⊗f  ->  v_j⊗v_i f - v_i⊗v_j f
                ColumnBuilder col;
                col.add(as_row(j * tgt + monomial_rank(times_variable(monos[r], i))), 1);
                col.add(as_row(i * tgt + monomial_rank(times_variable(monos[r], j))), -1);
                m.set_column(p * src + r, col.finish());
            }
    return m;
}

SparseMatrix delta3_sparse(std::size_t n, std::size_t q) {
    const std::size_t tgt = sym_dim(n, q);
    if (q == 0) return SparseMatrix(pair_count(n) * tgt, 0);
    const std::size_t src = sym_dim(n, q - 1);
    SparseMatrix m(pair_count(n) * tgt, triple_count(n) * src);
    const auto monos = monomials(n, q - 1);
    std::size_t t = 0;
    for (const auto& [i, j, k] : triples(n)) {
        for (std::size_t r = 0; r < monos.size(); ++r) {
            // v_i∧v_j∧v_k⊗f -> v_j∧v_k⊗v_i f - v_i∧v_k⊗v_j f + v_i∧v_j⊗v_k f
            ColumnBuilder col;
            col.add(as_row(pair_index(j, k, n) * tgt + monomial_rank(times_variable(monos[r], i))), 1);
            col.add(as_row(pair_index(i, k, n) * tgt + monomial_rank(times_variable(monos[r], j))), -1);
            col.add(as_row(pair_index(i, j, n) * tgt + monomial_rank(times_variable(monos[r], k))), 1);
            m.set_column(t * src + r, col.finish());
        }
        ++t;
    }
    return m;
}

Matrix delta1_matrix(std::size_t n, std::size_t q) { return delta1_sparse(n, q).to_dense(); }
Matrix delta2_matrix(std::size_t n, std::size_t q) { return delta2_sparse(n, q).to_dense(); }
Matrix delta3_matrix(std::size_t n, std::size_t q) { return delta3_sparse(n, q).to_dense(); }

SparseMatrix delta2_on_k(const PairSpec& spec, std::size_t q) {
    const std::size_t n = spec.n();
    const std::size_t src = sym_dim(n, q);
    const std::size_t tgt = sym_dim(n, q + 1);
    const auto monos = monomials(n, q);
    const auto prs = pairs(n);
    SparseMatrix m(n * tgt, spec.k_dim() * src);
    for (std::size_t b = 0; b < spec.k_dim(); ++b) {
        const auto& kappa = spec.k_integral()[b];
        for (std::size_t r = 0; r < monos.size(); ++r) {
            ColumnBuilder col;
            for (std::size_t p = 0; p < prs.size(); ++p) {
                if (sgn(kappa[p]) == 0) continue;
                const auto [i, j] = prs[p];
                col.add(as_row(j * tgt + monomial_rank(times_variable(monos[r], i))), kappa[p]);
                col.add(as_row(i * tgt + monomial_rank(times_variable(monos[r], j))), BigInt(-kappa[p]));
            }
            m.set_column(b * src + r, col.finish());
        }
    }
    return m;
}

SparseMatrix delta3_mod_k(const PairSpec& spec, std::size_t q) {
    const std::size_t n = spec.n();
    const std::size_t tgt = sym_dim(n, q);
    const std::size_t rows = spec.kperp_dim() * tgt;
    if (q == 0) return SparseMatrix(rows, 0);
    const std::size_t src = sym_dim(n, q - 1);
    const auto monos = monomials(n, q - 1);
    const auto& phis = spec.kperp_integral();
    SparseMatrix m(rows, triple_count(n) * src);
    std::size_t t = 0;
    for (const auto& [i, j, k] : triples(n)) {
        const std::size_t jk = pair_index(j, k, n), ik = pair_index(i, k, n), ij = pair_index(i, j, n);
        for (std::size_t r = 0; r < monos.size(); ++r) {
            const std::size_t mi = monomial_rank(times_variable(monos[r], i));
            const std::size_t mj = monomial_rank(times_variable(monos[r], j));
            const std::size_t mk = monomial_rank(times_variable(monos[r], k));
            ColumnBuilder col;
            for (std::size_t l = 0; l < phis.size(); ++l) {
                const auto& phi = phis[l];
                col.add(as_row(l * tgt + mi), phi[jk]);
                col.add(as_row(l * tgt + mj), BigInt(-phi[ik]));
                col.add(as_row(l * tgt + mk), phi[ij]);
            }
            m.set_column(t * src + r, col.finish());
        }
        ++t;
    }
    return m;
}

Matrix wedge_square_map(const Matrix& p) {
    const std::size_t m = p.rows();
    const std::size_t n = p.cols();
    Matrix out(pair_count(m), pair_count(n));
    std::size_t row = 0;
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t, ++row) {
            std::size_t col = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, ++col)
                    out(row, col) = p(s, i) * p(t, j) - p(s, j) * p(t, i);
        }
    return out;
}

}  // namespace resonance
