#include "resonance/exact_linalg.hpp"

#include "resonance/modular.hpp"

#include <stdexcept>
#include <utility>

namespace resonance {

FractionFreeEchelon::FractionFreeEchelon(const Matrix& m) : cols_(m.cols()) {
    const std::size_t nrows = m.rows();
    std::vector<std::vector<BigInt>> a;
    a.reserve(nrows);
    for (std::size_t r = 0; r < nrows; ++r) a.push_back(primitive_integer_vector(m.row(r)));

    BigInt previous = 1;
    BigInt t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < nrows; ++c) {
        std::size_t best = nrows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < nrows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            const std::size_t bits = bit_length(a[i][c]);
            if (best == nrows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == nrows) continue;
        std::swap(a[r], a[best]);
        const BigInt& pivot = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            auto& row = a[i];
            const BigInt factor = row[c];
            for (std::size_t j = c + 1; j < cols_; ++j) {
                // row[j] = (pivot * row[j] - factor * a[r][j]) / previous, exact by Sylvester's identity
                t = pivot * row[j];
                mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), a[r][j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            row[c] = 0;
        }
        previous = pivot;
        pivot_cols_.push_back(c);
        ++r;
    }
    a.resize(r);
    rows_ = std::move(a);
}

std::vector<RationalVector> FractionFreeEchelon::null_space() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols_) is_pivot[c] = true;

    std::vector<RationalVector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols_);
        x[f] = 1;
        for (std::size_t k = rank(); k-- > 0;) {
            const std::size_t pc = pivot_cols_[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols_; ++j)
                if (sgn(rows_[k][j]) != 0 && x[j] != 0) acc += Rational(rows_[k][j]) * x[j];
            x[pc] = -acc / Rational(rows_[k][pc]);
        }
        auto ints = primitive_integer_vector(x);
        for (std::size_t j = 0; j < cols_; ++j) x[j] = Rational(ints[j]);
        out.push_back(std::move(x));
    }
    return out;
}

std::size_t rank(const Matrix& m) { return FractionFreeEchelon(m).rank(); }

std::size_t rank_modular(const Matrix& m, std::uint64_t prime) {
    if (!is_prime(prime)) throw std::invalid_argument("rank_modular: modulus is not prime");
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            auto v = reduce_mod(m(i, j), prime);
            if (!v) throw std::invalid_argument("rank_modular: prime divides an entry denominator");
            a[i][j] = *v;
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[r], a[piv]);
        const std::uint64_t inv = inv_mod(a[r][c], prime);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = mul_mod(a[i][c], inv, prime);
            for (std::size_t j = c; j < nc; ++j) {
                const std::uint64_t s = mul_mod(f, a[r][j], prime);
                a[i][j] = a[i][j] >= s ? a[i][j] - s : a[i][j] + prime - s;
            }
        }
        ++r;
    }
    return r;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<RationalVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (v.size() != ambient_dim_)
            throw std::invalid_argument("SubspaceBasis: vector length differs from ambient dimension");
    if (!basis_.empty() && rank(as_columns()) != basis_.size())
        throw std::invalid_argument("SubspaceBasis: basis vectors are linearly dependent");
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
    SubspaceBasis out(ambient_dim);
    if (vectors.empty()) return out;
    for (const auto& v : vectors)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("SubspaceBasis::span: vector length differs from ambient dimension");
    const FractionFreeEchelon ech(Matrix::from_columns(vectors, ambient_dim));
    for (auto c : ech.pivot_columns()) out.basis_.push_back(vectors[c]);
    return out;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
    SubspaceBasis out(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        RationalVector e(ambient_dim);
        e[i] = 1;
        out.basis_.push_back(std::move(e));
    }
    return out;
}

bool SubspaceBasis::contains(const RationalVector& v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("SubspaceBasis::contains: length mismatch");
    if (resonance::is_zero(v)) return true;
    auto cols = basis_;
    cols.push_back(v);
    return rank(Matrix::from_columns(cols, ambient_dim_)) == basis_.size();
}

Matrix SubspaceBasis::as_columns() const { return Matrix::from_columns(basis_, ambient_dim_); }

SubspaceBasis kernel_basis(const Matrix& m) {
    SubspaceBasis out(m.cols(), FractionFreeEchelon(m).null_space());
    return out;
}

SubspaceBasis left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

namespace {

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch");
}

}  // namespace

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b, "intersect");
    const std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return SubspaceBasis(n);
    // Solve A x = B y; the intersection is the image of the x-part under A.
    Matrix joint(n, a.dim() + b.dim());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < a.dim(); ++i) joint(r, i) = a[i][r];
        for (std::size_t j = 0; j < b.dim(); ++j) joint(r, a.dim() + j) = -b[j][r];
    }
    const auto ker = FractionFreeEchelon(joint).null_space();
    std::vector<RationalVector> vecs;
    vecs.reserve(ker.size());
    for (const auto& x : ker) {
        RationalVector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t r = 0; r < n; ++r) v[r] += x[i] * a[i][r];
        }
        vecs.push_back(std::move(v));
    }
    return SubspaceBasis::span(n, vecs);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b, "sum");
    auto vecs = a.vectors();
    vecs.insert(vecs.end(), b.vectors().begin(), b.vectors().end());
    return SubspaceBasis::span(a.ambient_dim(), vecs);
}

bool is_contained(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b, "is_contained");
    if (a.is_zero()) return true;
    if (a.dim() > b.dim()) return false;
    auto vecs = b.vectors();
    vecs.insert(vecs.end(), a.vectors().begin(), a.vectors().end());
    return rank(Matrix::from_columns(vecs, a.ambient_dim())) == b.dim();
}

bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() == b.dim() && is_contained(a, b);
}

SubspaceBasis image(const Matrix& m, const SubspaceBasis& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("image: dimension mismatch");
    std::vector<RationalVector> vecs;
    vecs.reserve(s.dim());
    for (const auto& v : s.vectors()) vecs.push_back(m.apply(v));
    return SubspaceBasis::span(m.rows(), vecs);
}

}  // namespace resonance
