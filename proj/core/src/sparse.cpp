#include "resonance/sparse.hpp"

#include "resonance/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace resonance {

void ColumnBuilder::add(std::uint32_t row, const BigInt& value) {
    if (value != 0) terms_.emplace_back(row, value);
}

SparseColumn ColumnBuilder::finish() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseColumn col;
    for (std::size_t i = 0; i < terms_.size();) {
        std::uint32_t row = terms_[i].first;
        BigInt sum = 0;
        for (; i < terms_.size() && terms_[i].first == row; ++i) sum += terms_[i].second;
        if (sum != 0) {
            col.rows.push_back(row);
            col.values.push_back(std::move(sum));
        }
    }
    terms_.clear();
    return col;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto ints = primitive_integer_vector(m.column(c));
        SparseColumn col;
        for (std::size_t r = 0; r < ints.size(); ++r) {
            if (ints[r] != 0) {
                col.rows.push_back(static_cast<std::uint32_t>(r));
                col.values.push_back(ints[r]);
            }
        }
        out.columns_[c] = std::move(col);
    }
    return out;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseMatrix::set_column(std::size_t c, SparseColumn col) {
    if (!col.rows.empty() && col.rows.back() >= rows_)
        throw std::out_of_range("SparseMatrix::set_column: row index out of range");
    columns_.at(c) = std::move(col);
}

void SparseMatrix::append_column(SparseColumn col) {
    if (!col.rows.empty() && col.rows.back() >= rows_)
        throw std::out_of_range("SparseMatrix::append_column: row index out of range");
    columns_.push_back(std::move(col));
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        const auto& col = columns_[c];
        for (std::size_t k = 0; k < col.size(); ++k) {
            auto& target = t.columns_[col.rows[k]];
            target.rows.push_back(static_cast<std::uint32_t>(c));
            target.values.push_back(col.values[k]);
        }
    }
    return t;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, cols());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        const auto& col = columns_[c];
        for (std::size_t k = 0; k < col.size(); ++k) m(col.rows[k], c) = Rational(col.values[k]);
    }
    return m;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("SparseMatrix::hstack: row mismatch");
    SparseMatrix out = a;
    for (const auto& col : b.columns_) out.columns_.push_back(col);
    return out;
}

namespace {

// Incremental row echelon: every stored pivot vector is normalized so that its
// leading entry is one; entries before the leading index are zero.
struct ModPivot {
    std::vector<std::uint32_t> index;
    std::vector<std::uint64_t> value;
};

}  // namespace

std::size_t sparse_rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("sparse_rank_mod_p: modulus is not prime");
    const MontgomeryField field(p);
    const std::size_t dim = m.rows();

    std::vector<std::int32_t> pivot_at(dim, -1);
    std::vector<ModPivot> pivots;
    std::vector<std::uint64_t> acc(dim, 0);

    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& col = m.column(c);
        if (col.empty()) continue;
        for (std::size_t k = 0; k < col.size(); ++k)
            acc[col.rows[k]] = field.to_mont(reduce_mod(col.values[k], p));

        std::size_t i = col.rows.front();
        for (; i < dim; ++i) {
            if (acc[i] == 0) continue;
            const std::int32_t slot = pivot_at[i];
            if (slot < 0) break;
            const ModPivot& piv = pivots[static_cast<std::size_t>(slot)];
            const std::uint64_t factor = acc[i];
            acc[i] = 0;
            for (std::size_t k = 1; k < piv.index.size(); ++k) {
                auto& slot_value = acc[piv.index[k]];
                slot_value = field.sub(slot_value, field.mul(factor, piv.value[k]));
            }
        }
        if (i == dim) continue;

        ModPivot piv;
        const std::uint64_t scale = field.inv(acc[i]);
        for (std::size_t j = i; j < dim; ++j) {
            if (acc[j] == 0) continue;
            piv.index.push_back(static_cast<std::uint32_t>(j));
            piv.value.push_back(field.mul(acc[j], scale));
            acc[j] = 0;
        }
        pivot_at[i] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(piv));
    }
    return pivots.size();
}

namespace {

struct IntPivot {
    std::vector<std::uint32_t> index;
    std::vector<BigInt> value;  // value[0] > 0, content one
};

}  // namespace

std::size_t sparse_rank_exact(const SparseMatrix& m) {
    const std::size_t dim = m.rows();
    std::vector<std::int32_t> pivot_at(dim, -1);
    std::vector<IntPivot> pivots;
    std::vector<BigInt> acc(dim);
    BigInt g, a, b;

    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& col = m.column(c);
        if (col.empty()) continue;
        for (std::size_t k = 0; k < col.size(); ++k) acc[col.rows[k]] = col.values[k];

        std::size_t i = col.rows.front();
        for (; i < dim; ++i) {
            if (sgn(acc[i]) == 0) continue;
            const std::int32_t slot = pivot_at[i];
            if (slot < 0) break;
            const IntPivot& piv = pivots[static_cast<std::size_t>(slot)];
            // acc <- (lead/g) * acc - (acc[i]/g) * piv
            mpz_gcd(g.get_mpz_t(), piv.value[0].get_mpz_t(), acc[i].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), piv.value[0].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), acc[i].get_mpz_t(), g.get_mpz_t());
            acc[i] = 0;
            if (a != 1) {
                for (std::size_t j = i + 1; j < dim; ++j)
                    if (sgn(acc[j]) != 0) acc[j] *= a;
            }
            for (std::size_t k = 1; k < piv.index.size(); ++k)
                mpz_submul(acc[piv.index[k]].get_mpz_t(), b.get_mpz_t(), piv.value[k].get_mpz_t());
        }
        if (i == dim) continue;

        IntPivot piv;
        BigInt content = 0;
        for (std::size_t j = i; j < dim; ++j) {
            if (sgn(acc[j]) == 0) continue;
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), acc[j].get_mpz_t());
            piv.index.push_back(static_cast<std::uint32_t>(j));
            piv.value.push_back(std::move(acc[j]));
            acc[j] = 0;
        }
        if (sgn(piv.value[0]) < 0) content = -content;
        if (content != 1)
            for (auto& v : piv.value) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        pivot_at[i] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(piv));
    }
    return pivots.size();
}

RankCertificate certified_rank(const SparseMatrix& m, RankMode mode) {
    RankCertificate cert;
    cert.mode = mode;
    if (mode == RankMode::Exact) {
        cert.rank = sparse_rank_exact(m);
        return cert;
    }
    // Over the integers, a minor that is nonzero modulo p is nonzero, so each
    // modular rank is a certified lower bound. Agreement of two independent
    // primes is accepted; disagreement falls back to exact elimination.
    // Full rank modulo one prime is already exact.
    PrimeStream primes;
    const std::uint64_t p1 = primes.next();
    cert.primes = {p1};
    const std::size_t r1 = sparse_rank_mod_p(m, p1);
    if (r1 == std::min(m.rows(), m.cols())) {
        cert.rank = r1;
        return cert;
    }
    const std::uint64_t p2 = primes.next();
    cert.primes.push_back(p2);
    const std::size_t r2 = sparse_rank_mod_p(m, p2);
    if (r1 == r2) {
        cert.rank = r1;
        return cert;
    }
    cert.fell_back_to_exact = true;
    cert.rank = sparse_rank_exact(m);
    return cert;
}

}  // namespace resonance
