#pragma once

#include "resonance/matrix.hpp"
#include "resonance/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace resonance {

// Integer column with strictly increasing row indices and no stored zeros.
struct SparseColumn {
    std::vector<std::uint32_t> rows;
    std::vector<BigInt> values;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
};

// Collects (row, value) contributions in any order; duplicates are summed.
class ColumnBuilder {
public:
    void add(std::uint32_t row, const BigInt& value);
    void add(std::uint32_t row, long value) { add(row, BigInt(value)); }
    SparseColumn finish();

private:
    std::vector<std::pair<std::uint32_t, BigInt>> terms_;
};

// Column-oriented sparse integer matrix. Internal representation for the
// large Koszul differentials; rank is invariant under the column scaling used
// to clear denominators, so integer entries lose nothing.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix from_dense(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    const SparseColumn& column(std::size_t c) const { return columns_[c]; }
    void set_column(std::size_t c, SparseColumn col);
    void append_column(SparseColumn col);

    SparseMatrix transpose() const;
    Matrix to_dense() const;

    // Columns of a followed by columns of b (same row count).
    static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::vector<SparseColumn> columns_;
};

enum class RankMode {
    Exact,    // fraction-free elimination over the integers
    Modular,  // two independent random 62-bit primes, exact fallback on disagreement
};

// Rank modulo an odd prime p < 2^62. Never exceeds the rational rank.
std::size_t sparse_rank_mod_p(const SparseMatrix& m, std::uint64_t p);

// Exact rank by fraction-free incremental echelon with content removal.
std::size_t sparse_rank_exact(const SparseMatrix& m);

struct RankCertificate {
    std::size_t rank = 0;
    RankMode mode = RankMode::Exact;
    std::vector<std::uint64_t> primes;  // primes used (modular mode)
    bool fell_back_to_exact = false;
};

RankCertificate certified_rank(const SparseMatrix& m, RankMode mode);

}  // namespace resonance
