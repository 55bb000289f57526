#pragma once

#include "resonance/matrix.hpp"
#include "resonance/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace resonance {

// Row echelon form of a rational matrix computed by fraction-free (Bareiss)
// elimination after clearing denominators row by row. Rows past `rank()` are
// dropped. Pivot choice: within the current column, the candidate entry of
// smallest bit length, ties broken by the lowest row index.
class FractionFreeEchelon {
public:
    explicit FractionFreeEchelon(const Matrix& m);

    std::size_t rank() const { return pivot_cols_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

    // Basis of the right null space, one vector per non-pivot column.
    std::vector<RationalVector> null_space() const;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

std::size_t rank(const Matrix& m);

// Rank of m reduced modulo `prime`; a lower bound for rank(m). Throws
// std::invalid_argument when `prime` is not prime or divides a denominator.
std::size_t rank_modular(const Matrix& m, std::uint64_t prime);

// Linear subspace of Q^ambient_dim with an independent basis.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    // Throws std::invalid_argument if the vectors are dependent or of the wrong length.
    SubspaceBasis(std::size_t ambient_dim, std::vector<RationalVector> basis);

    // Keeps a maximal independent subset of `vectors`, in input order.
    static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
    static SubspaceBasis full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<RationalVector>& vectors() const { return basis_; }
    const RationalVector& operator[](std::size_t i) const { return basis_[i]; }

    bool contains(const RationalVector& v) const;

    // ambient_dim x dim matrix whose columns are the basis vectors.
    Matrix as_columns() const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> basis_;
};

SubspaceBasis kernel_basis(const Matrix& m);

// Left null space: all y with y^T m = 0.
SubspaceBasis left_kernel_basis(const Matrix& m);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
bool is_contained(const SubspaceBasis& a, const SubspaceBasis& b);
bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b);

// Image of the subspace under m (m.cols() == s.ambient_dim()).
SubspaceBasis image(const Matrix& m, const SubspaceBasis& s);

}  // namespace resonance
