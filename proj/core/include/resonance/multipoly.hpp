#pragma once

#include "resonance/exact_linalg.hpp"
#include "resonance/multilinear.hpp"
#include "resonance/rational.hpp"
#include "resonance/sparse.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace resonance {

// Sparse polynomial in x1..xn with rational coefficients. Terms are kept in
// the same lexicographic order as the monomial bases (x1 > ... > xn).
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t n) : n_(n) {}

    static MultiPoly constant(std::size_t n, const Rational& c);
    static MultiPoly variable(std::size_t n, std::size_t i);  // 0-based
    static MultiPoly monomial(const Exponents& exps, const Rational& c = 1);

    std::size_t n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Throws std::logic_error on the zero polynomial.
    std::size_t degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Exponents& exps) const;
    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    // Coordinates of a homogeneous polynomial of degree d in the monomial basis of S_d.
    RationalVector coordinates(std::size_t d) const;
    static MultiPoly from_coordinates(std::size_t n, std::size_t d, const RationalVector& coords);

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    TermMap terms_;
};

// Matrix of polynomials. For a presentation matrix, rows index relations
// (source basis) and columns index generators (target basis).
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool row_is_zero(std::size_t r) const;

    // Degree-q piece of the map sending source basis element r to
    // sum_c entry(r,c) * target_c, for entries homogeneous of degree
    // `entry_degree`: (rows ⊗ S_{q-e}) -> (cols ⊗ S_q). Target index is
    // c * sym_dim(n,q) + monomial rank.
    SparseMatrix graded_piece(std::size_t q, std::size_t entry_degree = 1) const;

    std::string to_string() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<MultiPoly> data_;
};

// Determinant of a square polynomial matrix by Laplace expansion memoized
// over column subsets (2^k k products).
MultiPoly determinant(const PolyMatrix& square);

// Homogeneous degree-d slice of a graded ideal, as a basis of polynomials.
struct IdealSlice {
    std::size_t n = 0;
    std::size_t degree = 0;
    std::vector<MultiPoly> basis;

    // Coordinates in the monomial basis of S_d.
    SubspaceBasis subspace() const;
    static IdealSlice from_subspace(std::size_t n, std::size_t d, const SubspaceBasis& s);
};

// Degree-d slice of the ideal generated by homogeneous `generators`.
SubspaceBasis ideal_slice(const std::vector<MultiPoly>& generators, std::size_t n, std::size_t d);

// Degree-d slice of an intersection of ideals; the empty family gives S_d.
SubspaceBasis intersection_slice(const std::vector<std::vector<MultiPoly>>& ideals, std::size_t n,
                                 std::size_t d);

}  // namespace resonance
