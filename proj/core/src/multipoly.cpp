#include "resonance/multipoly.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace resonance {

MultiPoly MultiPoly::constant(std::size_t n, const Rational& c) {
    MultiPoly p(n);
    p.add_term(Exponents(n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("MultiPoly::variable: index out of range");
    Exponents e(n, 0);
    e[i] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Rational& c) {
    MultiPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

std::size_t MultiPoly::degree() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly::degree: zero polynomial");
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, MonoIndex{e}.degree());
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = MonoIndex{terms_.begin()->first}.degree();
    for (const auto& [e, c] : terms_)
        if (MonoIndex{e}.degree() != d) return false;
    return true;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (other.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly out(a.n_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

RationalVector MultiPoly::coordinates(std::size_t d) const {
    RationalVector v(sym_dim(n_, d));
    for (const auto& [e, c] : terms_) {
        if (MonoIndex{e}.degree() != d)
            throw std::invalid_argument("MultiPoly::coordinates: polynomial is not homogeneous of degree d");
        v[monomial_rank(e)] = c;
    }
    return v;
}

MultiPoly MultiPoly::from_coordinates(std::size_t n, std::size_t d, const RationalVector& coords) {
    if (coords.size() != sym_dim(n, d)) throw std::invalid_argument("MultiPoly::from_coordinates: length");
    MultiPoly p(n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) p.add_term(monomial_unrank(n, d, i), coords[i]);
    return p;
}

namespace {

std::string monomial_string(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::string mono = monomial_string(e);
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += resonance::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += resonance::to_string(mag) + '*' + mono;
        }
    }
    return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MultiPoly(nvars)) {}

bool PolyMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero()) return false;
    return true;
}

SparseMatrix PolyMatrix::graded_piece(std::size_t q, std::size_t entry_degree) const {
    const std::size_t tgt = sym_dim(nvars_, q);
    if (q < entry_degree) return SparseMatrix(cols_ * tgt, 0);
    const auto monos = monomials(nvars_, q - entry_degree);
    SparseMatrix m(cols_ * tgt, rows_ * monos.size());
    Exponents prod(nvars_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t s = 0; s < monos.size(); ++s) {
            // Column scaled by the lcm of denominators in row r; rank unaffected.
            BigInt lcm = 1;
            for (std::size_t c = 0; c < cols_; ++c)
                for (const auto& [e, v] : (*this)(r, c).terms())
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            ColumnBuilder col;
            for (std::size_t c = 0; c < cols_; ++c) {
                for (const auto& [e, v] : (*this)(r, c).terms()) {
                    if (MonoIndex{e}.degree() != entry_degree)
                        throw std::invalid_argument("PolyMatrix::graded_piece: entry of unexpected degree");
                    for (std::size_t i = 0; i < nvars_; ++i) prod[i] = e[i] + monos[s][i];
                    const BigInt scaled = v.get_num() * (lcm / v.get_den());
                    col.add(static_cast<std::uint32_t>(c * tgt + monomial_rank(prod)), scaled);
                }
            }
            m.set_column(r * monos.size() + s, col.finish());
        }
    }
    return m;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

MultiPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t k = m.rows();
    if (k > 24) throw std::invalid_argument("determinant: matrix too large for subset expansion");
    const std::size_t n = m.nvars();
    if (k == 0) return MultiPoly::constant(n, 1);

    // minors[mask] = det of rows 0..popcount(mask)-1 and the columns in mask.
    std::unordered_map<std::uint32_t, MultiPoly> minors;
    minors.emplace(0u, MultiPoly::constant(n, 1));
    std::vector<std::uint32_t> layer{0u};
    for (std::size_t row = 0; row < k; ++row) {
        std::unordered_map<std::uint32_t, MultiPoly> next;
        for (std::uint32_t mask : layer) {
            const MultiPoly& sub = minors.at(mask);
            if (sub.is_zero()) continue;
            for (std::size_t c = 0; c < k; ++c) {
                if (mask & (1u << c)) continue;
                const MultiPoly& entry = m(row, c);
                if (entry.is_zero()) continue;
                const std::uint32_t grown = mask | (1u << c);
                // Expansion along the last row: sign (-1)^(row + position of c in grown).
                const int position = std::popcount(grown & ((1u << c) - 1));
                MultiPoly term = entry * sub;
                if ((row + static_cast<std::size_t>(position)) % 2) term = -term;
                auto [it, inserted] = next.try_emplace(grown, n);
                it->second += term;
            }
        }
        layer.clear();
        for (auto& [mask, poly] : next) layer.push_back(mask);
        minors = std::move(next);
    }
    const std::uint32_t all = (k == 32) ? ~0u : ((1u << k) - 1);
    auto it = minors.find(all);
    return it == minors.end() ? MultiPoly(n) : it->second;
}

SubspaceBasis IdealSlice::subspace() const {
    std::vector<RationalVector> vecs;
    for (const auto& p : basis) vecs.push_back(p.coordinates(degree));
    return SubspaceBasis::span(sym_dim(n, degree), vecs);
}

IdealSlice IdealSlice::from_subspace(std::size_t n, std::size_t d, const SubspaceBasis& s) {
    IdealSlice out{n, d, {}};
    for (const auto& v : s.vectors()) out.basis.push_back(MultiPoly::from_coordinates(n, d, v));
    return out;
}

SubspaceBasis ideal_slice(const std::vector<MultiPoly>& generators, std::size_t n, std::size_t d) {
    std::vector<RationalVector> vecs;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal_slice: generator is not homogeneous");
        const std::size_t e = g.degree();
        if (e > d) continue;
        for (const auto& mono : monomials(n, d - e)) vecs.push_back((g * MultiPoly::monomial(mono)).coordinates(d));
    }
    return SubspaceBasis::span(sym_dim(n, d), vecs);
}

SubspaceBasis intersection_slice(const std::vector<std::vector<MultiPoly>>& ideals, std::size_t n,
                                 std::size_t d) {
    SubspaceBasis acc = SubspaceBasis::full(sym_dim(n, d));
    for (const auto& gens : ideals) acc = intersect(acc, ideal_slice(gens, n, d));
    return acc;
}

}  // namespace resonance
