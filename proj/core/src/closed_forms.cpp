#include "resonance/closed_forms.hpp"

#include "resonance/errors.hpp"

#include <stdexcept>
#include <string>

namespace resonance {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw ExactnessError(std::string(what) + ": " + to_string(num) + " is not divisible by " + to_string(den));
    return num / den;
}

BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= static_cast<mp_bitcnt_t>(e);
    return r;
}

}  // namespace

BigInt free_koszul_dim(std::size_t n, std::size_t q) {
    if (n == 0) throw std::invalid_argument("free_koszul_dim: n must be positive");
    return BigInt(as_long(q + 1)) * binomial(as_long(q + n), as_long(q + 2));
}

BigInt chen_rank_strongly_isotropic(const ChenProfile& profile, std::size_t q) {
    if (q < 2) throw std::invalid_argument("chen_rank_strongly_isotropic: q must be at least 2");
    BigInt total = 0;
    for (std::size_t d : profile.component_dims) {
        if (d == 0) throw std::invalid_argument("chen_rank_strongly_isotropic: component dimension must be positive");
        total += BigInt(as_long(q - 1)) * binomial(as_long(q + d - 2), as_long(q));
    }
    return total;
}

BigInt chen_rank_surface(std::size_t g, std::size_t q) {
    if (g < 2) throw std::invalid_argument("chen_rank_surface: genus must be at least 2");
    if (q == 0) throw std::invalid_argument("chen_rank_surface: q must be at least 1");
    const BigInt gg(as_long(g));
    if (q == 1) return 2 * gg;
    if (q == 2) return 2 * gg * gg - gg - 1;
    return BigInt(as_long(q - 1)) * binomial(as_long(2 * g + q - 2), as_long(q)) -
           binomial(as_long(2 * g + q - 3), as_long(q - 2));
}

BigInt chen_rank_kodaira(std::size_t b1, std::size_t b2, std::size_t q) {
    if (b1 < 2 || b2 < 2) throw std::invalid_argument("chen_rank_kodaira: base genera must be at least 2");
    if (q < 3) throw std::invalid_argument("chen_rank_kodaira: q must be at least 3");
    const long ql = as_long(q);
    return BigInt(ql - 1) * (binomial(as_long(2 * b1) + ql - 2, ql) + binomial(as_long(2 * b2) + ql - 2, ql)) -
           binomial(as_long(2 * b1) + ql - 3, ql - 2) - binomial(as_long(2 * b2) + ql - 3, ql - 2);
}

BigInt kahler_conjecture_rhs(const std::map<std::size_t, std::size_t>& genus_counts, std::size_t q) {
    BigInt total = 0;
    for (const auto& [g, h] : genus_counts) total += BigInt(as_long(h)) * chen_rank_surface(g, q);
    return total;
}

std::size_t subpencil_min_a(std::size_t g) { return (g + 3) / 2; }

BigInt subpencil_count(std::size_t g, std::size_t a) {
    if (a < subpencil_min_a(g) || a > g + 1)
        throw std::invalid_argument("subpencil_count: a=" + std::to_string(a) + " outside [" +
                                    std::to_string(subpencil_min_a(g)) + ", " + std::to_string(g + 1) + "]");
    const BigInt multinomial = exact_quotient(
        factorial(g + 1), factorial(g - a + 1) * factorial(g - a + 2) * factorial(2 * a - g - 2), "multinomial");
    return exact_quotient(pow2(2 * a - g - 2) * multinomial, BigInt(as_long(g + 1)), "subpencil_count");
}

GrassmannianIdentity grassmannian_degree_identity(std::size_t g) {
    if (g == 0) throw std::invalid_argument("grassmannian_degree_identity: g must be positive");
    GrassmannianIdentity id;
    id.lhs = 0;
    for (std::size_t a = subpencil_min_a(g); a <= g + 1; ++a) id.lhs += subpencil_count(g, a);
    id.rhs = exact_quotient(factorial(2 * g + 2), factorial(g + 1) * factorial(g + 2), "grassmannian degree");
    id.equal = id.lhs == id.rhs;
    return id;
}

PorteousClass porteous_coefficient(std::size_t g, std::size_t a, std::size_t d) {
    if (g == 0 || a == 0 || a > g + 1 || 2 * g + 2 * a < d + 1 || d > 4 * g + 1)
        throw std::invalid_argument("porteous_coefficient: parameters out of range (g=" + std::to_string(g) +
                                    ", a=" + std::to_string(a) + ", d=" + std::to_string(d) + ")");
    const std::size_t e = 2 * g + 2 * a - d - 1;
    PorteousClass out;
    out.theta_power = 4 * g - d + 1;
    out.coefficient = make_rational(pow2(e), factorial(e) * factorial(g - a + 1) * factorial(g - a + 2));
    if (out.theta_power == g) {
        const Rational value = out.coefficient * Rational(factorial(g));
        if (value.get_den() != 1)
            throw ExactnessError("porteous_coefficient: degree-zero class " + to_string(value) + " is not an integer");
        out.count = value.get_num();
    }
    return out;
}

BigInt chen_rank_via_engine(const PairSpec& spec, std::size_t q, const EngineOptions& opts) {
    if (q < 2) throw std::invalid_argument("chen_rank_via_engine: q must be at least 2");
    return BigInt(static_cast<unsigned long>(wq_dim_homology(spec, q - 2, opts)));
}

PairSpec surface_spec(std::size_t g) {
    if (g == 0) throw std::invalid_argument("surface_spec: genus must be positive");
    const std::size_t n = 2 * g;
    Bivector omega = Bivector::zero(n);
    for (std::size_t i = 0; i < g; ++i) omega.coords[pair_index(i, g + i, n)] = 1;
    return PairSpec::from_k(n, {omega});
}

}  // namespace resonance
