#include "resonance/rational.hpp"

#include "resonance/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace resonance {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational literal: \"" + std::string(text) + "\"");

    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(negative ? BigInt(-n) : n, d);
    r.canonicalize();
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::size_t bit_length(const BigInt& value) {
    if (value == 0) return 0;
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<BigInt> primitive_integer_vector(const RationalVector& v) {
    BigInt lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<BigInt> out(v.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& x : out) {
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace resonance
