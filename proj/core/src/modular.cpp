#include "resonance/modular.hpp"

#include <stdexcept>

namespace resonance {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t from) {
    if (from <= 2) return 2;
    std::uint64_t c = from | 1;
    while (!is_prime(c)) c += 2;
    return c;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    // p is prime
    return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mod(const BigInt& value, std::uint64_t p) {
    BigInt r;
    BigInt modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::optional<std::uint64_t> reduce_mod(const Rational& value, std::uint64_t p) {
    std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0) return std::nullopt;
    return mul_mod(reduce_mod(value.get_num(), p), inv_mod(den, p), p);
}

MontgomeryField::MontgomeryField(std::uint64_t p) : p_(p) {
    if ((p & 1) == 0 || p >= (1ULL << 62))
        throw std::invalid_argument("MontgomeryField: modulus must be odd and below 2^62");
    std::uint64_t inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
    r2_ = static_cast<std::uint64_t>(r * r % p);
    one_ = static_cast<std::uint64_t>(r);
}

std::uint64_t MontgomeryField::inv(std::uint64_t a) const {
    std::uint64_t plain = from_mont(a);
    return to_mont(inv_mod(plain, p_));
}

std::uint64_t PrimeStream::next() {
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
    for (;;) {
        std::uint64_t p = next_prime(dist(rng_));
        if (p < (1ULL << 62)) return p;
    }
}

}  // namespace resonance
