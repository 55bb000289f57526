#pragma once

#include "resonance/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace resonance {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t next_prime(std::uint64_t from);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

std::uint64_t reduce_mod(const BigInt& value, std::uint64_t p);

// nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rational& value, std::uint64_t p);

// Montgomery arithmetic for odd p < 2^62. Values are kept in Montgomery form.
class MontgomeryField {
public:
    explicit MontgomeryField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t to_mont(std::uint64_t x) const { return mul(x % p_, r2_); }
    std::uint64_t from_mont(std::uint64_t x) const { return redc(x); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t one() const { return one_; }

private:
    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
        unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
        std::uint64_t r = static_cast<std::uint64_t>(u);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_;
    std::uint64_t neg_inv_;  // -p^{-1} mod 2^64
    std::uint64_t r2_;       // 2^128 mod p
    std::uint64_t one_;
};

// Reproducible stream of random primes in [2^61, 2^62).
class PrimeStream {
public:
    explicit PrimeStream(std::uint64_t seed = 0x5eed'c0de'2024ULL) : rng_(seed) {}
    std::uint64_t next();

private:
    std::mt19937_64 rng_;
};

}  // namespace resonance
