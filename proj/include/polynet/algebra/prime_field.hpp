#pragma once

#include <cstdint>
#include <string>

#include "polynet/errors.hpp"

namespace polynet::algebra {

// Deterministic Miller-Rabin, valid for all n < 3'215'031'751 with the
// witness set {2,3,5,7}; we only use moduli below 2^31.
bool is_prime_u64(std::uint64_t n);

// Arithmetic context for Z/pZ with 2^20 < p < 2^31. Elements are plain
// uint64_t values in [0, p); the context is copied freely (16 bytes).
// Reduction after multiply uses a precomputed Barrett constant, which keeps
// dense elimination loops off the hardware divider.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p <= (1ULL << 20) || p >= (1ULL << 31))
            throw ConfigError("prime modulus out of range (2^20, 2^31): " + std::to_string(p));
        if (!is_prime_u64(p))
            throw ConfigError("modulus is not prime: " + std::to_string(p));
        barrett_ = UINT64_MAX / p + 1; // = floor(2^64/p)+1 for odd p
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return r < 0 ? static_cast<Elem>(r + static_cast<std::int64_t>(p_)) : static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }

    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem mul(Elem a, Elem b) const { return reduce(a * b); }

    // Barrett reduction, valid for x < 2^62 (any product of two elements).
    // The quotient estimate never undershoots and overshoots by at most
    // one, in which case r wraps below zero and one add-back fixes it.
    Elem reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((__uint128_t(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        if (r >= p_) r += p_;
        return r;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw SingularMatrixError("division by zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return t < 0 ? static_cast<Elem>(t + static_cast<std::int64_t>(p_)) : static_cast<Elem>(t);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

    static constexpr bool is_finite_field = true;

private:
    std::uint64_t p_;
    std::uint64_t barrett_;
};

// Uniformly sampled prime in [max(lower_bound, 2^20), 2^31), deterministic
// in the seed (rejection sampling over the interval).
PrimeField random_prime(std::uint64_t seed, std::uint64_t lower_bound);

} // namespace polynet::algebra
