#include "polynet/algebra/prime_field.hpp"

#include "polynet/rng.hpp"

namespace polynet::algebra {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(__uint128_t(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // {2,3,5,7} is a deterministic witness set for n < 3'215'031'751.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField random_prime(std::uint64_t seed, std::uint64_t lower_bound) {
    const std::uint64_t lo = std::max<std::uint64_t>(lower_bound, 1ULL << 20);
    const std::uint64_t hi = 1ULL << 31;
    if (lo >= hi) throw ConfigError("prime lower bound must be below 2^31");
    Rng rng(seed);
    for (;;) {
        std::uint64_t candidate = lo + rng.below(hi - lo);
        if (is_prime_u64(candidate)) return PrimeField(candidate);
    }
}

} // namespace polynet::algebra
