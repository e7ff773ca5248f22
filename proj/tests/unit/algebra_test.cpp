#include <doctest.h>

#include <cstdint>

#include "polynet/algebra/matrix.hpp"
#include "polynet/algebra/prime_field.hpp"
#include "polynet/algebra/rational_field.hpp"
#include "polynet/rng.hpp"

using namespace polynet;
using algebra::Matrix;
using algebra::PrimeField;
using algebra::RationalField;

namespace {

// independent primality oracle: trial division
bool naive_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<PrimeField> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.below(f.modulus());
    return m;
}

} // namespace

TEST_CASE("miller-rabin agrees with trial division") {
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(algebra::is_prime_u64(n) == naive_is_prime(n));
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t n = (1ULL << 20) + rng.below(1ULL << 21);
        CHECK(algebra::is_prime_u64(n) == naive_is_prime(n));
    }
}

TEST_CASE("random_prime is deterministic, in range, and prime") {
    const auto f1 = algebra::random_prime(0, 1ULL << 20);
    const auto f2 = algebra::random_prime(0, 1ULL << 20);
    CHECK(f1.modulus() == f2.modulus());
    CHECK(f1.modulus() >= (1ULL << 20));
    CHECK(f1.modulus() < (1ULL << 31));
    CHECK(naive_is_prime(f1.modulus()));
    const auto f3 = algebra::random_prime(1, 1ULL << 20);
    CHECK(f3.modulus() != f1.modulus()); // astronomically unlikely to collide divergently
    CHECK(naive_is_prime(f3.modulus()));
    // lower bound above 2^20 is honored
    const auto f4 = algebra::random_prime(5, 3ULL << 29);
    CHECK(f4.modulus() >= (3ULL << 29));
}

TEST_CASE("prime field constructor rejects composites and out-of-range moduli") {
    CHECK_THROWS_AS(PrimeField(1048576), ConfigError);       // 2^20, even
    CHECK_THROWS_AS(PrimeField(1048575), ConfigError);       // below range
    CHECK_THROWS_AS(PrimeField(7), ConfigError);             // small prime, out of range
    CHECK_THROWS_AS(PrimeField((1ULL << 31) + 11), ConfigError);
    CHECK_THROWS_AS(PrimeField(1048577 * 3), ConfigError);   // composite in range
    CHECK_NOTHROW(PrimeField(1048583));
}

TEST_CASE("barrett arithmetic matches naive modular arithmetic") {
    const PrimeField f = algebra::random_prime(99, 1ULL << 30);
    const std::uint64_t p = f.modulus();
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng.below(p), b = rng.below(p);
        CHECK(f.mul(a, b) == static_cast<std::uint64_t>((__uint128_t(a) * b) % p));
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.sub(a, b) == (a + p - b) % p);
        if (b != 0) CHECK(f.mul(f.inv(b), b) == 1);
    }
    CHECK(f.pow(2, 10) == 1024 % p);
    CHECK(f.from_int(-1) == p - 1);
}

TEST_CASE("rank: identity and zero matrices") {
    const PrimeField f(1048583);
    CHECK(algebra::rank(Matrix<PrimeField>::identity(f, 3)) == 3);
    CHECK(algebra::rank(Matrix<PrimeField>(f, 4, 7)) == 0);
    RationalField q;
    CHECK(algebra::rank(Matrix<RationalField>::identity(q, 5)) == 5);
    CHECK(algebra::rank(Matrix<RationalField>(q, 3, 2)) == 0);
}

TEST_CASE("solve: identity, diagonal, and round-trip oracle") {
    const PrimeField f(1048583);
    Rng rng(11);
    auto b = random_matrix(f, 4, 2, rng);
    CHECK(algebra::solve(Matrix<PrimeField>::identity(f, 4), b) == b);

    // diagonal system: entries must be exact modular inverses
    Matrix<PrimeField> d(f, 2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    Matrix<PrimeField> rhs(f, 2, 1);
    rhs.at(0, 0) = 1;
    rhs.at(1, 0) = 1;
    const auto x = algebra::solve(d, rhs);
    CHECK(f.mul(2, x.at(0, 0)) == 1);
    CHECK(f.mul(3, x.at(1, 0)) == 1);

    RationalField qf;
    Matrix<RationalField> dq(qf, 2, 2);
    dq.at(0, 0) = 2;
    dq.at(1, 1) = 3;
    Matrix<RationalField> rq(qf, 2, 1);
    rq.at(0, 0) = 1;
    rq.at(1, 0) = 1;
    const auto xq = algebra::solve(dq, rq);
    CHECK(xq.at(0, 0) == mpq_class(1, 2));
    CHECK(xq.at(1, 0) == mpq_class(1, 3));

    // round-trip: random invertible 5x5, known X, B = M X
    for (int it = 0; it < 10; ++it) {
        Matrix<PrimeField> m(f, 5, 5);
        do {
            m = random_matrix(f, 5, 5, rng);
        } while (algebra::rank(m) < 5);
        const auto known = random_matrix(f, 5, 3, rng);
        CHECK(algebra::solve(m, m.multiply(known)) == known);
    }
}

TEST_CASE("solve throws on singular systems") {
    const PrimeField f(1048583);
    Matrix<PrimeField> m(f, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    Matrix<PrimeField> b(f, 2, 1);
    b.at(0, 0) = 1;
    CHECK_THROWS_AS(algebra::solve(m, b), SingularMatrixError);
}

TEST_CASE("rank is invariant under permutation and nonzero scaling") {
    const PrimeField f = algebra::random_prime(4, 1ULL << 20);
    Rng rng(21);
    for (int it = 0; it < 20; ++it) {
        const std::size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
        auto m = random_matrix(f, rows, cols, rng);
        // sprinkle zero rows to vary the rank
        if (rng.below(2)) {
            const std::size_t zr = rng.below(rows);
            for (std::size_t j = 0; j < cols; ++j) m.at(zr, j) = 0;
        }
        const std::size_t base = algebra::rank(m);
        auto shuffled = m;
        shuffled.swap_rows(rng.below(rows), rng.below(rows));
        const std::size_t c1 = rng.below(cols), c2 = rng.below(cols);
        for (std::size_t i = 0; i < rows; ++i) std::swap(shuffled.at(i, c1), shuffled.at(i, c2));
        const std::uint64_t scale = 1 + rng.below(f.modulus() - 1);
        for (std::size_t j = 0; j < cols; ++j)
            shuffled.at(0, j) = f.mul(shuffled.at(0, j), scale);
        CHECK(algebra::rank(shuffled) == base);
        CHECK(algebra::rank(m.transposed()) == base);
    }
}

TEST_CASE("rank over F_p never exceeds rank over Q on integer matrices") {
    RationalField qf;
    Rng rng(31);
    for (int it = 0; it < 15; ++it) {
        const std::size_t rows = 2 + rng.below(4), cols = 2 + rng.below(4);
        Matrix<RationalField> mq(qf, rows, cols);
        const PrimeField fp = algebra::random_prime(100 + static_cast<std::uint64_t>(it), 1ULL << 20);
        Matrix<PrimeField> mp(fp, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const std::int64_t v = rng.in_range(-6, 6);
                mq.at(i, j) = qf.from_int(v);
                mp.at(i, j) = fp.from_int(v);
            }
        CHECK(algebra::rank(mp) <= algebra::rank(mq));
    }
}

TEST_CASE("bareiss rank handles rank-deficient rational matrices") {
    RationalField qf;
    // rows 0 and 2 proportional, so rank 2
    Matrix<RationalField> m(qf, 3, 3);
    const int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {2, 4, 6}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = vals[i][j];
    CHECK(algebra::rank(m) == 2);
}
