#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "pellprime/modarith.hpp"

using namespace pellprime;

namespace {

constexpr std::uint64_t kNear63 = (std::uint64_t{1} << 63) - 1;

}  // namespace

TEST_CASE("mul_mod examples") {
    CHECK(mul_mod(Residue{2}, Residue{3}, Modulus(5)) == Residue{1});
    Modulus const m(1000003);
    CHECK(mul_mod(Residue{0}, Residue{999999}, m) == Residue{0});
    // 9999999966 = -1 mod 9999999967
    CHECK(mul_mod(Residue{9999999966}, Residue{9999999966}, Modulus(9999999967)) == Residue{1});
}

TEST_CASE("pow_mod examples") {
    Modulus const m(1001);
    CHECK(pow_mod(Residue{17}, 0, m) == Residue{1});
    // 1024 mod 1001
    CHECK(pow_mod(Residue{2}, 10, m) == Residue{23});
    CHECK(pow_mod(Residue{3}, 100, Modulus(101)) == Residue{1});
}

TEST_CASE("inv_mod examples") {
    Modulus const nine(9);
    CHECK(inv_mod(Residue{1}, nine).inverse == Residue{1});
    CHECK(inv_mod(Residue{2}, nine).inverse == Residue{5});
    InverseResult const shared = inv_mod(Residue{3}, nine);
    CHECK_FALSE(shared.inverse);
    CHECK(shared.gcd == 3);
    CHECK(shared.has_factor(nine));
    InverseResult const zero = inv_mod(Residue{0}, nine);
    CHECK_FALSE(zero.inverse);
    CHECK(zero.gcd == 9);
    CHECK_FALSE(zero.has_factor(nine));
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi(std::int64_t{1}, Modulus(9)) == 1);
    CHECK(jacobi(std::int64_t{3}, Modulus(9)) == 0);
    int const expected = oracle::legendre_by_enumeration(5, 17) * oracle::legendre_by_enumeration(5, 19);
    CHECK(expected == -1);
    CHECK(jacobi(std::int64_t{5}, Modulus(323)) == expected);
    // negative arguments: (-1/n) = (-1)^((n-1)/2)
    CHECK(jacobi(std::int64_t{-1}, Modulus(7)) == -1);
    CHECK(jacobi(std::int64_t{-1}, Modulus(13)) == 1);
    CHECK(jacobi(std::int64_t{-7}, Modulus(323)) == oracle::jacobi(-7, 323));
}

TEST_CASE("gcd and perfect squares") {
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(17, 19) == 1);
    CHECK(is_perfect_square(25));
    CHECK_FALSE(is_perfect_square(26));
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(3037000499ull * 3037000499ull));
    CHECK_FALSE(is_perfect_square(3037000499ull * 3037000499ull - 1));
    CHECK_FALSE(is_perfect_square(3037000499ull * 3037000499ull + 1));
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ull);
    for (std::uint64_t k = 1; k < 20000; ++k) {
        REQUIRE(is_perfect_square(k * k));
        REQUIRE_FALSE(is_perfect_square(k * k + 1));
        REQUIRE_FALSE(is_perfect_square(k * k + 2 * k));
    }
}

TEST_CASE("modulus rejects inadmissible values") {
    CHECK_THROWS_AS(Modulus{1}, std::invalid_argument);
    CHECK_THROWS_AS(Modulus{10}, std::invalid_argument);
    CHECK_THROWS_AS(Modulus{std::uint64_t{1} << 63}, std::invalid_argument);
    CHECK_NOTHROW(Modulus{kNear63});
    Modulus const m(kNear63);
    CHECK(m.reduce(-1) == Residue{kNear63 - 1});
    CHECK(m.reduce(std::numeric_limits<std::int64_t>::min()) == Residue{kNear63 - 1});
}

TEST_CASE("mul_mod, pow_mod and jacobi agree with GMP near 2^63") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t const n = oracle::random_odd(rng, kNear63 - (std::uint64_t{1} << 40), kNear63);
        Modulus const m(n);
        std::uniform_int_distribution<std::uint64_t> below(0, n - 1);
        std::uint64_t const a = below(rng);
        std::uint64_t const b = below(rng);
        std::uint64_t const e = rng();
        REQUIRE(mul_mod(Residue{a}, Residue{b}, m).value == oracle::mulmod(a, b, n));
        REQUIRE(pow_mod(Residue{a}, e, m).value == oracle::powmod(a, e, n));
        auto const signed_a = static_cast<std::int64_t>(rng());
        REQUIRE(jacobi(signed_a, m) == oracle::jacobi(signed_a, n));
    }
}

TEST_CASE("small moduli take the 64-bit path and still agree with GMP") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t const n = oracle::random_odd(rng, 3, (std::uint64_t{1} << 32) - 1);
        Modulus const m(n);
        std::uniform_int_distribution<std::uint64_t> below(0, n - 1);
        std::uint64_t const a = below(rng);
        std::uint64_t const b = below(rng);
        REQUIRE(mul_mod(Residue{a}, Residue{b}, m).value == oracle::mulmod(a, b, n));
        REQUIRE(pow_mod(Residue{a}, b, m).value == oracle::powmod(a, b, n));
    }
}

TEST_CASE("jacobi is completely multiplicative") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        std::uint64_t const n = oracle::random_odd(rng, 3, 1'000'000'007);
        Modulus const m(n);
        std::int64_t const a = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        std::int64_t const b = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        REQUIRE(jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m));
    }
}

TEST_CASE("Euler criterion for all primes below 10^4") {
    for (std::uint64_t p : oracle::primes_below(10000)) {
        if (p == 2) continue;
        Modulus const m(p);
        for (std::int64_t a = 1; a <= 50; ++a) {
            if (a % static_cast<std::int64_t>(p) == 0) continue;
            Residue const e = pow_mod(m.reduce(a), (p - 1) / 2, m);
            int const euler = e == m.one() ? 1 : -1;
            REQUIRE(e == (euler == 1 ? m.one() : m.minus_one()));
            REQUIRE(jacobi(a, m) == euler);
        }
    }
}

TEST_CASE("inv_mod returns a true inverse whenever gcd is 1") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t const n = oracle::random_odd(rng, 3, kNear63);
        Modulus const m(n);
        Residue const a{rng() % n};
        InverseResult const r = inv_mod(a, m);
        if (r.gcd == 1) {
            REQUIRE(r.inverse);
            REQUIRE(mul_mod(a, *r.inverse, m) == m.one());
        } else {
            REQUIRE_FALSE(r.inverse);
            REQUIRE(n % r.gcd == 0);
            REQUIRE(a.value % r.gcd == 0);
        }
    }
}
