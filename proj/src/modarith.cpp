#include "pellprime/modarith.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pellprime {

Modulus::Modulus(std::uint64_t n) : n_(n), small_(n < (std::uint64_t{1} << 32)) {
    if (!admissible(n)) {
        throw std::invalid_argument("modulus must be odd with 3 <= n < 2^63, got " +
                                    std::to_string(n));
    }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    int const shift = std::countr_zero(a | b);
    a >>= std::countr_zero(a);
    do {
        b >>= std::countr_zero(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

Residue mul_mod(Residue a, Residue b, const Modulus& n) noexcept { return n.mul(a, b); }

Residue pow_mod(Residue a, std::uint64_t e, const Modulus& n) noexcept {
    if (e == 0) return n.one();
    Residue result = a;
    for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
        result = n.mul(result, result);
        if ((e >> bit) & 1) result = n.mul(result, a);
    }
    return result;
}

InverseResult inv_mod(Residue a, const Modulus& n) noexcept {
    // Extended Euclid; the cofactor t stays below n in magnitude.
    std::int64_t t = 0;
    std::int64_t new_t = 1;
    std::uint64_t r = n.value();
    std::uint64_t new_r = a.value;
    while (new_r != 0) {
        std::uint64_t const q = r / new_r;
        std::int64_t const next_t = static_cast<std::int64_t>(
            static_cast<__int128>(t) - static_cast<__int128>(q) * new_t);
        t = new_t;
        new_t = next_t;
        std::uint64_t const next_r = r - q * new_r;
        r = new_r;
        new_r = next_r;
    }
    if (r != 1) return InverseResult{std::nullopt, r};
    return InverseResult{n.reduce(t), 1};
}

int jacobi(Residue a, const Modulus& n) noexcept {
    std::uint64_t x = a.value;
    std::uint64_t m = n.value();
    int sign = 1;
    while (x != 0) {
        int const twos = std::countr_zero(x);
        x >>= twos;
        // (2/m) = -1 exactly when m = 3, 5 (mod 8)
        if ((twos & 1) && ((m & 7) == 3 || (m & 7) == 5)) sign = -sign;
        // reciprocity: flip when both are 3 (mod 4)
        if ((x & 3) == 3 && (m & 3) == 3) sign = -sign;
        std::uint64_t const rem = m % x;
        m = x;
        x = rem;
    }
    return m == 1 ? sign : 0;
}

int jacobi(std::int64_t a, const Modulus& n) noexcept { return jacobi(n.reduce(a), n); }

std::uint64_t isqrt(std::uint64_t m) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
    // long double is exact enough to land within one step; fix up both ways
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > m)) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= m) ++r;
    return r;
}

bool is_perfect_square(std::uint64_t m) noexcept {
    // quadratic residues mod 64 reject most non-squares without a sqrt
    constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ull;
    if (((kSquaresMod64 >> (m & 63)) & 1) == 0) return false;
    std::uint64_t const r = isqrt(m);
    return r * r == m;
}

}  // namespace pellprime
