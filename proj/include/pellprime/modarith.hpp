#pragma once

// Exact arithmetic in Z/nZ for odd moduli 3 <= n < 2^63.
//
// Residues are plain canonical representatives in [0, n). Products are
// computed in 64 bits when n < 2^32 and through a 128-bit intermediate
// otherwise, so no operation can overflow for any admissible modulus.

#include <compare>
#include <cstdint>
#include <optional>

namespace pellprime {

/// Canonical representative of a class in Z/nZ.
struct Residue {
    std::uint64_t value = 0;

    constexpr auto operator<=>(const Residue&) const = default;
};

class Modulus {
public:
    static constexpr std::uint64_t kMax = (std::uint64_t{1} << 63) - 1;

    /// Throws std::invalid_argument unless n is odd and 3 <= n < 2^63.
    explicit Modulus(std::uint64_t n);

    static constexpr bool admissible(std::uint64_t n) noexcept {
        return n >= 3 && (n & 1) == 1 && n <= kMax;
    }

    constexpr std::uint64_t value() const noexcept { return n_; }

    /// Canonicalizes a signed integer into [0, n).
    constexpr Residue reduce(std::int64_t a) const noexcept {
        std::int64_t const m = static_cast<std::int64_t>(n_);
        std::int64_t r = a % m;
        if (r < 0) r += m;
        return Residue{static_cast<std::uint64_t>(r)};
    }
    constexpr Residue reduce_unsigned(std::uint64_t a) const noexcept {
        return Residue{a % n_};
    }

    constexpr Residue add(Residue a, Residue b) const noexcept {
        std::uint64_t const s = a.value + b.value;  // < 2^64 since both < 2^63
        return Residue{s >= n_ ? s - n_ : s};
    }
    constexpr Residue sub(Residue a, Residue b) const noexcept {
        return Residue{a.value >= b.value ? a.value - b.value : a.value + n_ - b.value};
    }
    constexpr Residue neg(Residue a) const noexcept {
        return Residue{a.value == 0 ? 0 : n_ - a.value};
    }
    constexpr Residue mul(Residue a, Residue b) const noexcept {
        if (small_) return Residue{a.value * b.value % n_};
        return Residue{static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a.value) * b.value % n_)};
    }

    constexpr Residue zero() const noexcept { return Residue{0}; }
    constexpr Residue one() const noexcept { return Residue{1}; }
    constexpr Residue minus_one() const noexcept { return Residue{n_ - 1}; }

    constexpr bool operator==(const Modulus& other) const noexcept { return n_ == other.n_; }

private:
    std::uint64_t n_;
    bool small_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// a*b mod n.
Residue mul_mod(Residue a, Residue b, const Modulus& n) noexcept;

/// a^e mod n by left-to-right square-and-multiply.
Residue pow_mod(Residue a, std::uint64_t e, const Modulus& n) noexcept;

/// Result of inv_mod. When gcd == 1 the inverse is present; otherwise gcd
/// is gcd(a, n): a proper divisor of n when 1 < gcd < n, and n itself when
/// a = 0 mod n (no inverse and no factor).
struct InverseResult {
    std::optional<Residue> inverse;
    std::uint64_t gcd = 1;

    bool has_factor(const Modulus& n) const noexcept { return gcd > 1 && gcd < n.value(); }
};

InverseResult inv_mod(Residue a, const Modulus& n) noexcept;

/// Jacobi symbol (a/n) for any signed a; 0 when gcd(a, n) > 1.
int jacobi(std::int64_t a, const Modulus& n) noexcept;

/// Jacobi symbol of a residue (a already in [0, n)).
int jacobi(Residue a, const Modulus& n) noexcept;

std::uint64_t isqrt(std::uint64_t m) noexcept;
bool is_perfect_square(std::uint64_t m) noexcept;

}  // namespace pellprime
