#pragma once

// The Brahmagupta product on A = (Z/nZ)[t]/(t^2 - D), whose norm-one
// elements form the Pell conic x^2 - D y^2 = 1, together with the rational
// parametrization of the conic and the maps between Lucas parameters and
// conic parameters.

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "pellprime/modarith.hpp"
#include "pellprime/recurrence.hpp"

namespace pellprime {

/// x + y t in A. Points of any norm are allowed.
struct ConicPoint {
    Residue x;
    Residue y;

    constexpr auto operator<=>(const ConicPoint&) const = default;
};

/// D and the base point (x~, y~) of a conic test, as integers. The norm
/// x~^2 - D y~^2 is evaluated per modulus.
struct ConicParams {
    std::int64_t D = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    ConicPoint point(const Modulus& n) const noexcept { return {n.reduce(x), n.reduce(y)}; }
    Residue d(const Modulus& n) const noexcept { return n.reduce(D); }
    Residue norm(const Modulus& n) const noexcept;
    /// The matrix [[x~, D y~], [y~, x~]] whose powers track the conic powers.
    Mat2 matrix(const Modulus& n) const noexcept;
    std::string canonical() const;

    constexpr bool operator==(const ConicParams&) const = default;
};

/// A proper divisor of n uncovered while computing, or n itself when the
/// offending value was 0 mod n.
struct Factor {
    std::uint64_t value;

    constexpr bool operator==(const Factor&) const = default;
};

/// The requested object does not exist for this modulus (the value that
/// had to be inverted is 0 mod n).
struct Degenerate {
    constexpr bool operator==(const Degenerate&) const = default;
};

ConicPoint brahmagupta(ConicPoint p, ConicPoint q, Residue d, const Modulus& n) noexcept;
ConicPoint conic_pow(ConicPoint p, std::uint64_t k, Residue d, const Modulus& n) noexcept;
Residue norm(ConicPoint p, Residue d, const Modulus& n) noexcept;
/// Conjugate (x, -y); the group inverse on norm-one points.
ConicPoint conjugate(ConicPoint p, const Modulus& n) noexcept;

/// a -> ((a^2 + D) / (a^2 - D), 2a / (a^2 - D)). Degenerate when
/// a^2 = D mod n (the point at infinity has no residue representative).
using PhiResult = std::variant<ConicPoint, Factor, Degenerate>;
PhiResult phi_param(std::int64_t a, std::int64_t D, const Modulus& n) noexcept;

/// D = P^2 - 4, x~ = P/2, y~ = 1/2 (the latter two as residues mod n).
ConicParams lucas_to_conic(std::int64_t P, const Modulus& n);

/// P = 2x~, Q = x~^2 - D y~^2, both as residues mod n. Requires y~
/// invertible, the condition for the change of basis [[1, -x~], [0, y~]].
using ConicToLucasResult = std::variant<LucasParams, Factor, Degenerate>;
ConicToLucasResult conic_to_lucas(const ConicParams& params, const Modulus& n) noexcept;

}  // namespace pellprime
