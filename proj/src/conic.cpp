#include "pellprime/conic.hpp"

#include <bit>

namespace pellprime {

Residue ConicParams::norm(const Modulus& n) const noexcept {
    return pellprime::norm(point(n), d(n), n);
}

Mat2 ConicParams::matrix(const Modulus& n) const noexcept {
    ConicPoint const p = point(n);
    return Mat2{p.x, n.mul(d(n), p.y), p.y, p.x};
}

std::string ConicParams::canonical() const {
    return "D=" + std::to_string(D) + ";x=" + std::to_string(x) + ";y=" + std::to_string(y);
}

ConicPoint brahmagupta(ConicPoint p, ConicPoint q, Residue d, const Modulus& n) noexcept {
    Residue const x = n.add(n.mul(p.x, q.x), n.mul(d, n.mul(p.y, q.y)));
    Residue const y = n.add(n.mul(p.x, q.y), n.mul(q.x, p.y));
    return ConicPoint{x, y};
}

ConicPoint conic_pow(ConicPoint p, std::uint64_t k, Residue d, const Modulus& n) noexcept {
    if (k == 0) return ConicPoint{n.one(), n.zero()};
    ConicPoint result = p;
    for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
        result = brahmagupta(result, result, d, n);
        if ((k >> bit) & 1) result = brahmagupta(result, p, d, n);
    }
    return result;
}

Residue norm(ConicPoint p, Residue d, const Modulus& n) noexcept {
    return n.sub(n.mul(p.x, p.x), n.mul(d, n.mul(p.y, p.y)));
}

ConicPoint conjugate(ConicPoint p, const Modulus& n) noexcept { return {p.x, n.neg(p.y)}; }

PhiResult phi_param(std::int64_t a, std::int64_t D, const Modulus& n) noexcept {
    Residue const ar = n.reduce(a);
    Residue const dr = n.reduce(D);
    Residue const a2 = n.mul(ar, ar);
    InverseResult const inv = inv_mod(n.sub(a2, dr), n);
    if (!inv.inverse) {
        if (inv.has_factor(n)) return Factor{inv.gcd};
        return Degenerate{};
    }
    Residue const x = n.mul(n.add(a2, dr), *inv.inverse);
    Residue const y = n.mul(n.add(ar, ar), *inv.inverse);
    return ConicPoint{x, y};
}

ConicParams lucas_to_conic(std::int64_t P, const Modulus& n) {
    // n is odd, so 2 is a unit
    Residue const half = *inv_mod(n.reduce(2), n).inverse;
    Residue const p = n.reduce(P);
    Residue const d = n.sub(n.mul(p, p), n.reduce(4));
    return ConicParams{static_cast<std::int64_t>(d.value),
                       static_cast<std::int64_t>(n.mul(p, half).value),
                       static_cast<std::int64_t>(half.value)};
}

ConicToLucasResult conic_to_lucas(const ConicParams& params, const Modulus& n) noexcept {
    InverseResult const inv = inv_mod(n.reduce(params.y), n);
    if (!inv.inverse) {
        if (inv.has_factor(n)) return Factor{inv.gcd};
        return Degenerate{};
    }
    Residue const x = n.reduce(params.x);
    return LucasParams{static_cast<std::int64_t>(n.add(x, x).value),
                       static_cast<std::int64_t>(params.norm(n).value)};
}

}  // namespace pellprime
