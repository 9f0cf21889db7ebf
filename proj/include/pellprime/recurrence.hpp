#pragma once

// 2x2 matrices over Z/nZ and the degree-two sequences they generate.
//
// For a matrix M, the pair (V_k, U_k) is the first column of M^k, i.e.
// M^k applied to (1, 0). With the Lucas companion matrix L = [[P, -Q], [1, 0]]
// this gives (U_{k+1}, U_k); with [[P, -Q], [R, 0]] it gives the sequences
// with initial values U_0 = 0, U_1 = R and V_0 = 1, V_1 = P. Every sequence
// in the library is evaluated through mat_pow.

#include <cstdint>
#include <string>

#include "pellprime/modarith.hpp"

namespace pellprime {

/// Row-major [[a, b], [c, d]] with entries reduced mod n.
struct Mat2 {
    Residue a, b, c, d;

    constexpr bool operator==(const Mat2&) const = default;

    static constexpr Mat2 identity() noexcept { return Mat2{{1}, {0}, {0}, {1}}; }
    static Mat2 from_integers(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                              const Modulus& n) noexcept;
};

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs, const Modulus& n) noexcept;
Mat2 mat_pow(const Mat2& m, std::uint64_t k, const Modulus& n) noexcept;
Residue mat_det(const Mat2& m, const Modulus& n) noexcept;

/// Lucas sequence with characteristic polynomial t^2 - P t + Q.
struct LucasParams {
    std::int64_t P = 0;
    std::int64_t Q = 0;

    /// P^2 - 4Q reduced mod n (exact for any int64 P, Q).
    Residue discriminant(const Modulus& n) const noexcept;
    Mat2 companion(const Modulus& n) const noexcept;
    std::string canonical() const;

    constexpr bool operator==(const LucasParams&) const = default;
};

/// Parameters of the matrix [[P, -Q], [R, 0]]; characteristic polynomial
/// t^2 - P t + QR, discriminant P^2 - 4QR.
struct MatrixParams {
    std::int64_t P = 0;
    std::int64_t Q = 0;
    std::int64_t R = 1;

    /// Throws std::invalid_argument when R == 0.
    static MatrixParams make(std::int64_t P, std::int64_t Q, std::int64_t R);

    Residue discriminant(const Modulus& n) const noexcept;
    /// det M = QR mod n.
    Residue determinant(const Modulus& n) const noexcept;
    Mat2 matrix(const Modulus& n) const noexcept;
    std::string canonical() const;

    constexpr bool operator==(const MatrixParams&) const = default;
};

/// A snapshot of two sequence values. lucas_pair stores (U_k, U_{k+1}) as
/// (u, v); tilde_pair stores (U~_k, V~_k).
struct SequencePair {
    Residue u;
    Residue v;

    constexpr bool operator==(const SequencePair&) const = default;
};

/// (U_k, U_{k+1}) for U_0 = 0, U_1 = 1, U_k = P U_{k-1} - Q U_{k-2}.
SequencePair lucas_pair(const LucasParams& params, std::uint64_t k, const Modulus& n) noexcept;

/// (U~_k, V~_k) where (V~_k, U~_k)^T = [[P, -Q], [R, 0]]^k (1, 0)^T.
SequencePair tilde_pair(const MatrixParams& params, std::uint64_t k, const Modulus& n) noexcept;

/// Advances (U~_k, V~_k) to (U~_{k+1}, V~_{k+1}) by one multiplication by M.
SequencePair tilde_step(const MatrixParams& params, SequencePair state, const Modulus& n) noexcept;

}  // namespace pellprime

namespace pellprime {

/// How a (P, Q, R) label maps onto MatrixParams. kCharPoly reads the label
/// as [[P, -Q], [R, 0]] (characteristic polynomial t^2 - Pt + QR); kDisplay
/// reads it as [[P, Q], [R, 0]], the convention of the recurrence
/// U_k = P U_{k-1} + Q U_{k-2}, under which the reference (P, Q, R) count
/// tables are reproduced.
enum class QConvention : std::uint8_t { kCharPoly, kDisplay };

MatrixParams matrix_params_from_label(std::int64_t P, std::int64_t Q, std::int64_t R,
                                      QConvention convention);

}  // namespace pellprime
