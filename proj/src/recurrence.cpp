#include "pellprime/recurrence.hpp"

#include <bit>
#include <stdexcept>

namespace pellprime {

namespace {

Residue sum_of_products(Residue a, Residue b, Residue c, Residue d, const Modulus& n) {
    return n.add(n.mul(a, b), n.mul(c, d));
}

}  // namespace

Mat2 Mat2::from_integers(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                         const Modulus& n) noexcept {
    return Mat2{n.reduce(a), n.reduce(b), n.reduce(c), n.reduce(d)};
}

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs, const Modulus& n) noexcept {
    return Mat2{
        sum_of_products(lhs.a, rhs.a, lhs.b, rhs.c, n),
        sum_of_products(lhs.a, rhs.b, lhs.b, rhs.d, n),
        sum_of_products(lhs.c, rhs.a, lhs.d, rhs.c, n),
        sum_of_products(lhs.c, rhs.b, lhs.d, rhs.d, n),
    };
}

Mat2 mat_pow(const Mat2& m, std::uint64_t k, const Modulus& n) noexcept {
    if (k == 0) return Mat2::identity();
    Mat2 result = m;
    for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
        result = mat_mul(result, result, n);
        if ((k >> bit) & 1) result = mat_mul(result, m, n);
    }
    return result;
}

Residue mat_det(const Mat2& m, const Modulus& n) noexcept {
    return n.sub(n.mul(m.a, m.d), n.mul(m.b, m.c));
}

Residue LucasParams::discriminant(const Modulus& n) const noexcept {
    Residue const p = n.reduce(P);
    Residue const four_q = n.mul(n.reduce(4), n.reduce(Q));
    return n.sub(n.mul(p, p), four_q);
}

Mat2 LucasParams::companion(const Modulus& n) const noexcept {
    return Mat2{n.reduce(P), n.neg(n.reduce(Q)), n.one(), n.zero()};
}

std::string LucasParams::canonical() const {
    return "P=" + std::to_string(P) + ";Q=" + std::to_string(Q);
}

MatrixParams MatrixParams::make(std::int64_t P, std::int64_t Q, std::int64_t R) {
    if (R == 0) throw std::invalid_argument("matrix parameter R must be nonzero");
    return MatrixParams{P, Q, R};
}

Residue MatrixParams::discriminant(const Modulus& n) const noexcept {
    Residue const p = n.reduce(P);
    Residue const four_qr = n.mul(n.reduce(4), determinant(n));
    return n.sub(n.mul(p, p), four_qr);
}

Residue MatrixParams::determinant(const Modulus& n) const noexcept {
    return n.mul(n.reduce(Q), n.reduce(R));
}

Mat2 MatrixParams::matrix(const Modulus& n) const noexcept {
    return Mat2{n.reduce(P), n.neg(n.reduce(Q)), n.reduce(R), n.zero()};
}

std::string MatrixParams::canonical() const {
    return "P=" + std::to_string(P) + ";Q=" + std::to_string(Q) + ";R=" + std::to_string(R);
}

SequencePair lucas_pair(const LucasParams& params, std::uint64_t k, const Modulus& n) noexcept {
    Mat2 const power = mat_pow(params.companion(n), k, n);
    // first column of L^k is (U_{k+1}, U_k)
    return SequencePair{power.c, power.a};
}

SequencePair tilde_pair(const MatrixParams& params, std::uint64_t k, const Modulus& n) noexcept {
    Mat2 const power = mat_pow(params.matrix(n), k, n);
    return SequencePair{power.c, power.a};
}

SequencePair tilde_step(const MatrixParams& params, SequencePair state, const Modulus& n) noexcept {
    Mat2 const m = params.matrix(n);
    Residue const v = sum_of_products(m.a, state.v, m.b, state.u, n);
    Residue const u = sum_of_products(m.c, state.v, m.d, state.u, n);
    return SequencePair{u, v};
}

}  // namespace pellprime

namespace pellprime {

MatrixParams matrix_params_from_label(std::int64_t P, std::int64_t Q, std::int64_t R,
                                      QConvention convention) {
    return MatrixParams::make(P, convention == QConvention::kDisplay ? -Q : Q, R);
}

}  // namespace pellprime
