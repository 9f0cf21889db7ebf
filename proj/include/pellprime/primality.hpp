#pragma once

// Probable-prime tests on a single odd n. None of them proves primality:
// a passing n is reported as ProbablePrime, a failing one as Composite with
// the failed congruence or a found factor as evidence.
//
// Shared conventions:
//  - n must be odd with 3 <= n < 2^63, anything else is ParamsInvalid.
//  - When the branch discriminant D has (D/n) = 0, a proper divisor
//    gcd(D, n) makes the verdict Composite; D = 0 mod n is ParamsInvalid.

#include <cstdint>

#include "pellprime/conic.hpp"
#include "pellprime/recurrence.hpp"
#include "pellprime/verdict.hpp"

namespace pellprime {

/// a^(n-1) = 1 mod n, for 1 < a < n.
Verdict fermat_test(std::uint64_t n, std::uint64_t a);

/// With n - 1 = 2^r s, s odd: a^s = 1 or a^(2^k s) = -1 for some k < r.
Verdict strong_base_test(std::uint64_t n, std::uint64_t a);

/// U_{n - (D/n)} = 0 mod n.
Verdict lucas_test(std::uint64_t n, const LucasParams& params);

/// (D/n) = 1:  U_{n-1} = 0 and U_n = 1;
/// (D/n) = -1: U_{n+1} = 0 and U_{n+2} = Q.
Verdict double_lucas_test(std::uint64_t n, const LucasParams& params);

/// Which congruences the matrix test checks in the (D/n) = 1 branch
/// (and, correspondingly, the -1 branch).
enum class MatrixVariant : std::uint8_t {
    /// U~_{n-1} = 0, U~_n = 1  |  U~_{n+1} = 0, U~_{n+2} = QR.
    /// Only sound when R = 1: a prime p has U~_p = R and U~_{p+2} = QR * R.
    kPrinted,
    /// U~_{n-1} = 0, V~_{n-1} = 1  |  U~_{n+1} = 0, V~_{n+1} = QR = det M.
    kLemma,
};

/// Test on the sequences of [[P, -Q], [R, 0]], discriminant P^2 - 4QR.
Verdict matrix_test(std::uint64_t n, const MatrixParams& params,
                    MatrixVariant variant = MatrixVariant::kLemma);

/// y-coordinate of (x~, y~)^(n - (D/n)) vanishes. Needs norm 1.
Verdict pell_test(std::uint64_t n, const ConicParams& params);

/// (x~, y~)^(n - (D/n)) = (1, 0). Needs norm 1.
Verdict strong_pell_test(std::uint64_t n, const ConicParams& params);

/// strong_pell_test on phi_param(a, D).
Verdict strong_pell_test_param(std::uint64_t n, std::int64_t D, std::int64_t a);

/// For norm Q = x~^2 - D y~^2 coprime to n:
/// (D/n) = -1: (x~, y~)^(n+1) = (Q, 0);  (D/n) = 1: (x~, y~)^(n-1) = (1, 0).
Verdict generalized_pell_test(std::uint64_t n, const ConicParams& params);

/// U_n = (2/n) mod n for the Pell sequence P = 2, Q = -1.
Verdict pell_variant_a099011_test(std::uint64_t n);

}  // namespace pellprime
