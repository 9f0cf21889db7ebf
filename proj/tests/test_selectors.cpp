#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "pellprime/selectors.hpp"

using namespace pellprime;

namespace {

std::vector<std::uint64_t> odd_composite_passers(std::uint64_t limit, Verdict (*test)(std::uint64_t)) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n < limit; n += 2) {
        if (!oracle::is_prime_by_trial(n) && test(n).probable_prime()) out.push_back(n);
    }
    return out;
}

Verdict matrix_default(std::uint64_t n) { return matrix_selfridge(n); }

// Matrix test with R = +-1 on the classic stream, Q chosen so that
// P^2 - 4QR = D.
std::vector<std::uint64_t> unit_r_passers(std::int64_t R, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n < limit; n += 2) {
        if (oracle::is_prime_by_trial(n)) continue;
        auto const selected = selfridge_classic(n);
        auto const* s = std::get_if<Selection<LucasParams>>(&selected);
        if (s == nullptr) continue;
        std::int64_t const Q = R * (1 - s->D) / 4;
        if (matrix_test(n, MatrixParams{1, Q, R}).probable_prime()) out.push_back(n);
    }
    return out;
}

}  // namespace

TEST_CASE("candidate streams") {
    std::vector<std::int64_t> classic;
    std::vector<std::int64_t> matrix;
    for (std::uint64_t i = 0; i < 8; ++i) {
        classic.push_back(classic_candidate(i));
        matrix.push_back(matrix_candidate(i));
    }
    CHECK(classic == std::vector<std::int64_t>{5, -7, 9, -11, 13, -15, 17, -19});
    CHECK(matrix == std::vector<std::int64_t>{-7, 9, -15, 17, -23, 25, -31, 33});
}

TEST_CASE("Q formulas divide exactly on the first 10^4 candidates") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        std::int64_t const c = classic_candidate(i);
        std::int64_t const m = matrix_candidate(i);
        REQUIRE((1 - c) % 4 == 0);
        REQUIRE((1 - m) % 8 == 0);
        REQUIRE(std::abs(c) == static_cast<std::int64_t>(5 + 2 * i));
    }
}

TEST_CASE("selfridge_classic examples") {
    CHECK(oracle::legendre_by_enumeration(5, 17) * oracle::legendre_by_enumeration(5, 19) == -1);
    auto const r = std::get<Selection<LucasParams>>(selfridge_classic(323));
    CHECK(r.D == 5);
    CHECK(r.params == LucasParams{1, -1});
    CHECK(r.candidates_tried == 1);
    for (std::uint64_t sq : {9ull, 25ull, 49ull, 121ull, 1000001ull * 1000001ull}) {
        CHECK(std::get<Verdict>(selfridge_classic(sq)) == Verdict::failed(Reason::kPerfectSquare));
    }
    // (5/n) = 1, (-7/n) = 0 with a proper factor 7
    CHECK(std::get<Verdict>(selfridge_classic(21)) == Verdict::found_factor(7, 0));
    CHECK(std::get<Verdict>(selfridge_classic(10)) == Verdict::invalid(Reason::kModulusInvalid));
}

TEST_CASE("selfridge_matrix examples") {
    // 3: (-7/3) = (2/3) = -1
    auto const r = std::get<Selection<MatrixParams>>(selfridge_matrix(3));
    CHECK(r.D == -7);
    CHECK(r.params == MatrixParams{1, 1, 2});
    CHECK(std::get<Verdict>(selfridge_matrix(49)) == Verdict::failed(Reason::kPerfectSquare));
}

TEST_CASE("selfridge_gen_pell examples") {
    Modulus const m(323);
    auto const r = std::get<Selection<ConicParams>>(selfridge_gen_pell(323));
    CHECK(r.D == 5);
    CHECK(r.params == ConicParams{5, 3, 2});
    CHECK(r.params.norm(m) == m.reduce(-11));
    CHECK(std::get<Verdict>(selfridge_gen_pell(121)) == Verdict::failed(Reason::kPerfectSquare));
    // 3 * 11: (5/33) = -1, and the norm 9 - 20 = -11 shares 11
    CHECK(std::get<Verdict>(selfridge_gen_pell(33)) == Verdict::found_factor(11, -1));
}

TEST_CASE("a candidate that n divides is skipped") {
    // 37 = 9 - 4 * (-7): the norm vanishes for D = -7, so the search moves on
    auto const r = std::get<Selection<ConicParams>>(selfridge_gen_pell(37));
    CHECK(r.D != -7);
    CHECK(jacobi(r.D, Modulus(37)) == -1);
    CHECK(gen_pell_selfridge(37).probable_prime());
    // n = |D| for a prime candidate
    auto const c = std::get<Selection<LucasParams>>(selfridge_classic(13));
    CHECK(c.D != 13);
    CHECK(lucas_selfridge(13).probable_prime());
}

TEST_CASE("selected discriminants have symbol -1") {
    for (std::uint64_t n = 3; n < 100000; n += 2) {
        Modulus const m(n);
        auto const c = selfridge_classic(n);
        if (auto const* s = std::get_if<Selection<LucasParams>>(&c)) {
            REQUIRE(jacobi(s->D, m) == -1);
            REQUIRE(oracle::jacobi(s->D, n) == -1);
            REQUIRE(s->params.P * s->params.P - 4 * s->params.Q == s->D);
        } else {
            REQUIRE(std::get<Verdict>(c).composite());
        }
        auto const x = selfridge_matrix(n);
        if (auto const* s = std::get_if<Selection<MatrixParams>>(&x)) {
            REQUIRE(oracle::jacobi(s->D, n) == -1);
            REQUIRE(s->params.P * s->params.P - 4 * s->params.Q * s->params.R == s->D);
        } else {
            REQUIRE(std::get<Verdict>(x).composite());
        }
        auto const g = selfridge_gen_pell(n);
        if (auto const* s = std::get_if<Selection<ConicParams>>(&g)) {
            REQUIRE(oracle::jacobi(s->D, n) == -1);
            REQUIRE(std::gcd(static_cast<std::uint64_t>(std::abs(9 - 4 * s->D)), n) == 1);
        } else {
            REQUIRE(std::get<Verdict>(g).composite());
        }
    }
}

TEST_CASE("composed tests pass every prime below 10^5") {
    for (std::uint64_t p : oracle::primes_below(100000)) {
        if (p == 2) continue;
        REQUIRE(lucas_selfridge(p).probable_prime());
        REQUIRE(double_lucas_selfridge(p).probable_prime());
        REQUIRE(matrix_selfridge(p).probable_prime());
        REQUIRE(gen_pell_selfridge(p).probable_prime());
    }
}

TEST_CASE("Selfridge Lucas pseudoprimes below 15000") {
    CHECK(odd_composite_passers(15000, lucas_selfridge) ==
          std::vector<std::uint64_t>{323, 377, 1159, 1829, 3827, 5459, 5777, 9071, 9179, 10877, 11419,
                                     11663, 13919, 14839});
}

TEST_CASE("Selfridge double Lucas pseudoprimes below 240000") {
    std::vector<std::uint64_t> const expected{5777, 10877, 75077, 100127, 113573, 161027, 162133, 231703};
    CHECK(odd_composite_passers(240000, double_lucas_selfridge) == expected);
}

TEST_CASE("matrix selector with R = 1 or R = -1 finds the double Lucas list") {
    std::vector<std::uint64_t> const expected{5777, 10877, 75077, 100127, 113573, 161027, 162133, 231703};
    CHECK(unit_r_passers(1, 240000) == expected);
    CHECK(unit_r_passers(-1, 240000) == expected);
}

TEST_CASE("matrix and generalized Pell selectors have no passers below 2 * 10^5") {
    CHECK(odd_composite_passers(200000, matrix_default).empty());
    CHECK(odd_composite_passers(200000, [](std::uint64_t n) { return gen_pell_selfridge(n); }).empty());
}
