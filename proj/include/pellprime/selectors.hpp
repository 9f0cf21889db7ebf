#pragma once

// Per-n parameter selection in the style of Selfridge: walk a fixed
// sequence of discriminants and take the first D with (D/n) = -1.
//
//   classic:  P = 1, D in 5, -7, 9, -11, ...,           Q = (1 - D) / 4
//   matrix:   P = 1, R = 2, D in -7, 9, -15, 17, ...,   Q = (1 - D) / 8
//   gen-Pell: (x~, y~) = (3, 2), D in 5, -7, 9, -11, ...
//
// Perfect squares never meet (D/n) = -1, so they are reported Composite
// before the search starts.

#include <cstdint>
#include <variant>

#include "pellprime/conic.hpp"
#include "pellprime/primality.hpp"
#include "pellprime/recurrence.hpp"
#include "pellprime/verdict.hpp"

namespace pellprime {

/// Searches give up with std::runtime_error after this many candidates.
inline constexpr std::uint64_t kSelectorCandidateCap = 1'000'000;

/// i-th term (from 0) of 5, -7, 9, -11, 13, ...
std::int64_t classic_candidate(std::uint64_t i) noexcept;
/// i-th term (from 0) of -7, 9, -15, 17, -23, 25, ... : pairs -(8k-1), 8k+1.
std::int64_t matrix_candidate(std::uint64_t i) noexcept;

template <class Params>
struct Selection {
    Params params;
    std::int64_t D = 0;
    std::uint64_t candidates_tried = 0;
};

template <class Params>
using SelectorResult = std::variant<Selection<Params>, Verdict>;

SelectorResult<LucasParams> selfridge_classic(std::uint64_t n);
SelectorResult<MatrixParams> selfridge_matrix(std::uint64_t n);

/// Base point defaults to (3, 2).
struct GenPellBase {
    std::int64_t x = 3;
    std::int64_t y = 2;
};
SelectorResult<ConicParams> selfridge_gen_pell(std::uint64_t n, GenPellBase base = {});

Verdict lucas_selfridge(std::uint64_t n);
Verdict double_lucas_selfridge(std::uint64_t n);
Verdict matrix_selfridge(std::uint64_t n, MatrixVariant variant = MatrixVariant::kLemma);
Verdict gen_pell_selfridge(std::uint64_t n, GenPellBase base = {});

}  // namespace pellprime
