#include "pellprime/selectors.hpp"

#include <stdexcept>
#include <string>

namespace pellprime {

namespace {

enum class Check { kAccept, kSkip, kReject };

struct CandidateCheck {
    Check check;
    std::uint64_t factor = 0;
};

// A derived parameter must be a unit mod n. n | value means this candidate
// is unusable for this n, a proper divisor is a factor of n.
CandidateCheck unit_check(Residue value, const Modulus& n) {
    if (value == n.zero()) return {Check::kSkip};
    std::uint64_t const g = gcd(value.value, n.value());
    if (g != 1) return {Check::kReject, g};
    return {Check::kAccept};
}

// Runs the D search; derive(D, n) yields the candidate's parameters and
// a unit-check on whatever they must keep invertible.
template <class Params, class Candidates, class Derive>
SelectorResult<Params> search(std::uint64_t n, Candidates candidate, Derive derive) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    if (is_perfect_square(n)) return Verdict::failed(Reason::kPerfectSquare);
    Modulus const m(n);
    for (std::uint64_t i = 0; i < kSelectorCandidateCap; ++i) {
        std::int64_t const D = candidate(i);
        Residue const d = m.reduce(D);
        int const j = jacobi(d, m);
        if (j == 1) continue;
        if (j == 0) {
            if (d == m.zero()) continue;
            return Verdict::found_factor(gcd(d.value, n), 0);
        }
        auto [params, unit] = derive(D, m);
        CandidateCheck const c = unit_check(unit, m);
        if (c.check == Check::kSkip) continue;
        if (c.check == Check::kReject) return Verdict::found_factor(c.factor, -1);
        return Selection<Params>{params, D, i + 1};
    }
    throw std::runtime_error("no usable discriminant among the first " +
                             std::to_string(kSelectorCandidateCap) + " candidates for n = " +
                             std::to_string(n));
}

template <class Params, class Test>
Verdict run_selected(const SelectorResult<Params>& selected, std::uint64_t n, Test test) {
    if (auto const* early = std::get_if<Verdict>(&selected)) return *early;
    return test(n, std::get<Selection<Params>>(selected).params);
}

}  // namespace

std::int64_t classic_candidate(std::uint64_t i) noexcept {
    auto const magnitude = static_cast<std::int64_t>(5 + 2 * i);
    return (i & 1) ? -magnitude : magnitude;
}

std::int64_t matrix_candidate(std::uint64_t i) noexcept {
    auto const k = static_cast<std::int64_t>(i / 2 + 1);
    return (i & 1) ? 8 * k + 1 : -(8 * k - 1);
}

SelectorResult<LucasParams> selfridge_classic(std::uint64_t n) {
    return search<LucasParams>(n, classic_candidate, [](std::int64_t D, const Modulus& m) {
        LucasParams const params{1, (1 - D) / 4};
        return std::pair{params, m.reduce(params.Q)};
    });
}

SelectorResult<MatrixParams> selfridge_matrix(std::uint64_t n) {
    return search<MatrixParams>(n, matrix_candidate, [](std::int64_t D, const Modulus& m) {
        MatrixParams const params{1, (1 - D) / 8, 2};
        return std::pair{params, params.determinant(m)};
    });
}

SelectorResult<ConicParams> selfridge_gen_pell(std::uint64_t n, GenPellBase base) {
    return search<ConicParams>(n, classic_candidate, [base](std::int64_t D, const Modulus& m) {
        ConicParams const params{D, base.x, base.y};
        return std::pair{params, params.norm(m)};
    });
}

Verdict lucas_selfridge(std::uint64_t n) {
    return run_selected(selfridge_classic(n), n, lucas_test);
}

Verdict double_lucas_selfridge(std::uint64_t n) {
    return run_selected(selfridge_classic(n), n, double_lucas_test);
}

Verdict matrix_selfridge(std::uint64_t n, MatrixVariant variant) {
    return run_selected(selfridge_matrix(n), n,
                        [variant](std::uint64_t v, const MatrixParams& p) {
                            return matrix_test(v, p, variant);
                        });
}

Verdict gen_pell_selfridge(std::uint64_t n, GenPellBase base) {
    return run_selected(selfridge_gen_pell(n, base), n, generalized_pell_test);
}

}  // namespace pellprime
