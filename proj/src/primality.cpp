#include "pellprime/primality.hpp"

#include <bit>
#include <optional>

namespace pellprime {

namespace {

// (D/n), or the verdict that ends the test when it is 0.
struct Branch {
    int symbol = 0;
    std::optional<Verdict> early;
};

Branch branch_for(Residue d, const Modulus& n) {
    int const j = jacobi(d, n);
    if (j != 0) return Branch{j, std::nullopt};
    if (d.value == 0) return Branch{0, Verdict::invalid(Reason::kDegenerateDiscriminant)};
    return Branch{0, Verdict::found_factor(gcd(d.value, n.value()), 0)};
}

bool is_unit(Residue r, const Modulus& n) { return gcd(r.value, n.value()) == 1; }

// Exponent n - (D/n); n < 2^63 so n + 1 cannot wrap.
std::uint64_t branch_exponent(const Modulus& n, int symbol) {
    return symbol == 1 ? n.value() - 1 : n.value() + 1;
}

// Shared validation for the norm-one conic tests.
std::optional<Verdict> reject_pell_params(const ConicParams& params, const Modulus& n) {
    if (params.norm(n) != n.one()) return Verdict::invalid(Reason::kNormNotOne);
    if (n.reduce(params.y) == n.zero()) return Verdict::invalid(Reason::kDegeneratePoint);
    return std::nullopt;
}

}  // namespace

Verdict fermat_test(std::uint64_t n, std::uint64_t a) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    if (a <= 1 || a >= n) return Verdict::invalid(Reason::kBaseOutOfRange);
    Modulus const m(n);
    if (std::uint64_t g = gcd(a, n); g != 1) return Verdict::found_factor(g);
    if (pow_mod(Residue{a}, n - 1, m) == m.one()) return Verdict::passed();
    return Verdict::failed(Reason::kCongruenceFailed);
}

Verdict strong_base_test(std::uint64_t n, std::uint64_t a) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    if (a <= 1 || a >= n) return Verdict::invalid(Reason::kBaseOutOfRange);
    Modulus const m(n);
    if (std::uint64_t g = gcd(a, n); g != 1) return Verdict::found_factor(g);
    int const r = std::countr_zero(n - 1);
    std::uint64_t const s = (n - 1) >> r;
    Residue x = pow_mod(Residue{a}, s, m);
    if (x == m.one() || x == m.minus_one()) return Verdict::passed();
    for (int k = 1; k < r; ++k) {
        x = m.mul(x, x);
        if (x == m.minus_one()) return Verdict::passed();
    }
    return Verdict::failed(Reason::kCongruenceFailed);
}

Verdict lucas_test(std::uint64_t n, const LucasParams& params) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    Branch const branch = branch_for(params.discriminant(m), m);
    if (branch.early) return *branch.early;
    if (!is_unit(m.reduce(params.Q), m)) return Verdict::invalid(Reason::kParameterNotCoprime);

    SequencePair const s = lucas_pair(params, branch_exponent(m, branch.symbol), m);
    if (s.u != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict double_lucas_test(std::uint64_t n, const LucasParams& params) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    Branch const branch = branch_for(params.discriminant(m), m);
    if (branch.early) return *branch.early;
    Residue const q = m.reduce(params.Q);
    if (!is_unit(q, m)) return Verdict::invalid(Reason::kParameterNotCoprime);

    // (U_{n-1}, U_n) or (U_{n+1}, U_{n+2})
    SequencePair const s = lucas_pair(params, branch_exponent(m, branch.symbol), m);
    if (s.u != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);
    Residue const expected = branch.symbol == 1 ? m.one() : q;
    if (s.v != expected) return Verdict::failed(Reason::kCompanionFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict matrix_test(std::uint64_t n, const MatrixParams& params, MatrixVariant variant) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    Branch const branch = branch_for(params.discriminant(m), m);
    if (branch.early) return *branch.early;
    Residue const det = params.determinant(m);
    if (!is_unit(det, m)) return Verdict::invalid(Reason::kParameterNotCoprime);

    SequencePair const s = tilde_pair(params, branch_exponent(m, branch.symbol), m);
    if (s.u != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);

    Residue const expected = branch.symbol == 1 ? m.one() : det;
    Residue companion = s.v;
    if (variant == MatrixVariant::kPrinted) {
        // U~_n or U~_{n+2}
        companion = tilde_step(params, s, m).u;
    }
    if (companion != expected) return Verdict::failed(Reason::kCompanionFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict pell_test(std::uint64_t n, const ConicParams& params) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    if (auto rejected = reject_pell_params(params, m)) return *rejected;
    Residue const d = params.d(m);
    Branch const branch = branch_for(d, m);
    if (branch.early) return *branch.early;

    ConicPoint const p = conic_pow(params.point(m), branch_exponent(m, branch.symbol), d, m);
    if (p.y != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict strong_pell_test(std::uint64_t n, const ConicParams& params) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    if (auto rejected = reject_pell_params(params, m)) return *rejected;
    Residue const d = params.d(m);
    Branch const branch = branch_for(d, m);
    if (branch.early) return *branch.early;

    ConicPoint const p = conic_pow(params.point(m), branch_exponent(m, branch.symbol), d, m);
    if (p.y != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);
    if (p.x != m.one()) return Verdict::failed(Reason::kCompanionFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict strong_pell_test_param(std::uint64_t n, std::int64_t D, std::int64_t a) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    PhiResult const phi = phi_param(a, D, m);
    if (auto const* f = std::get_if<Factor>(&phi)) return Verdict::found_factor(f->value);
    if (std::holds_alternative<Degenerate>(phi)) return Verdict::invalid(Reason::kPhiUndefined);
    ConicPoint const p = std::get<ConicPoint>(phi);
    return strong_pell_test(n, ConicParams{D, static_cast<std::int64_t>(p.x.value),
                                           static_cast<std::int64_t>(p.y.value)});
}

Verdict generalized_pell_test(std::uint64_t n, const ConicParams& params) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    Residue const q = params.norm(m);
    if (q == m.zero()) return Verdict::invalid(Reason::kParameterNotCoprime);
    if (std::uint64_t g = gcd(q.value, n); g != 1) return Verdict::found_factor(g);
    if (m.reduce(params.y) == m.zero()) return Verdict::invalid(Reason::kDegeneratePoint);
    Residue const d = params.d(m);
    Branch const branch = branch_for(d, m);
    if (branch.early) return *branch.early;

    ConicPoint const p = conic_pow(params.point(m), branch_exponent(m, branch.symbol), d, m);
    if (p.y != m.zero()) return Verdict::failed(Reason::kCongruenceFailed, branch.symbol);
    Residue const expected = branch.symbol == 1 ? m.one() : q;
    if (p.x != expected) return Verdict::failed(Reason::kCompanionFailed, branch.symbol);
    return Verdict::passed(branch.symbol);
}

Verdict pell_variant_a099011_test(std::uint64_t n) {
    if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
    Modulus const m(n);
    int const j = jacobi(std::int64_t{2}, m);  // never 0 for odd n
    SequencePair const s = lucas_pair(LucasParams{2, -1}, n, m);
    if (s.u != m.reduce(j)) return Verdict::failed(Reason::kCongruenceFailed, j);
    return Verdict::passed(j);
}

}  // namespace pellprime
