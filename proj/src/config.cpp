#include "pellprime/config.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace pellprime {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 10> kMethodIds{{
    {Method::kFermat, "fermat"},
    {Method::kStrongBase, "strong-base"},
    {Method::kLucas, "lucas"},
    {Method::kDoubleLucas, "double-lucas"},
    {Method::kMatrix, "matrix"},
    {Method::kPell, "pell"},
    {Method::kStrongPell, "strong-pell"},
    {Method::kStrongPellPhi, "strong-pell-phi"},
    {Method::kGenPell, "gen-pell"},
    {Method::kPellA099011, "pell-a099011"},
}};

template <class... Allowed>
bool holds_one_of(const TestParams& params) {
    return (std::holds_alternative<Allowed>(params) || ...);
}

bool accepts(Method method, const TestParams& params) {
    switch (method) {
        case Method::kFermat:
        case Method::kStrongBase: return holds_one_of<Base>(params);
        case Method::kLucas:
        case Method::kDoubleLucas: return holds_one_of<LucasParams, Selfridge>(params);
        case Method::kMatrix: return holds_one_of<MatrixParams, Selfridge>(params);
        case Method::kPell:
        case Method::kStrongPell: return holds_one_of<ConicParams, FromLucas>(params);
        case Method::kStrongPellPhi: return holds_one_of<PhiParams>(params);
        case Method::kGenPell: return holds_one_of<ConicParams, Selfridge>(params);
        case Method::kPellA099011: return holds_one_of<std::monostate>(params);
    }
    return false;
}

std::string_view variant_id(MatrixVariant v) { return v == MatrixVariant::kLemma ? "lemma" : "printed"; }

}  // namespace

std::string_view method_id(Method method) noexcept {
    for (auto const& [m, id] : kMethodIds) {
        if (m == method) return id;
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view id) noexcept {
    for (auto const& [m, name] : kMethodIds) {
        if (name == id) return m;
    }
    return std::nullopt;
}

TestConfig TestConfig::make(Method method, TestParams params, MatrixVariant variant,
                            GenPellBase gen_pell_base) {
    if (!accepts(method, params)) {
        throw std::invalid_argument("parameters do not match method " +
                                    std::string(method_id(method)));
    }
    if (auto const* m = std::get_if<MatrixParams>(&params); m && m->R == 0) {
        throw std::invalid_argument("matrix parameter R must be nonzero");
    }
    return TestConfig(method, std::move(params), variant, gen_pell_base);
}

Verdict TestConfig::evaluate(std::uint64_t n) const {
    switch (method_) {
        case Method::kFermat: return fermat_test(n, std::get<Base>(params_).a);
        case Method::kStrongBase: return strong_base_test(n, std::get<Base>(params_).a);
        case Method::kLucas:
            if (selfridge()) return lucas_selfridge(n);
            return lucas_test(n, std::get<LucasParams>(params_));
        case Method::kDoubleLucas:
            if (selfridge()) return double_lucas_selfridge(n);
            return double_lucas_test(n, std::get<LucasParams>(params_));
        case Method::kMatrix:
            if (selfridge()) return matrix_selfridge(n, variant_);
            return matrix_test(n, std::get<MatrixParams>(params_), variant_);
        case Method::kPell:
        case Method::kStrongPell: {
            auto const test = method_ == Method::kPell ? pell_test : strong_pell_test;
            if (auto const* from = std::get_if<FromLucas>(&params_)) {
                if (!Modulus::admissible(n)) return Verdict::invalid(Reason::kModulusInvalid);
                return test(n, lucas_to_conic(from->P, Modulus(n)));
            }
            return test(n, std::get<ConicParams>(params_));
        }
        case Method::kStrongPellPhi: {
            auto const& phi = std::get<PhiParams>(params_);
            return strong_pell_test_param(n, phi.D, phi.a);
        }
        case Method::kGenPell:
            if (selfridge()) return gen_pell_selfridge(n, base_);
            return generalized_pell_test(n, std::get<ConicParams>(params_));
        case Method::kPellA099011: return pell_variant_a099011_test(n);
    }
    return Verdict::invalid(Reason::kModulusInvalid);
}

std::string TestConfig::canonical_params() const {
    std::string out = std::visit(
        [](auto const& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "none";
            } else if constexpr (std::is_same_v<T, Selfridge>) {
                return "selfridge";
            } else if constexpr (std::is_same_v<T, Base>) {
                return "a=" + std::to_string(p.a);
            } else if constexpr (std::is_same_v<T, PhiParams>) {
                return "D=" + std::to_string(p.D) + ";a=" + std::to_string(p.a);
            } else if constexpr (std::is_same_v<T, FromLucas>) {
                return "lucasP=" + std::to_string(p.P);
            } else {
                return p.canonical();
            }
        },
        params_);
    if (method_ == Method::kMatrix) out += ";variant=" + std::string(variant_id(variant_));
    if (method_ == Method::kGenPell && selfridge()) {
        out += ";x=" + std::to_string(base_.x) + ";y=" + std::to_string(base_.y);
    }
    return out;
}

}  // namespace pellprime
