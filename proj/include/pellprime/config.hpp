#pragma once

// A fully specified test: method plus either fixed parameters or per-n
// selection. This is the unit the scanner, the checkpoint hash and the
// CLI agree on.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pellprime/conic.hpp"
#include "pellprime/primality.hpp"
#include "pellprime/recurrence.hpp"
#include "pellprime/selectors.hpp"
#include "pellprime/verdict.hpp"

namespace pellprime {

enum class Method : std::uint8_t {
    kFermat,
    kStrongBase,
    kLucas,
    kDoubleLucas,
    kMatrix,
    kPell,
    kStrongPell,
    kStrongPellPhi,
    kGenPell,
    kPellA099011,
};

std::string_view method_id(Method method) noexcept;
std::optional<Method> parse_method(std::string_view id) noexcept;

struct Base {
    std::uint64_t a = 2;
    constexpr bool operator==(const Base&) const = default;
};
/// D and the parameter a of phi_param.
struct PhiParams {
    std::int64_t D = 0;
    std::int64_t a = 0;
    constexpr bool operator==(const PhiParams&) const = default;
};
/// Conic parameters derived per n from a Lucas P via lucas_to_conic.
struct FromLucas {
    std::int64_t P = 0;
    constexpr bool operator==(const FromLucas&) const = default;
};
struct Selfridge {
    constexpr bool operator==(const Selfridge&) const = default;
};

using TestParams = std::variant<std::monostate, Selfridge, Base, LucasParams, MatrixParams,
                                ConicParams, PhiParams, FromLucas>;

class TestConfig {
public:
    /// Throws std::invalid_argument when params do not fit the method.
    static TestConfig make(Method method, TestParams params,
                           MatrixVariant variant = MatrixVariant::kLemma,
                           GenPellBase gen_pell_base = {});

    Verdict evaluate(std::uint64_t n) const;

    Method method() const noexcept { return method_; }
    const TestParams& params() const noexcept { return params_; }
    MatrixVariant variant() const noexcept { return variant_; }
    bool selfridge() const noexcept { return std::holds_alternative<Selfridge>(params_); }

    /// Stable, whitespace-free description such as "P=4;Q=1" or "selfridge".
    std::string canonical_params() const;

private:
    TestConfig(Method method, TestParams params, MatrixVariant variant, GenPellBase base)
        : method_(method), params_(std::move(params)), variant_(variant), base_(base) {}

    Method method_;
    TestParams params_;
    MatrixVariant variant_;
    GenPellBase base_;
};

}  // namespace pellprime
