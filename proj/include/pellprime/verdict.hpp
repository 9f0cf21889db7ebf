#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace pellprime {

enum class Outcome : std::uint8_t {
    kProbablePrime,
    kComposite,
    kParamsInvalid,
};

/// Why a verdict came out the way it did.
enum class Reason : std::uint8_t {
    kPassed,
    kFactorFound,          // factor holds a proper divisor of n
    kCongruenceFailed,     // the primary congruence (U = 0, y = 0, a^s = 1, ...)
    kCompanionFailed,      // the second congruence of a double test
    kPerfectSquare,
    kModulusInvalid,       // n even, n < 3 or n >= 2^63
    kBaseOutOfRange,
    kDegenerateDiscriminant,  // D = 0 mod n
    kParameterNotCoprime,     // gcd(Q, n) > 1, gcd(QR, n) > 1, norm = 0, ...
    kNormNotOne,
    kDegeneratePoint,         // y~ = 0 mod n
    kPhiUndefined,            // a^2 = D mod n
};

std::string_view to_string(Outcome outcome) noexcept;
std::string_view to_string(Reason reason) noexcept;

struct Verdict {
    Outcome outcome = Outcome::kParamsInvalid;
    Reason reason = Reason::kModulusInvalid;
    std::uint64_t factor = 0;
    /// (D/n) for the discriminant that selected the branch, when one did.
    std::optional<int> jacobi;

    static Verdict passed(std::optional<int> jacobi = std::nullopt) noexcept {
        return {Outcome::kProbablePrime, Reason::kPassed, 0, jacobi};
    }
    static Verdict failed(Reason why, std::optional<int> jacobi = std::nullopt) noexcept {
        return {Outcome::kComposite, why, 0, jacobi};
    }
    static Verdict found_factor(std::uint64_t factor,
                                std::optional<int> jacobi = std::nullopt) noexcept {
        return {Outcome::kComposite, Reason::kFactorFound, factor, jacobi};
    }
    static Verdict invalid(Reason why) noexcept { return {Outcome::kParamsInvalid, why, 0, {}}; }

    bool probable_prime() const noexcept { return outcome == Outcome::kProbablePrime; }
    bool composite() const noexcept { return outcome == Outcome::kComposite; }
    bool params_invalid() const noexcept { return outcome == Outcome::kParamsInvalid; }

    constexpr bool operator==(const Verdict&) const = default;
};

}  // namespace pellprime
