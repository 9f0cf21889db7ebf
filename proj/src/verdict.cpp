#include "pellprime/verdict.hpp"

namespace pellprime {

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::kProbablePrime: return "probable-prime";
        case Outcome::kComposite: return "composite";
        case Outcome::kParamsInvalid: return "params-invalid";
    }
    return "unknown";
}

std::string_view to_string(Reason reason) noexcept {
    switch (reason) {
        case Reason::kPassed: return "passed";
        case Reason::kFactorFound: return "factor-found";
        case Reason::kCongruenceFailed: return "congruence-failed";
        case Reason::kCompanionFailed: return "companion-congruence-failed";
        case Reason::kPerfectSquare: return "perfect-square";
        case Reason::kModulusInvalid: return "modulus-invalid";
        case Reason::kBaseOutOfRange: return "base-out-of-range";
        case Reason::kDegenerateDiscriminant: return "degenerate-discriminant";
        case Reason::kParameterNotCoprime: return "parameter-not-coprime";
        case Reason::kNormNotOne: return "norm-not-one";
        case Reason::kDegeneratePoint: return "degenerate-point";
        case Reason::kPhiUndefined: return "phi-undefined";
    }
    return "unknown";
}

}  // namespace pellprime
