#pragma once

// Range scans for pseudoprimes and parameter-grid experiments.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pellprime/config.hpp"

namespace pellprime {

/// Exact primality for any 64-bit n: trial division below 10^4, otherwise
/// strong-base tests to the first twelve prime bases.
bool is_prime_oracle(std::uint64_t n) noexcept;

struct ScanStats {
    std::uint64_t candidates = 0;       // odd n in range
    std::uint64_t short_circuited = 0;  // perfect squares skipped before testing
    std::uint64_t probable_primes = 0;  // passers the oracle confirmed prime
    std::uint64_t composites = 0;       // Composite verdicts
    std::uint64_t params_invalid = 0;   // ParamsInvalid verdicts

    constexpr bool operator==(const ScanStats&) const = default;
};

struct ScanReport {
    std::string method;
    std::string params;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> pseudoprimes;
    ScanStats stats;
    double elapsed_seconds = 0.0;
    bool resumed = false;

    std::uint64_t count() const noexcept { return pseudoprimes.size(); }
};

struct ScanOptions {
    unsigned jobs = 1;
    /// Odd candidates per chunk.
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    /// Squares are composite and never reach the test; the reference
    /// counts were taken this way.
    bool skip_perfect_squares = true;
    /// Run the primality oracle before the test instead of only on passers.
    bool oracle_first = false;
    /// Written after every merged chunk when set.
    std::optional<std::filesystem::path> checkpoint;
    /// Start from the checkpoint cursor if the file exists and matches.
    bool resume = false;
    /// Receives each chunk's pseudoprimes in ascending order as they merge.
    std::function<void(std::span<const std::uint64_t>)> on_pseudoprimes;
};

/// Scans the odd n in [lo, hi]. Throws std::invalid_argument unless
/// 3 <= lo <= hi < 2^63.
ScanReport scan_range(const TestConfig& config, std::uint64_t lo, std::uint64_t hi,
                      const ScanOptions& options = {});

// Checkpoint record:
//   cursor=<n> method=<id> params=<canonical> hash=<16 hex digits>
struct Checkpoint {
    std::uint64_t cursor = 0;
    std::string method;
    std::string params;

    std::string to_line() const;
    /// Throws std::runtime_error on malformed input or a hash that does not
    /// match method and params.
    static Checkpoint parse(const std::string& line);
};

std::uint64_t checkpoint_hash(const std::string& method, const std::string& params) noexcept;

struct GridAxis {
    std::string name;
    std::vector<std::int64_t> values;
};

struct GridSpec {
    Method method = Method::kLucas;
    /// lucas, double-lucas: P, Q.  matrix: R, P, Q.  gen-pell: D, x, y.
    std::vector<GridAxis> axes;
    std::uint64_t limit = 100000;
    MatrixVariant variant = MatrixVariant::kLemma;
    QConvention q_convention = QConvention::kCharPoly;
};

struct GridReport {
    std::string method;
    std::vector<GridAxis> axes;
    std::uint64_t limit = 0;
    std::string convention;
    /// Row-major over axes; nullopt marks a skipped degenerate cell.
    std::vector<std::optional<std::uint64_t>> cells;

    std::optional<std::uint64_t> at(std::span<const std::int64_t> coordinates) const;
};

/// Lucas sequences whose root ratio is a root of unity: Q = 0, P = 0, or
/// P^2 in {Q, 2Q, 3Q, 4Q}.
bool is_degenerate_lucas(std::int64_t P, std::int64_t Q) noexcept;

/// Throws std::invalid_argument on axes that do not fit the method.
GridReport grid_scan(const GridSpec& spec, const ScanOptions& options = {});

}  // namespace pellprime
