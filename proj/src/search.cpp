#include "pellprime/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pellprime {

namespace {

// The oracle works on the full 64-bit range, so it keeps its own arithmetic
// instead of going through Modulus.
std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t result = 1;
    a %= n;
    while (e != 0) {
        if (e & 1) result = mulmod64(result, a, n);
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    int const r = std::countr_zero(n - 1);
    std::uint64_t x = powmod64(a, (n - 1) >> r, n);
    if (x == 1 || x == n - 1) return true;
    for (int k = 1; k < r; ++k) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

struct ChunkResult {
    std::vector<std::uint64_t> pseudoprimes;
    ScanStats stats;
};

// Odd n in [first, last]; both ends odd.
ChunkResult scan_chunk(const TestConfig& config, std::uint64_t first, std::uint64_t last,
                       const ScanOptions& options) {
    ChunkResult out;
    for (std::uint64_t n = first; n <= last; n += 2) {
        ++out.stats.candidates;
        if (options.skip_perfect_squares && is_perfect_square(n)) {
            ++out.stats.short_circuited;
        } else {
            std::optional<bool> prime;
            if (options.oracle_first) prime = is_prime_oracle(n);
            Verdict const v = config.evaluate(n);
            switch (v.outcome) {
                case Outcome::kProbablePrime:
                    if (!prime) prime = is_prime_oracle(n);
                    if (*prime) {
                        ++out.stats.probable_primes;
                    } else {
                        out.pseudoprimes.push_back(n);
                    }
                    break;
                case Outcome::kComposite: ++out.stats.composites; break;
                case Outcome::kParamsInvalid: ++out.stats.params_invalid; break;
            }
        }
    }
    return out;
}

void accumulate(ScanStats& into, const ScanStats& from) {
    into.candidates += from.candidates;
    into.short_circuited += from.short_circuited;
    into.probable_primes += from.probable_primes;
    into.composites += from.composites;
    into.params_invalid += from.params_invalid;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& record) {
    std::filesystem::path const tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << record.to_line() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

bool is_prime_oracle(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 10000) {
        if (n < 4) return true;
        if (n % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) return false;
        }
        return true;
    }
    constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t const p : kBases) {
        if (n % p == 0) return false;
    }
    return std::all_of(kBases.begin(), kBases.end(),
                       [n](std::uint64_t a) { return strong_probable_prime(n, a); });
}

std::uint64_t checkpoint_hash(const std::string& method, const std::string& params) noexcept {
    // FNV-1a over "method\nparams"
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](unsigned char c) {
        h ^= c;
        h *= 0x100000001b3ull;
    };
    for (char c : method) feed(static_cast<unsigned char>(c));
    feed('\n');
    for (char c : params) feed(static_cast<unsigned char>(c));
    return h;
}

std::string Checkpoint::to_line() const {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(checkpoint_hash(method, params)));
    return "cursor=" + std::to_string(cursor) + " method=" + method + " params=" + params +
           " hash=" + hash;
}

Checkpoint Checkpoint::parse(const std::string& line) {
    std::istringstream in(line);
    std::string field;
    Checkpoint out;
    std::optional<std::uint64_t> cursor;
    std::optional<std::uint64_t> hash;
    bool have_method = false;
    bool have_params = false;
    while (in >> field) {
        auto const eq = field.find('=');
        if (eq == std::string::npos) throw std::runtime_error("malformed checkpoint field: " + field);
        std::string const key = field.substr(0, eq);
        std::string const value = field.substr(eq + 1);
        try {
            if (key == "cursor") {
                cursor = std::stoull(value);
            } else if (key == "method") {
                out.method = value;
                have_method = true;
            } else if (key == "params") {
                out.params = value;
                have_params = true;
            } else if (key == "hash") {
                hash = std::stoull(value, nullptr, 16);
            } else {
                throw std::runtime_error("unknown checkpoint field: " + key);
            }
        } catch (const std::logic_error&) {
            throw std::runtime_error("malformed checkpoint value: " + field);
        }
    }
    if (!cursor || !hash || !have_method || !have_params) {
        throw std::runtime_error("incomplete checkpoint record");
    }
    if (*hash != checkpoint_hash(out.method, out.params)) {
        throw std::runtime_error("checkpoint hash does not match method and params");
    }
    out.cursor = *cursor;
    return out;
}

ScanReport scan_range(const TestConfig& config, std::uint64_t lo, std::uint64_t hi,
                      const ScanOptions& options) {
    if (lo < 3 || lo > hi || hi > Modulus::kMax) {
        throw std::invalid_argument("scan range must satisfy 3 <= lo <= hi < 2^63");
    }
    if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");

    auto const started = std::chrono::steady_clock::now();
    ScanReport report;
    report.method = std::string(method_id(config.method()));
    report.params = config.canonical_params();
    report.lo = lo;
    report.hi = hi;

    std::uint64_t cursor = lo | 1;
    if (options.checkpoint && options.resume && std::filesystem::exists(*options.checkpoint)) {
        std::ifstream in(*options.checkpoint);
        std::string line;
        std::getline(in, line);
        Checkpoint const saved = Checkpoint::parse(line);
        if (saved.method != report.method || saved.params != report.params) {
            throw std::runtime_error("checkpoint " + options.checkpoint->string() +
                                     " belongs to a different scan");
        }
        if (saved.cursor > cursor) {
            cursor = saved.cursor;
            report.lo = saved.cursor;
            report.resumed = true;
        }
    }

    unsigned const jobs = std::max(1u, options.jobs);
    std::uint64_t const last_odd = (hi & 1) ? hi : hi - 1;
    // each chunk covers [first, first + 2 (chunk_size - 1)]
    std::uint64_t const chunk_span = 2 * (options.chunk_size - 1);
    while (cursor <= last_odd) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> wave;
        while (wave.size() < jobs && cursor <= last_odd) {
            std::uint64_t const last = std::min(cursor + chunk_span, last_odd);
            wave.emplace_back(cursor, last);
            cursor = last + 2;
        }

        std::vector<ChunkResult> results(wave.size());
        std::vector<std::exception_ptr> errors(wave.size());
        auto run = [&](std::size_t i) {
            try {
                results[i] = scan_chunk(config, wave[i].first, wave[i].second, options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        };
        {
            std::vector<std::jthread> workers;
            for (std::size_t i = 1; i < wave.size(); ++i) workers.emplace_back(run, i);
            run(0);
        }
        for (auto const& e : errors) {
            if (e) std::rethrow_exception(e);
        }

        for (std::size_t i = 0; i < wave.size(); ++i) {
            accumulate(report.stats, results[i].stats);
            report.pseudoprimes.insert(report.pseudoprimes.end(), results[i].pseudoprimes.begin(),
                                       results[i].pseudoprimes.end());
            if (options.on_pseudoprimes && !results[i].pseudoprimes.empty()) {
                options.on_pseudoprimes(results[i].pseudoprimes);
            }
            if (options.checkpoint) {
                std::uint64_t const next = wave[i].second + 2;
                write_checkpoint(*options.checkpoint,
                                 Checkpoint{next, report.method, report.params});
            }
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

bool is_degenerate_lucas(std::int64_t P, std::int64_t Q) noexcept {
    if (Q == 0 || P == 0) return true;
    __int128 const p2 = static_cast<__int128>(P) * P;
    for (int k = 1; k <= 4; ++k) {
        if (p2 == static_cast<__int128>(k) * Q) return true;
    }
    return false;
}

std::optional<std::uint64_t> GridReport::at(std::span<const std::int64_t> coordinates) const {
    if (coordinates.size() != axes.size()) throw std::invalid_argument("coordinate rank mismatch");
    std::size_t index = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        auto const& values = axes[i].values;
        auto const it = std::find(values.begin(), values.end(), coordinates[i]);
        if (it == values.end()) throw std::out_of_range("coordinate not on axis " + axes[i].name);
        index = index * values.size() + static_cast<std::size_t>(it - values.begin());
    }
    return cells.at(index);
}

GridReport grid_scan(const GridSpec& spec, const ScanOptions& options) {
    std::vector<std::string> expected;
    switch (spec.method) {
        case Method::kLucas:
        case Method::kDoubleLucas: expected = {"P", "Q"}; break;
        case Method::kMatrix: expected = {"R", "P", "Q"}; break;
        case Method::kGenPell: expected = {"D", "x", "y"}; break;
        default:
            throw std::invalid_argument("grid scans support lucas, double-lucas, matrix, gen-pell");
    }
    if (spec.axes.size() != expected.size()) throw std::invalid_argument("wrong number of grid axes");
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (spec.axes[i].name != expected[i]) {
            throw std::invalid_argument("grid axis " + std::to_string(i) + " must be " + expected[i]);
        }
        if (spec.axes[i].values.empty()) throw std::invalid_argument("empty grid axis " + expected[i]);
    }

    GridReport report;
    report.method = std::string(method_id(spec.method));
    report.axes = spec.axes;
    report.limit = spec.limit;
    report.convention = spec.method == Method::kMatrix && spec.q_convention == QConvention::kDisplay
                            ? "display"
                            : "charpoly";

    std::vector<std::int64_t> point(spec.axes.size());
    std::size_t total = 1;
    for (auto const& axis : spec.axes) total *= axis.values.size();
    report.cells.reserve(total);

    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = spec.axes.size(); i-- > 0;) {
            auto const& values = spec.axes[i].values;
            point[i] = values[rest % values.size()];
            rest /= values.size();
        }

        std::optional<TestConfig> config;
        switch (spec.method) {
            case Method::kLucas:
            case Method::kDoubleLucas:
                if (!is_degenerate_lucas(point[0], point[1])) {
                    config = TestConfig::make(spec.method, LucasParams{point[0], point[1]});
                }
                break;
            case Method::kMatrix:
                if (point[0] != 0) {
                    MatrixParams const m =
                        matrix_params_from_label(point[1], point[2], point[0], spec.q_convention);
                    // U~ = R * U(P, QR)
                    if (!is_degenerate_lucas(m.P, m.Q * m.R)) {
                        config = TestConfig::make(spec.method, m, spec.variant);
                    }
                }
                break;
            case Method::kGenPell: {
                std::int64_t const D = point[0];
                std::int64_t const x = point[1];
                std::int64_t const y = point[2];
                // x + y sqrt(D) generates the Lucas sequence (2x, x^2 - D y^2)
                if (!is_degenerate_lucas(2 * x, x * x - D * y * y)) {
                    config = TestConfig::make(spec.method, ConicParams{D, x, y});
                }
                break;
            }
            default: break;
        }

        if (!config || spec.limit < 3) {
            report.cells.push_back(config ? std::optional<std::uint64_t>{0} : std::nullopt);
            continue;
        }
        ScanOptions cell_options = options;
        cell_options.checkpoint.reset();
        cell_options.on_pseudoprimes = nullptr;
        report.cells.push_back(scan_range(*config, 3, spec.limit, cell_options).count());
    }
    return report;
}

}  // namespace pellprime
