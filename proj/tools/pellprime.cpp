// pellprime: run single probable-prime tests, pseudoprime range scans and
// parameter grids from the command line.
//
// Exit codes: 0 probable prime (or a completed scan/grid), 1 composite,
// 2 params-invalid or usage error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pellprime/config.hpp"
#include "pellprime/report.hpp"
#include "pellprime/search.hpp"

namespace {

using namespace pellprime;

constexpr int kExitProbablePrime = 0;
constexpr int kExitComposite = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kAutoCheckpointSpan = 100'000'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamFlags {
    std::string method;
    std::optional<std::int64_t> P, Q, R, D, x, y, a, lucas_P;
    std::optional<std::uint64_t> base;
    bool selfridge = false;
    std::string variant = "lemma";
    std::string q_convention = "display";
};

void add_param_flags(CLI::App& cmd, ParamFlags& f) {
    cmd.add_option("--method", f.method, "Test method")
        ->required()
        ->check(CLI::IsMember({"fermat", "strong-base", "lucas", "double-lucas", "matrix", "pell",
                               "strong-pell", "strong-pell-phi", "gen-pell", "pell-a099011"}));
    cmd.add_option("-P", f.P, "Lucas / matrix P");
    cmd.add_option("-Q", f.Q, "Lucas / matrix Q");
    cmd.add_option("-R", f.R, "Matrix R");
    cmd.add_option("-D", f.D, "Conic D");
    cmd.add_option("-x", f.x, "Conic base point x");
    cmd.add_option("-y", f.y, "Conic base point y");
    cmd.add_option("-a", f.a, "Parametrization value a (strong-pell-phi)");
    cmd.add_option("--lucas-P", f.lucas_P, "Pell params derived per n from Lucas P");
    cmd.add_option("--base", f.base, "Base for fermat / strong-base (default 2)");
    cmd.add_flag("--selfridge", f.selfridge, "Select parameters per n");
    cmd.add_option("--variant", f.variant, "Matrix test congruences")
        ->check(CLI::IsMember({"lemma", "printed"}));
    cmd.add_option("--q-convention", f.q_convention,
                   "How matrix -Q is read: charpoly [[P,-Q],[R,0]] or display [[P,Q],[R,0]]")
        ->check(CLI::IsMember({"charpoly", "display"}));
}

MatrixVariant variant_of(const ParamFlags& f) {
    return f.variant == "printed" ? MatrixVariant::kPrinted : MatrixVariant::kLemma;
}

QConvention convention_of(const ParamFlags& f) {
    return f.q_convention == "display" ? QConvention::kDisplay : QConvention::kCharPoly;
}

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& method) {
    if (!v) throw UsageError(std::string("method ") + method + " needs " + flag);
    return *v;
}

TestConfig build_config(const ParamFlags& f) {
    Method const method = *parse_method(f.method);
    bool const explicit_lucas = f.P || f.Q || f.R;
    bool const explicit_conic = f.D || f.a || f.lucas_P;
    if (f.selfridge && (explicit_lucas || f.D || f.a || f.lucas_P)) {
        throw UsageError("--selfridge excludes explicit parameters");
    }
    switch (method) {
        case Method::kFermat:
        case Method::kStrongBase:
            if (f.selfridge || explicit_lucas || explicit_conic) throw UsageError("only --base applies");
            return TestConfig::make(method, Base{f.base.value_or(2)});
        case Method::kLucas:
        case Method::kDoubleLucas:
            if (f.selfridge) return TestConfig::make(method, Selfridge{});
            if (f.R || explicit_conic) throw UsageError("lucas methods take -P and -Q only");
            return TestConfig::make(method, LucasParams{need(f.P, "-P", f.method), need(f.Q, "-Q", f.method)});
        case Method::kMatrix:
            if (f.selfridge) return TestConfig::make(method, Selfridge{}, variant_of(f));
            if (explicit_conic) throw UsageError("matrix takes -P, -Q and -R only");
            if (need(f.R, "-R", f.method) == 0) throw UsageError("-R must be nonzero");
            return TestConfig::make(method,
                                    matrix_params_from_label(need(f.P, "-P", f.method),
                                                             need(f.Q, "-Q", f.method), *f.R,
                                                             convention_of(f)),
                                    variant_of(f));
        case Method::kPell:
        case Method::kStrongPell:
            if (f.selfridge || explicit_lucas || f.a) throw UsageError("pell methods take -D -x -y or --lucas-P");
            if (f.lucas_P) {
                if (f.D || f.x || f.y) throw UsageError("--lucas-P excludes -D, -x, -y");
                return TestConfig::make(method, FromLucas{*f.lucas_P});
            }
            return TestConfig::make(method, ConicParams{need(f.D, "-D", f.method), need(f.x, "-x", f.method),
                                                        need(f.y, "-y", f.method)});
        case Method::kStrongPellPhi:
            if (f.selfridge || explicit_lucas || f.lucas_P || f.x || f.y) {
                throw UsageError("strong-pell-phi takes -D and -a only");
            }
            return TestConfig::make(method, PhiParams{need(f.D, "-D", f.method), need(f.a, "-a", f.method)});
        case Method::kGenPell:
            if (explicit_lucas || f.a || f.lucas_P) throw UsageError("gen-pell takes -D -x -y or --selfridge");
            if (f.selfridge) {
                return TestConfig::make(method, Selfridge{}, MatrixVariant::kLemma,
                                        GenPellBase{f.x.value_or(3), f.y.value_or(2)});
            }
            return TestConfig::make(method, ConicParams{need(f.D, "-D", f.method), need(f.x, "-x", f.method),
                                                        need(f.y, "-y", f.method)});
        case Method::kPellA099011:
            if (f.selfridge || explicit_lucas || explicit_conic || f.x || f.y) {
                throw UsageError("pell-a099011 takes no parameters");
            }
            return TestConfig::make(method, std::monostate{});
    }
    throw UsageError("unknown method");
}

std::int64_t parse_int(const std::string& text) {
    std::int64_t value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw UsageError("not an integer: " + text);
    return value;
}

// "lo..hi" or a comma list.
std::vector<std::int64_t> parse_axis(const std::string& text) {
    std::vector<std::int64_t> values;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        std::int64_t const lo = parse_int(text.substr(0, dots));
        std::int64_t const hi = parse_int(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range: " + text);
        for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t const comma = text.find(',', start);
        std::string const item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

// "-P=-3" -> "-P" "-3"; CLI11 only splits '=' on long options.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.size() > 3 && arg[0] == '-' && arg[1] != '-' && arg[2] == '=') {
            out.push_back(arg.substr(0, 2));
            out.push_back(arg.substr(3));
        } else {
            out.push_back(std::move(arg));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-two linear recurrence probable-prime tests and pseudoprime scans", "pellprime"};
    app.require_subcommand(1);

    ParamFlags flags;
    std::string format_name = "jsonl";

    auto* test_cmd = app.add_subcommand("test", "Run one test on n");
    std::string n_text;
    test_cmd->add_option("n", n_text, "Odd integer to test")->required();
    add_param_flags(*test_cmd, flags);
    test_cmd->add_option("--format", format_name)->check(CLI::IsMember({"jsonl", "csv"}));

    auto* scan_cmd = app.add_subcommand("scan", "List the pseudoprimes in a range");
    std::uint64_t from = 3;
    std::uint64_t to = 0;
    unsigned jobs = 1;
    std::string checkpoint;
    bool resume = false;
    bool include_squares = false;
    bool no_timing = false;
    add_param_flags(*scan_cmd, flags);
    scan_cmd->add_option("--from", from, "Lower bound (default 3)");
    scan_cmd->add_option("--to", to, "Upper bound")->required();
    scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", format_name)->check(CLI::IsMember({"jsonl", "csv"}));
    scan_cmd->add_option("--checkpoint", checkpoint, "Resume-cursor file");
    scan_cmd->add_flag("--resume", resume, "Continue from --checkpoint");
    scan_cmd->add_flag("--include-squares", include_squares, "Test perfect squares too");
    scan_cmd->add_flag("--no-timing", no_timing, "Omit elapsed time from the summary");

    auto* grid_cmd = app.add_subcommand("grid", "Pseudoprime counts over a parameter grid");
    std::string grid_method;
    std::string p_range, q_range, r_set, d_range, x_range, y_range;
    std::uint64_t limit = 100000;
    std::string grid_variant = "lemma";
    std::string grid_convention = "display";
    grid_cmd->add_option("--method", grid_method)
        ->required()
        ->check(CLI::IsMember({"lucas", "double-lucas", "matrix", "gen-pell"}));
    grid_cmd->add_option("--p-range", p_range, "P values, lo..hi or a,b,c");
    grid_cmd->add_option("--q-range", q_range, "Q values");
    grid_cmd->add_option("--r-set", r_set, "R values (matrix)");
    grid_cmd->add_option("--d-range", d_range, "D values (gen-pell)");
    grid_cmd->add_option("--x-range", x_range, "x values (gen-pell)");
    grid_cmd->add_option("--y-range", y_range, "y values (gen-pell)");
    grid_cmd->add_option("--limit", limit, "Upper bound of every cell's scan");
    grid_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    grid_cmd->add_option("--format", format_name)->check(CLI::IsMember({"jsonl", "csv"}));
    grid_cmd->add_option("--variant", grid_variant)->check(CLI::IsMember({"lemma", "printed"}));
    grid_cmd->add_option("--q-convention", grid_convention)->check(CLI::IsMember({"charpoly", "display"}));

    std::vector<std::string> args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Format const format = *parse_format(format_name);
    try {
        if (*test_cmd) {
            std::uint64_t n = 0;
            auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
            if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) {
                throw UsageError("n must be a non-negative integer: " + n_text);
            }
            TestConfig const config = build_config(flags);
            Verdict const verdict = config.evaluate(n);
            if (format == Format::kCsv) std::cout << verdict_csv_header() << '\n';
            std::cout << format_verdict(n, config, verdict, format) << '\n';
            switch (verdict.outcome) {
                case Outcome::kProbablePrime: return kExitProbablePrime;
                case Outcome::kComposite: return kExitComposite;
                case Outcome::kParamsInvalid: return kExitUsage;
            }
        }

        if (*scan_cmd) {
            TestConfig const config = build_config(flags);
            if (from < 3 || from > to) throw UsageError("need 3 <= --from <= --to");
            ScanOptions options;
            options.jobs = jobs;
            options.skip_perfect_squares = !include_squares;
            options.resume = resume;
            if (!checkpoint.empty()) {
                options.checkpoint = checkpoint;
            } else if (to - from > kAutoCheckpointSpan) {
                options.checkpoint = "pellprime-" + flags.method + ".ckpt";
            }
            if (resume && !options.checkpoint) throw UsageError("--resume needs --checkpoint");
            std::string const method(method_id(config.method()));
            std::string const params = config.canonical_params();
            if (format == Format::kCsv) std::cout << scan_csv_header() << '\n';
            options.on_pseudoprimes = [&](std::span<const std::uint64_t> found) {
                for (std::uint64_t n : found) std::cout << format_pseudoprime(method, params, n, format) << '\n';
                std::cout.flush();
            };
            ScanReport const report = scan_range(config, from, to, options);
            std::cout << format_scan_summary(report, format, !no_timing) << '\n';
            return 0;
        }

        if (*grid_cmd) {
            GridSpec spec;
            spec.method = *parse_method(grid_method);
            spec.limit = limit;
            spec.variant = grid_variant == "printed" ? MatrixVariant::kPrinted : MatrixVariant::kLemma;
            spec.q_convention = grid_convention == "display" ? QConvention::kDisplay : QConvention::kCharPoly;
            auto axis = [](const char* name, const std::string& text, const char* flag) {
                if (text.empty()) throw UsageError(std::string("grid needs ") + flag);
                return GridAxis{name, parse_axis(text)};
            };
            switch (spec.method) {
                case Method::kMatrix:
                    spec.axes = {axis("R", r_set, "--r-set"), axis("P", p_range, "--p-range"),
                                 axis("Q", q_range, "--q-range")};
                    break;
                case Method::kGenPell:
                    spec.axes = {axis("D", d_range, "--d-range"), axis("x", x_range, "--x-range"),
                                 axis("y", y_range, "--y-range")};
                    break;
                default:
                    spec.axes = {axis("P", p_range, "--p-range"), axis("Q", q_range, "--q-range")};
                    break;
            }
            ScanOptions options;
            options.jobs = jobs;
            std::cout << format_grid(grid_scan(spec, options), format) << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
