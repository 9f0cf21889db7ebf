#include "pellprime/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pellprime {

namespace {

using json = nlohmann::ordered_json;

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string out;
    bool first = true;
    for (auto const& f : fields) {
        if (!first) out += ',';
        out += f;
        first = false;
    }
    return out;
}

std::string optional_number(std::optional<std::int64_t> v) {
    return v ? std::to_string(*v) : std::string{};
}

json stats_json(const ScanStats& s) {
    return json{{"candidates", s.candidates},
                {"short_circuited", s.short_circuited},
                {"probable_primes", s.probable_primes},
                {"composites", s.composites},
                {"params_invalid", s.params_invalid}};
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "jsonl") return Format::kJsonl;
    if (name == "csv") return Format::kCsv;
    return std::nullopt;
}

std::string verdict_csv_header() {
    return "record,method,params,n,outcome,reason,factor,jacobi";
}

std::string format_verdict(std::uint64_t n, const TestConfig& config, const Verdict& verdict,
                           Format format) {
    std::string const method(method_id(config.method()));
    std::string const params = config.canonical_params();
    if (format == Format::kCsv) {
        return csv_row({"verdict", method, params, std::to_string(n),
                        std::string(to_string(verdict.outcome)), std::string(to_string(verdict.reason)),
                        verdict.factor ? std::to_string(verdict.factor) : std::string{},
                        optional_number(verdict.jacobi)});
    }
    json record{{"schema", kSchemaVersion},
                {"record", "verdict"},
                {"command", "test"},
                {"method", method},
                {"params", params},
                {"n", n},
                {"outcome", to_string(verdict.outcome)},
                {"reason", to_string(verdict.reason)},
                {"factor", nullptr},
                {"jacobi", nullptr}};
    if (verdict.factor) record["factor"] = verdict.factor;
    if (verdict.jacobi) record["jacobi"] = *verdict.jacobi;
    return record.dump();
}

std::string scan_csv_header() {
    return "record,method,params,n,lo,hi,count,candidates,short_circuited,probable_primes,"
           "composites,params_invalid,resumed,elapsed_seconds";
}

std::string format_pseudoprime(const std::string& method, const std::string& params,
                               std::uint64_t n, Format format) {
    if (format == Format::kCsv) {
        return csv_row({"pseudoprime", method, params, std::to_string(n), "", "", "", "", "", "", "",
                        "", "", ""});
    }
    return json{{"schema", kSchemaVersion},
                {"record", "pseudoprime"},
                {"method", method},
                {"params", params},
                {"n", n}}
        .dump();
}

std::string format_scan_summary(const ScanReport& report, Format format, bool include_timing) {
    if (format == Format::kCsv) {
        ScanStats const& s = report.stats;
        std::ostringstream elapsed;
        if (include_timing) elapsed << report.elapsed_seconds;
        return csv_row({"summary", report.method, report.params, "", std::to_string(report.lo),
                        std::to_string(report.hi), std::to_string(report.count()),
                        std::to_string(s.candidates), std::to_string(s.short_circuited),
                        std::to_string(s.probable_primes), std::to_string(s.composites),
                        std::to_string(s.params_invalid), report.resumed ? "true" : "false",
                        elapsed.str()});
    }
    json record{{"schema", kSchemaVersion},
                {"record", "summary"},
                {"command", "scan"},
                {"method", report.method},
                {"params", report.params},
                {"lo", report.lo},
                {"hi", report.hi},
                {"count", report.count()},
                {"stats", stats_json(report.stats)},
                {"resumed", report.resumed},
                {"elapsed_seconds", nullptr}};
    if (include_timing) record["elapsed_seconds"] = report.elapsed_seconds;
    return record.dump();
}

std::string format_grid(const GridReport& report, Format format) {
    if (format == Format::kJsonl) {
        json axes = json::array();
        for (auto const& axis : report.axes) axes.push_back({{"name", axis.name}, {"values", axis.values}});
        json cells = json::array();
        for (auto const& c : report.cells) cells.push_back(c ? json(*c) : json(nullptr));
        return json{{"schema", kSchemaVersion},
                    {"record", "grid"},
                    {"command", "grid"},
                    {"method", report.method},
                    {"convention", report.convention},
                    {"limit", report.limit},
                    {"axes", axes},
                    {"cells", cells}}
            .dump();
    }

    std::ostringstream out;
    out << "# method=" << report.method << " limit=" << report.limit
        << " convention=" << report.convention << '\n';
    std::size_t const rank = report.axes.size();
    auto const& rows = report.axes[rank - 2];
    auto const& cols = report.axes[rank - 1];
    std::size_t const block = rows.values.size() * cols.values.size();
    std::size_t const blocks = report.cells.size() / block;
    for (std::size_t b = 0; b < blocks; ++b) {
        if (rank == 3) out << "# " << report.axes[0].name << '=' << report.axes[0].values[b] << '\n';
        out << rows.name << '\\' << cols.name;
        for (auto v : cols.values) out << ',' << v;
        out << '\n';
        for (std::size_t r = 0; r < rows.values.size(); ++r) {
            out << rows.values[r];
            for (std::size_t c = 0; c < cols.values.size(); ++c) {
                auto const& cell = report.cells[b * block + r * cols.values.size() + c];
                out << ',';
                if (cell) {
                    out << *cell;
                } else {
                    out << "skip";
                }
            }
            out << '\n';
        }
    }
    std::string text = out.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

}  // namespace pellprime
