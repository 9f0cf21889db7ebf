#pragma once

// Serialization of verdicts, scan reports and grid reports. Records are
// either JSON lines (schema "v1") or CSV; both carry the same fields.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pellprime/config.hpp"
#include "pellprime/search.hpp"
#include "pellprime/verdict.hpp"

namespace pellprime {

inline constexpr std::string_view kSchemaVersion = "v1";

enum class Format : std::uint8_t { kJsonl, kCsv };

std::optional<Format> parse_format(std::string_view name) noexcept;

std::string verdict_csv_header();
std::string format_verdict(std::uint64_t n, const TestConfig& config, const Verdict& verdict,
                           Format format);

std::string scan_csv_header();
std::string format_pseudoprime(const std::string& method, const std::string& params,
                               std::uint64_t n, Format format);
/// With include_timing false the record is a pure function of the scan's
/// inputs.
std::string format_scan_summary(const ScanReport& report, Format format, bool include_timing);

/// CSV: one matrix per leading-axis value for three-axis grids, rows are
/// the first remaining axis, columns the second, "skip" marks degenerate
/// cells. JSONL: a single record.
std::string format_grid(const GridReport& report, Format format);

}  // namespace pellprime
