#pragma once

// Index reports: evaluation of named indices over a record, and rendering to
// aligned text tables, CSV and JSON.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hindex/record.hpp"
#include "hindex/venue_field.hpp"

namespace hindex {

struct ReportOptions {
    bool strict = false;
    std::optional<double> field_chi;
    std::optional<double> reference_chi;
    TheoreticalHReading theoretical_reading = TheoreticalHReading::dimensional;
};

struct IndexEntry {
    std::string key;
    std::optional<double> value; // nullopt: unavailable
    bool integral = false;
    std::string reason; // set when unavailable

    bool operator==(const IndexEntry&) const = default;
};

struct IndexReport {
    std::string entity;
    std::string kind;
    IndexConfig config; // now_year always resolved
    ReportOptions options;
    std::vector<IndexEntry> entries;

    const IndexEntry* find(std::string_view key) const;
};

// Every key the report layer understands, in canonical order. Additive only.
const std::vector<std::string>& known_index_keys();
bool is_known_index(std::string_view key);

// Fixed decimals used by text tables: 1 for a, r, h_w, ar; 2 for other reals.
int display_decimals(std::string_view key);

// Evaluates `keys` in order. Fidelity, domain and undefined-input failures mark
// the entry unavailable unless options.strict, in which case they propagate.
IndexReport compute_report(const CitationRecord& record, const IndexConfig& config,
                           const std::vector<std::string>& keys, const ReportOptions& options = {});

// Stable descending sort on `key`; unavailable values go last, ties by entity.
void sort_reports(std::vector<IndexReport>& reports, std::string_view key);

// Plain text table with left-aligned, space-padded columns.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render_text() const;
    std::string render_csv() const;
};

// Rounded display form of a value (no "-0.00").
std::string format_fixed(double value, int decimals);
// Shortest round-trip form.
std::string format_full(double value);

std::string render_report_table(const IndexReport& report);
std::string render_report_csv(const std::vector<IndexReport>& reports,
                              const std::vector<std::string>& keys);
std::string render_compare_table(const std::vector<IndexReport>& reports,
                                 const std::vector<std::string>& keys);

std::string render_report_json(const IndexReport& report);
std::string render_reports_json(const std::vector<IndexReport>& reports);
IndexReport parse_report_json(std::string_view text);
std::vector<IndexReport> parse_reports_json(std::string_view text);

// entity,series,x,y rows: rank/citation pairs then index/value pairs.
std::string render_plot_csv(const std::vector<std::pair<IndexReport, CitationVector>>& items);

} // namespace hindex
