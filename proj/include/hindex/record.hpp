#pragma once

// Citation-record data model: publications, citation events, evaluation
// config, ingestion from JSON/CSV, self-citation filtering and the
// descending citation vector every index is computed from.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hindex {

struct CitationEvent {
    int year = 0;
    std::vector<std::string> citing_authors;

    bool operator==(const CitationEvent&) const = default;
};

struct Publication {
    std::string id;
    int year = 0;
    std::vector<std::string> authors;
    int author_count = 1;
    std::optional<std::int64_t> citation_count;
    std::optional<std::vector<CitationEvent>> citation_events;

    // Recorded citations: the event count when events exist, else the count.
    std::int64_t citations() const;
    bool has_events() const { return citation_events.has_value(); }

    bool operator==(const Publication&) const = default;
};

enum class EntityKind { researcher, journal, institution, topic };

struct CitationRecord {
    std::string entity;
    EntityKind kind = EntityKind::researcher;
    std::optional<std::string> owner_name;
    std::vector<Publication> publications;

    bool operator==(const CitationRecord&) const = default;
};

enum class GConvention { bounded, unbounded };
enum class SelfCitationMode { include, exclude_own, exclude_coauthor };

struct IndexConfig {
    // Unset means "latest year appearing anywhere in the record".
    std::optional<int> now_year;
    double gamma = 4.0;
    double delta = 1.0;
    GConvention g_convention = GConvention::bounded;
    SelfCitationMode self_citation_mode = SelfCitationMode::include;
    double alpha_predictive = -0.1;
    double beta_molinari = 0.4;
};

// Descending citation counts, each paired with the id of its publication.
// Equal counts are ordered by publication year, then id.
class CitationVector {
public:
    CitationVector() = default;

    // Sorts arbitrary counts descending; ids are synthesized from input order.
    static CitationVector from_counts(std::vector<std::int64_t> counts);

    std::span<const std::int64_t> counts() const { return counts_; }
    std::span<const std::string> ids() const { return ids_; }
    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    // 1-based rank access, matching the usual index definitions.
    std::int64_t at_rank(std::size_t rank) const { return counts_[rank - 1]; }
    std::int64_t total() const;

private:
    friend CitationVector citation_vector(const CitationRecord&, const IndexConfig&);
    std::vector<std::int64_t> counts_;
    std::vector<std::string> ids_;
};

struct Totals {
    std::int64_t n_p = 0;
    std::int64_t n_c = 0;
    bool operator==(const Totals&) const = default;
};

enum class RecordFormat { json, csv };

std::string_view to_string(EntityKind kind);
EntityKind parse_entity_kind(std::string_view text);
std::string_view to_string(GConvention convention);
std::string_view to_string(SelfCitationMode mode);

// Trimmed, ASCII case-folded author name used for identity comparisons.
std::string normalize_author(std::string_view name);

// Throws ValidationError naming the offending publication id.
void validate(const CitationRecord& record);

CitationRecord parse_record(const std::filesystem::path& path, RecordFormat format);
CitationRecord parse_record(const std::filesystem::path& path); // format from extension
CitationRecord parse_record_json(std::string_view text);
// `entity` names the record; CSV files carry no header metadata.
CitationRecord parse_record_csv(std::string_view text, std::string entity);

std::string serialize_record_json(const CitationRecord& record);

// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_escape(std::string_view field);

// Latest year appearing anywhere in the record (publications and events);
// nullopt for a record without publications.
std::optional<int> latest_year(const CitationRecord& record);

// Config now_year, falling back to latest_year(). Throws ValidationError when
// an explicit now_year precedes a publication year.
int resolve_now_year(const CitationRecord& record, const IndexConfig& config);

CitationRecord filter_self_citations(const CitationRecord& record, SelfCitationMode mode);

CitationVector citation_vector(const CitationRecord& record, const IndexConfig& config);

Totals totals(const CitationRecord& record);

} // namespace hindex
