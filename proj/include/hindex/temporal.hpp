#pragma once

// Indices that depend on publication/citation ages and career time.
// Ages use the +1 convention: a publication from now_year has age 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hindex/record.hpp"

namespace hindex {

struct ScoredVector {
    std::vector<double> scores; // descending
    std::vector<std::string> ids;
};

// Per-publication S^c(i) = gamma * age^-delta * |C(i)|, sorted descending.
ScoredVector contemporary_scores(const CitationRecord& record, const IndexConfig& config);
// Per-publication S^t(i) = gamma * sum over citing events of event_age^-delta.
// Events dated after now_year are ignored. Throws FidelityError on counts-only data.
ScoredVector trend_scores(const CitationRecord& record, const IndexConfig& config);

std::int64_t contemporary_h(const CitationRecord& record, const IndexConfig& config);
std::int64_t trend_h(const CitationRecord& record, const IndexConfig& config);

// h / N_p. Throws UndefinedInputError for an empty record.
double normalized_h_output(const CitationRecord& record, const IndexConfig& config = {});

// sqrt(sum over the h-core of count / age).
double ar_index(const CitationRecord& record, const IndexConfig& config);

// h / y with y = now_year - first publication year + 1.
// Throws UndefinedInputError for an empty record.
double m_quotient(const CitationRecord& record, const IndexConfig& config);

enum class SequenceCitations {
    recorded_totals,    // every recorded citation counts
    through_last_year,  // only events dated <= the last publication year (needs events)
};

// h over cumulative windows [t, t], [t-1, t], ..., [first, t] of publication
// years, t being the last publication year. start_years[i] is the first year
// of window i; values[i] its h.
struct HSequence {
    std::vector<int> start_years;
    std::vector<std::int64_t> values;
};

HSequence h_sequence(const CitationRecord& record, const IndexConfig& config,
                     SequenceCitations citations = SequenceCitations::recorded_totals);

// One row per record, aligned at window 0 (each record's own last year).
// Cells past a record's career are nullopt.
struct HMatrix {
    std::vector<std::string> entities;
    std::vector<std::vector<std::optional<std::int64_t>>> rows;
    std::size_t columns() const;
};

HMatrix h_matrix(const std::vector<CitationRecord>& cohort, const IndexConfig& config,
                 SequenceCitations citations = SequenceCitations::recorded_totals);

// CSV: header "entity,w0,w1,...", absent cells empty.
std::string h_matrix_csv(const HMatrix& matrix);

} // namespace hindex
