#include "hindex/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"

namespace hindex {

namespace {

double age_weight(int now_year, int year, double delta) {
    const double age = static_cast<double>(now_year - year + 1);
    return std::pow(age, -delta);
}

ScoredVector sorted_scores(const std::vector<Publication>& pubs, std::vector<double> scores) {
    std::vector<std::size_t> order(pubs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        if (pubs[a].year != pubs[b].year) return pubs[a].year < pubs[b].year;
        return pubs[a].id < pubs[b].id;
    });
    ScoredVector out;
    for (auto i : order) {
        out.scores.push_back(scores[i]);
        out.ids.push_back(pubs[i].id);
    }
    return out;
}

} // namespace

ScoredVector contemporary_scores(const CitationRecord& record, const IndexConfig& config) {
    const int now = resolve_now_year(record, config);
    const auto filtered = filter_self_citations(record, config.self_citation_mode);
    std::vector<double> scores;
    for (const auto& pub : filtered.publications) {
        scores.push_back(config.gamma * age_weight(now, pub.year, config.delta) *
                         static_cast<double>(pub.citations()));
    }
    return sorted_scores(filtered.publications, std::move(scores));
}

ScoredVector trend_scores(const CitationRecord& record, const IndexConfig& config) {
    const int now = resolve_now_year(record, config);
    const auto filtered = filter_self_citations(record, config.self_citation_mode);
    std::vector<double> scores;
    for (const auto& pub : filtered.publications) {
        if (!pub.citation_events) {
            if (pub.citations() != 0) {
                throw FidelityError(fmt::format(
                    "publication '{}': trend h requires citation events", pub.id));
            }
            scores.push_back(0.0);
            continue;
        }
        double sum = 0.0;
        for (const auto& ev : *pub.citation_events) {
            if (ev.year > now) continue;
            sum += age_weight(now, ev.year, config.delta);
        }
        scores.push_back(config.gamma * sum);
    }
    return sorted_scores(filtered.publications, std::move(scores));
}

std::int64_t contemporary_h(const CitationRecord& record, const IndexConfig& config) {
    return rank_threshold(contemporary_scores(record, config).scores);
}

std::int64_t trend_h(const CitationRecord& record, const IndexConfig& config) {
    return rank_threshold(trend_scores(record, config).scores);
}

double normalized_h_output(const CitationRecord& record, const IndexConfig& config) {
    if (record.publications.empty()) {
        throw UndefinedInputError(
            fmt::format("record '{}': normalized h needs at least one publication", record.entity));
    }
    const auto h = h_index(citation_vector(record, config));
    return static_cast<double>(h) / static_cast<double>(record.publications.size());
}

double ar_index(const CitationRecord& record, const IndexConfig& config) {
    const int now = resolve_now_year(record, config);
    const auto v = citation_vector(record, config);
    const auto h = h_index(v);
    std::map<std::string, int> year_of;
    for (const auto& pub : record.publications) year_of.emplace(pub.id, pub.year);
    double sum = 0.0;
    for (std::int64_t j = 1; j <= h; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        const double age = static_cast<double>(now - year_of.at(v.ids()[idx]) + 1);
        sum += static_cast<double>(v.counts()[idx]) / age;
    }
    return std::sqrt(sum);
}

double m_quotient(const CitationRecord& record, const IndexConfig& config) {
    if (record.publications.empty()) {
        throw UndefinedInputError(
            fmt::format("record '{}': m quotient needs at least one publication", record.entity));
    }
    const int now = resolve_now_year(record, config);
    int first = record.publications.front().year;
    for (const auto& pub : record.publications) first = std::min(first, pub.year);
    const auto h = h_index(citation_vector(record, config));
    return static_cast<double>(h) / static_cast<double>(now - first + 1);
}

HSequence h_sequence(const CitationRecord& record, const IndexConfig& config,
                     SequenceCitations citations) {
    HSequence seq;
    if (record.publications.empty()) return seq;

    auto filtered = filter_self_citations(record, config.self_citation_mode);
    int first = filtered.publications.front().year;
    int last = first;
    for (const auto& pub : filtered.publications) {
        first = std::min(first, pub.year);
        last = std::max(last, pub.year);
    }

    std::vector<std::pair<int, std::int64_t>> year_counts;
    for (const auto& pub : filtered.publications) {
        std::int64_t count = pub.citations();
        if (citations == SequenceCitations::through_last_year) {
            if (!pub.citation_events) {
                if (count != 0) {
                    throw FidelityError(fmt::format(
                        "publication '{}': year-truncated citations require citation events",
                        pub.id));
                }
            } else {
                count = std::count_if(pub.citation_events->begin(), pub.citation_events->end(),
                                      [&](const CitationEvent& ev) { return ev.year <= last; });
            }
        }
        year_counts.emplace_back(pub.year, count);
    }

    for (int start = last; start >= first; --start) {
        std::vector<std::int64_t> window;
        for (const auto& [year, count] : year_counts) {
            if (year >= start) window.push_back(count);
        }
        seq.start_years.push_back(start);
        seq.values.push_back(h_index(CitationVector::from_counts(std::move(window))));
    }
    return seq;
}

std::size_t HMatrix::columns() const {
    std::size_t n = 0;
    for (const auto& row : rows) n = std::max(n, row.size());
    return n;
}

HMatrix h_matrix(const std::vector<CitationRecord>& cohort, const IndexConfig& config,
                 SequenceCitations citations) {
    if (cohort.empty()) {
        throw UndefinedInputError("h-matrix needs at least one record");
    }
    HMatrix m;
    std::vector<HSequence> sequences;
    for (const auto& record : cohort) {
        m.entities.push_back(record.entity);
        sequences.push_back(h_sequence(record, config, citations));
    }
    std::size_t width = 0;
    for (const auto& s : sequences) width = std::max(width, s.values.size());
    for (const auto& s : sequences) {
        std::vector<std::optional<std::int64_t>> row(width);
        for (std::size_t i = 0; i < s.values.size(); ++i) row[i] = s.values[i];
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::string h_matrix_csv(const HMatrix& matrix) {
    std::string out = "entity";
    const auto width = matrix.columns();
    for (std::size_t i = 0; i < width; ++i) out += fmt::format(",w{}", i);
    out += '\n';
    for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
        out += csv_escape(matrix.entities[r]);
        for (const auto& cell : matrix.rows[r]) {
            out += ',';
            if (cell) out += std::to_string(*cell);
        }
        out += '\n';
    }
    return out;
}

} // namespace hindex
