#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hindex/record.hpp"

namespace testing {

inline std::string data_path(const std::string& relative) {
    return std::string(HINDEX_DATA_DIR) + "/" + relative;
}

inline const std::vector<std::string>& same_h_names() {
    static const std::vector<std::string> names{"A", "B", "C", "D", "E", "F", "G"};
    return names;
}

inline const std::vector<std::string>& three_factor_names() {
    static const std::vector<std::string> names{"ACE", "ACF", "ADE", "ADF",
                                                "BCE", "BCF", "BDE", "BDF"};
    return names;
}

inline hindex::CitationRecord same_h(const std::string& name) {
    return hindex::parse_record(data_path("fixtures/same_h/" + name + ".json"));
}

inline hindex::CitationRecord three_factor(const std::string& name) {
    return hindex::parse_record(data_path("fixtures/three_factor/" + name + ".json"));
}

inline hindex::Publication counts_pub(std::string id, int year, std::int64_t citations,
                                      int author_count = 1) {
    hindex::Publication p;
    p.id = std::move(id);
    p.year = year;
    p.author_count = author_count;
    p.citation_count = citations;
    return p;
}

inline hindex::Publication events_pub(std::string id, int year, std::vector<hindex::CitationEvent> events,
                                      std::vector<std::string> authors = {}) {
    hindex::Publication p;
    p.id = std::move(id);
    p.year = year;
    p.authors = std::move(authors);
    p.author_count = p.authors.empty() ? 1 : static_cast<int>(p.authors.size());
    p.citation_count = static_cast<std::int64_t>(events.size());
    p.citation_events = std::move(events);
    return p;
}

inline hindex::CitationRecord counts_record(const std::vector<std::int64_t>& counts, int year = 2000) {
    hindex::CitationRecord r;
    r.entity = "r";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        r.publications.push_back(counts_pub(fmt::format("p{}", i), year, counts[i]));
    }
    return r;
}

inline std::vector<std::int64_t> random_counts(std::mt19937_64& rng, std::size_t max_len = 50,
                                               std::int64_t max_count = 200) {
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::uniform_int_distribution<std::int64_t> count(0, max_count);
    std::vector<std::int64_t> out(len);
    for (auto& c : out) c = count(rng);
    return out;
}

// Event-level record: publications over a span of years, each with events
// dated between its year and `now`.
inline hindex::CitationRecord random_event_record(std::mt19937_64& rng, int now = 2020) {
    hindex::CitationRecord r;
    r.entity = "rand";
    r.owner_name = "Owner";
    const int n = std::uniform_int_distribution<int>(1, 15)(rng);
    const int span = std::uniform_int_distribution<int>(0, 12)(rng);
    static const std::vector<std::string> pool{"Owner", "Ann", "Bob", "Cy", "Dee"};
    for (int i = 0; i < n; ++i) {
        const int year = now - std::uniform_int_distribution<int>(0, span)(rng);
        const int n_events = std::uniform_int_distribution<int>(0, 25)(rng);
        std::vector<hindex::CitationEvent> events;
        for (int k = 0; k < n_events; ++k) {
            hindex::CitationEvent ev;
            ev.year = std::uniform_int_distribution<int>(year, now)(rng);
            ev.citing_authors.push_back(pool[std::uniform_int_distribution<std::size_t>(0, 4)(rng)]);
            events.push_back(std::move(ev));
        }
        std::vector<std::string> authors{"Owner"};
        if (std::uniform_int_distribution<int>(0, 1)(rng)) authors.push_back("Ann");
        r.publications.push_back(events_pub(fmt::format("e{}", i), year, std::move(events), authors));
    }
    return r;
}

} // namespace testing
