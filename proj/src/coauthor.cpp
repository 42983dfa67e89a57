#include "hindex/coauthor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"

namespace hindex {

AuthoredVector AuthoredVector::from_entries(std::vector<AuthoredEntry> entries) {
    for (const auto& e : entries) {
        if (e.authors < 1) {
            throw DomainError(fmt::format("author count {} is below 1", e.authors));
        }
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const AuthoredEntry& a, const AuthoredEntry& b) {
                         return a.citations > b.citations;
                     });
    AuthoredVector av;
    av.entries_ = std::move(entries);
    return av;
}

CitationVector AuthoredVector::citations() const {
    std::vector<std::int64_t> counts;
    counts.reserve(entries_.size());
    for (const auto& e : entries_) counts.push_back(e.citations);
    return CitationVector::from_counts(std::move(counts));
}

AuthoredVector authored_vector(const CitationRecord& record, const IndexConfig& config) {
    const auto v = citation_vector(record, config);
    std::map<std::string, int> authors_of;
    for (const auto& pub : record.publications) authors_of.emplace(pub.id, pub.author_count);
    std::vector<AuthoredEntry> entries;
    for (std::size_t i = 0; i < v.size(); ++i) {
        entries.push_back({v.counts()[i], authors_of.at(v.ids()[i])});
    }
    // Already in record order; stable sort keeps it.
    return AuthoredVector::from_entries(std::move(entries));
}

double hi_index(const AuthoredVector& av, CoreCenter center) {
    const auto h = h_index(av.citations());
    if (h == 0) return 0.0;
    std::vector<double> core;
    for (std::int64_t i = 0; i < h; ++i) {
        core.push_back(static_cast<double>(av.entries()[static_cast<std::size_t>(i)].authors));
    }
    double divisor;
    if (center == CoreCenter::mean) {
        double sum = 0.0;
        for (double a : core) sum += a;
        divisor = sum / static_cast<double>(h);
    } else {
        std::sort(core.begin(), core.end());
        const auto n = core.size();
        divisor = n % 2 == 1 ? core[n / 2] : 0.5 * (core[n / 2 - 1] + core[n / 2]);
    }
    return static_cast<double>(h) / divisor;
}

double pure_h(const AuthoredVector& av, std::optional<std::span<const double>> scores) {
    const auto h = h_index(av.citations());
    if (h == 0) return 0.0;
    if (scores && scores->size() < static_cast<std::size_t>(h)) {
        throw DomainError("pure h: fewer author scores than h-core publications");
    }
    double sum = 0.0;
    for (std::int64_t i = 0; i < h; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (scores) {
            const double s = (*scores)[idx];
            if (!(s > 0.0)) {
                throw DomainError(fmt::format("pure h: author score {} is not positive", s));
            }
            sum += 1.0 / s;
        } else {
            sum += static_cast<double>(av.entries()[idx].authors);
        }
    }
    return static_cast<double>(h) / std::sqrt(sum / static_cast<double>(h));
}

double schreiber_hm(const AuthoredVector& av) {
    double r_eff = 0.0;
    double best = 0.0;
    for (const auto& e : av.entries()) {
        r_eff += 1.0 / static_cast<double>(e.authors);
        // r_eff only grows and counts only shrink, so the first miss ends it.
        if (r_eff > static_cast<double>(e.citations) * (1.0 + 1e-12)) break;
        best = r_eff;
    }
    return best;
}

} // namespace hindex
