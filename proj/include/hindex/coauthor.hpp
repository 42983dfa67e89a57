#pragma once

// Co-authorship corrected h variants.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hindex/record.hpp"

namespace hindex {

struct AuthoredEntry {
    std::int64_t citations = 0;
    int authors = 1;
};

// Entries in citation-descending order (record tie rule).
class AuthoredVector {
public:
    AuthoredVector() = default;
    // Sorts by citations descending, keeping input order among ties.
    // Throws DomainError if any author count is below 1.
    static AuthoredVector from_entries(std::vector<AuthoredEntry> entries);

    std::span<const AuthoredEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    CitationVector citations() const;

private:
    std::vector<AuthoredEntry> entries_;
};

AuthoredVector authored_vector(const CitationRecord& record, const IndexConfig& config);

enum class CoreCenter { mean, median };

// h divided by the mean or median author count of the h-core; 0 when h = 0.
double hi_index(const AuthoredVector& av, CoreCenter center);

// h / sqrt(E(author)), E(author) being the h-core mean of 1/S(author, D).
// Without `scores`, S = 1/author_count. Otherwise scores[i] is the author's
// normalized score on entry i (same order as av.entries()) and must be > 0.
double pure_h(const AuthoredVector& av, std::optional<std::span<const double>> scores = std::nullopt);

// Fractional h via effective ranks r_eff(r) = r_eff(r-1) + 1/authors(r):
// the largest r_eff(r) over ranks with r_eff(r) <= c(r), 0 if none qualifies.
double schreiber_hm(const AuthoredVector& av);

} // namespace hindex
