#pragma once

// Order-statistic indices computed from one descending citation vector.
// All functions return 0 on an empty vector; forms that divide by h return 0
// when h = 0.

#include <cstdint>
#include <span>

#include "hindex/record.hpp"

namespace hindex {

struct CoreIndexReport {
    std::int64_t h = 0;
    std::int64_t g = 0;
    double a = 0.0;
    double r = 0.0;
    double h_w = 0.0;
    std::int64_t h2 = 0;
    std::int64_t w = 0;
    std::int64_t maxprod = 0;
    std::int64_t f = 0;
    std::int64_t t = 0;
    double r_m = 0.0;
    double h_core_cv = 0.0;
    double r_m_cv = 0.0;
    double h_alpha = 0.0;
    // Citations inside the h-core.
    std::int64_t core_sum = 0;
};

// Largest j with v[j] >= j (1-based).
std::int64_t h_index(const CitationVector& v);

// Largest g whose top-g counts sum to at least g^2. Bounded caps g at the
// vector length; unbounded pads the tail with zero-cited ranks.
std::int64_t g_index(const CitationVector& v, GConvention convention);

// Mean citations in the h-core.
double a_index(const CitationVector& v);

// Square root of the h-core citation sum.
double r_index(const CitationVector& v);

// Citation-weighted h: weighted ranks are cumulative counts divided by h; the
// result is the root of the citations up to the last rank whose weighted rank
// does not exceed its count.
double hw_index(const CitationVector& v);

// Largest k with v[k] >= k^2.
std::int64_t h2_index(const CitationVector& v);

// Largest w with v[w] >= 10 w.
std::int64_t w_index(const CitationVector& v);

// max_i i * v[i].
std::int64_t maxprod(const CitationVector& v);

// Largest f whose top-f harmonic mean is >= f. Comparisons are exact.
std::int64_t f_index(const CitationVector& v);

// Largest t whose top-t geometric mean is >= t. Comparisons are exact.
std::int64_t t_index(const CitationVector& v);

// sqrt(sum over the h-core of sqrt(count)).
double rm_index(const CitationVector& v);

// Sample coefficient of variation (divisor h - 1) of the h-core; 0 when h <= 1.
double h_core_cv(const CitationVector& v);

// rm_index - h_core_cv.
double rmcv_index(const CitationVector& v);

// Predictive sqrt(h^2 + alpha * n_c). Throws DomainError on a negative radicand.
double h_alpha_predict(std::int64_t h, std::int64_t n_c, double alpha);

std::int64_t h_core_sum(const CitationVector& v);

// Computes every index above. h_alpha uses the vector total as n_c and is set
// to NaN when its radicand is negative.
CoreIndexReport core_indices(const CitationVector& v, const IndexConfig& config);

// Rank scan over real-valued scores sorted descending: largest j with the
// j-th score >= j. Scores within `rel_tol` of the threshold count as reaching
// it, which absorbs rounding in products like 3 * (1/3).
std::int64_t rank_threshold(std::span<const double> scores, double rel_tol = 1e-12);

} // namespace hindex
