#pragma once

// Brute-force definitional scans used as test oracles. Each one re-sorts its
// own copy, tries every candidate value and applies the defining predicate
// verbatim with exact arithmetic. Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Counts = std::vector<std::int64_t>;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline Counts sorted_desc(Counts c) {
    std::sort(c.begin(), c.end(), std::greater<>());
    return c;
}

inline std::int64_t count_at_least(const Counts& c, std::int64_t threshold) {
    return std::count_if(c.begin(), c.end(), [&](std::int64_t x) { return x >= threshold; });
}

// max{j : at least j papers have >= j citations}
inline std::int64_t h(const Counts& c) {
    std::int64_t best = 0;
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(c.size()); ++j) {
        if (count_at_least(c, j) >= j) best = j;
    }
    return best;
}

// max{g : top g papers (zero padded when unbounded) hold >= g^2 citations}
inline std::int64_t g(const Counts& raw, bool bounded) {
    const auto c = sorted_desc(raw);
    std::int64_t total = 0;
    for (auto x : c) total += x;
    const std::int64_t limit = bounded ? static_cast<std::int64_t>(c.size())
                                       : static_cast<std::int64_t>(c.size()) + total + 1;
    std::int64_t best = 0;
    for (std::int64_t cand = 1; cand <= limit; ++cand) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < cand && i < static_cast<std::int64_t>(c.size()); ++i) sum += c[i];
        if (sum >= cand * cand) best = cand;
    }
    return best;
}

// max{k : at least k papers have >= k^2 citations}
inline std::int64_t h2(const Counts& c) {
    std::int64_t best = 0;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(c.size()); ++k) {
        if (count_at_least(c, k * k) >= k) best = k;
    }
    return best;
}

// max{w : at least w papers have >= 10w citations}
inline std::int64_t w(const Counts& c) {
    std::int64_t best = 0;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(c.size()); ++k) {
        if (count_at_least(c, 10 * k) >= k) best = k;
    }
    return best;
}

inline std::int64_t maxprod(const Counts& raw) {
    const auto c = sorted_desc(raw);
    std::int64_t best = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        best = std::max(best, static_cast<std::int64_t>(i + 1) * c[i]);
    }
    return best;
}

// max{j : harmonic mean of the top j counts >= j}
inline std::int64_t f(const Counts& raw) {
    const auto c = sorted_desc(raw);
    std::int64_t best = 0;
    for (std::size_t j = 1; j <= c.size(); ++j) {
        bool has_zero = false;
        cpp_rational inv_sum = 0;
        for (std::size_t i = 0; i < j; ++i) {
            if (c[i] == 0) {
                has_zero = true;
                break;
            }
            inv_sum += cpp_rational(1, c[i]);
        }
        if (has_zero) continue;
        const cpp_rational mean = cpp_rational(static_cast<long long>(j)) / inv_sum;
        if (mean >= static_cast<long long>(j)) best = static_cast<std::int64_t>(j);
    }
    return best;
}

// max{j : geometric mean of the top j counts >= j}, i.e. product >= j^j
inline std::int64_t t(const Counts& raw) {
    const auto c = sorted_desc(raw);
    std::int64_t best = 0;
    for (std::size_t j = 1; j <= c.size(); ++j) {
        cpp_int product = 1;
        for (std::size_t i = 0; i < j; ++i) product *= c[i];
        cpp_int power = 1;
        for (std::size_t i = 0; i < j; ++i) power *= static_cast<long long>(j);
        if (product >= power) best = static_cast<std::int64_t>(j);
    }
    return best;
}

inline std::int64_t core_sum(const Counts& raw) {
    const auto c = sorted_desc(raw);
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < h(raw); ++i) s += c[i];
    return s;
}

} // namespace oracle
