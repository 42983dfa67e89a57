#include "hindex/core_indices.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include "hindex/errors.hpp"

namespace hindex {

namespace mp = boost::multiprecision;

std::int64_t h_index(const CitationVector& v) {
    std::int64_t h = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        if (v.at_rank(j) < static_cast<std::int64_t>(j)) break;
        h = static_cast<std::int64_t>(j);
    }
    return h;
}

std::int64_t h_core_sum(const CitationVector& v) {
    const auto h = h_index(v);
    std::int64_t sum = 0;
    for (std::int64_t j = 1; j <= h; ++j) sum += v.at_rank(static_cast<std::size_t>(j));
    return sum;
}

std::int64_t g_index(const CitationVector& v, GConvention convention) {
    // S(g) - g^2 is concave in g, so the qualifying set is a prefix.
    const auto n = static_cast<std::int64_t>(v.size());
    const auto total = v.total();
    const std::int64_t limit =
        convention == GConvention::bounded ? n : static_cast<std::int64_t>(std::sqrt(static_cast<long double>(total)));
    std::int64_t g = 0;
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= limit + 1; ++k) {
        if (k <= n) sum += v.at_rank(static_cast<std::size_t>(k));
        if (k > limit) {
            // guard against sqrt rounding down one short
            if (convention == GConvention::unbounded && sum >= k * k) g = k;
            break;
        }
        if (sum < k * k) break;
        g = k;
    }
    return g;
}

double a_index(const CitationVector& v) {
    const auto h = h_index(v);
    return h == 0 ? 0.0 : static_cast<double>(h_core_sum(v)) / static_cast<double>(h);
}

double r_index(const CitationVector& v) {
    return std::sqrt(static_cast<double>(h_core_sum(v)));
}

double hw_index(const CitationVector& v) {
    const auto h = h_index(v);
    if (h == 0) return 0.0;
    std::int64_t cumulative = 0;
    std::int64_t sum_to_r0 = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        cumulative += v.at_rank(j);
        // r_w(j) <= c_j  <=>  cumulative <= h * c_j
        if (cumulative <= h * v.at_rank(j)) sum_to_r0 = cumulative;
    }
    return std::sqrt(static_cast<double>(sum_to_r0));
}

std::int64_t h2_index(const CitationVector& v) {
    std::int64_t k = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        if (v.at_rank(j) < jj * jj) break;
        k = jj;
    }
    return k;
}

std::int64_t w_index(const CitationVector& v) {
    std::int64_t w = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        if (v.at_rank(j) < 10 * jj) break;
        w = jj;
    }
    return w;
}

std::int64_t maxprod(const CitationVector& v) {
    std::int64_t best = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        best = std::max(best, static_cast<std::int64_t>(j) * v.at_rank(j));
    }
    return best;
}

namespace {

// Margin used to decide when a floating-point comparison is too close to call
// and the exact path has to settle it.
constexpr long double kCloseCall = 1e-9L;

bool harmonic_reaches_exact(const CitationVector& v, std::size_t f) {
    mp::cpp_rational sum = 0;
    for (std::size_t i = 1; i <= f; ++i) sum += mp::cpp_rational(1, v.at_rank(i));
    return sum <= 1;
}

bool geometric_reaches_exact(const CitationVector& v, std::size_t t) {
    mp::cpp_int product = 1;
    for (std::size_t i = 1; i <= t; ++i) product *= v.at_rank(i);
    return product >= mp::pow(mp::cpp_int(t), static_cast<unsigned>(t));
}

} // namespace

std::int64_t f_index(const CitationVector& v) {
    // Harmonic mean of the top f >= f  <=>  sum_{i<=f} 1/c_i <= 1.
    std::int64_t f = 0;
    long double reciprocal_sum = 0.0L;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        const auto c = v.at_rank(j);
        if (c <= 0) break;
        reciprocal_sum += 1.0L / static_cast<long double>(c);
        bool reaches;
        if (std::fabs(reciprocal_sum - 1.0L) <= kCloseCall) {
            reaches = harmonic_reaches_exact(v, j);
        } else {
            reaches = reciprocal_sum < 1.0L;
        }
        if (!reaches) break;
        f = static_cast<std::int64_t>(j);
    }
    return f;
}

std::int64_t t_index(const CitationVector& v) {
    // Geometric mean of the top t >= t  <=>  sum_{i<=t} ln c_i >= t ln t.
    std::int64_t t = 0;
    long double log_sum = 0.0L;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        const auto c = v.at_rank(j);
        if (c <= 0) break;
        log_sum += std::log(static_cast<long double>(c));
        const long double target = static_cast<long double>(j) * std::log(static_cast<long double>(j));
        bool reaches;
        if (std::fabs(log_sum - target) <= kCloseCall * std::max(1.0L, target)) {
            reaches = geometric_reaches_exact(v, j);
        } else {
            reaches = log_sum > target;
        }
        if (!reaches) break;
        t = static_cast<std::int64_t>(j);
    }
    return t;
}

double rm_index(const CitationVector& v) {
    const auto h = h_index(v);
    double sum = 0.0;
    for (std::int64_t j = 1; j <= h; ++j) {
        sum += std::sqrt(static_cast<double>(v.at_rank(static_cast<std::size_t>(j))));
    }
    return std::sqrt(sum);
}

double h_core_cv(const CitationVector& v) {
    const auto h = h_index(v);
    if (h <= 1) return 0.0;
    const double mean = static_cast<double>(h_core_sum(v)) / static_cast<double>(h);
    double ss = 0.0;
    for (std::int64_t j = 1; j <= h; ++j) {
        const double d = static_cast<double>(v.at_rank(static_cast<std::size_t>(j))) - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(h - 1)) / mean;
}

double rmcv_index(const CitationVector& v) {
    return rm_index(v) - h_core_cv(v);
}

double h_alpha_predict(std::int64_t h, std::int64_t n_c, double alpha) {
    const double radicand =
        static_cast<double>(h) * static_cast<double>(h) + alpha * static_cast<double>(n_c);
    if (radicand < 0.0) {
        throw DomainError(fmt::format(
            "predictive h: h^2 + alpha*N_c = {} is negative (h={}, N_c={}, alpha={})", radicand, h,
            n_c, alpha));
    }
    return std::sqrt(radicand);
}

CoreIndexReport core_indices(const CitationVector& v, const IndexConfig& config) {
    CoreIndexReport r;
    r.h = h_index(v);
    r.g = g_index(v, config.g_convention);
    r.a = a_index(v);
    r.r = r_index(v);
    r.h_w = hw_index(v);
    r.h2 = h2_index(v);
    r.w = w_index(v);
    r.maxprod = maxprod(v);
    r.f = f_index(v);
    r.t = t_index(v);
    r.r_m = rm_index(v);
    r.h_core_cv = h_core_cv(v);
    r.r_m_cv = r.r_m - r.h_core_cv;
    r.core_sum = h_core_sum(v);
    try {
        r.h_alpha = h_alpha_predict(r.h, v.total(), config.alpha_predictive);
    } catch (const DomainError&) {
        r.h_alpha = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

std::int64_t rank_threshold(std::span<const double> scores, double rel_tol) {
    std::int64_t h = 0;
    for (std::size_t j = 1; j <= scores.size(); ++j) {
        const double rank = static_cast<double>(j);
        if (scores[j - 1] < rank * (1.0 - rel_tol)) break;
        h = static_cast<std::int64_t>(j);
    }
    return h;
}

} // namespace hindex
