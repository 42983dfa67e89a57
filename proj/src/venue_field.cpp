#include "hindex/venue_field.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hindex/errors.hpp"

namespace hindex {

std::vector<int> effective_source_years(const JournalWindow& window) {
    if (!window.source_years.empty()) return window.source_years;
    return {window.target_year - 2, window.target_year - 1};
}

double impact_factor(const JournalWindow& window) {
    for (int y : effective_source_years(window)) {
        if (y >= window.target_year) {
            throw ValidationError(fmt::format("impact factor: source year {} is not before target year {}",
                                              y, window.target_year));
        }
    }
    if (window.n_articles <= 0) {
        throw UndefinedInputError("impact factor: no articles in the source window");
    }
    if (window.n_citations < 0) {
        throw ValidationError("impact factor: negative citation count");
    }
    return static_cast<double>(window.n_citations) / static_cast<double>(window.n_articles);
}

double relative_h(std::int64_t h, std::int64_t n_articles_in_year) {
    if (n_articles_in_year <= 0) {
        throw UndefinedInputError("relative h: no articles in the year");
    }
    return static_cast<double>(h) / static_cast<double>(n_articles_in_year);
}

double sri(std::int64_t h, std::int64_t n) {
    if (h < 1 || n < 2) {
        throw DomainError(fmt::format("strike rate index needs h >= 1 and N >= 2 (h={}, N={})", h, n));
    }
    return 10.0 * std::log(static_cast<double>(h)) / std::log(static_cast<double>(n));
}

double impact_index_hm(std::int64_t h, std::int64_t n, double beta) {
    if (n < 1) {
        throw DomainError(fmt::format("impact index needs N >= 1 (N={})", n));
    }
    return static_cast<double>(h) / std::pow(static_cast<double>(n), beta);
}

double field_normalization_factor(const FieldProfile& reference, const FieldProfile& field) {
    if (!(reference.chi > 0.0) || !(field.chi > 0.0)) {
        throw DomainError("field normalization: citations per paper must be positive");
    }
    return std::cbrt(std::pow(reference.chi / field.chi, 2.0));
}

double field_normalized_h(double h, const FieldProfile& reference, const FieldProfile& field) {
    return field_normalization_factor(reference, field) * h;
}

FieldProfile default_reference_field(double chi) {
    return FieldProfile{"physics", chi};
}

double theoretical_h_estimate(std::int64_t n_p, double chi, TheoreticalHReading reading) {
    if (n_p < 1 || !(chi > 0.0)) {
        throw DomainError(fmt::format("theoretical h needs N_p >= 1 and chi > 0 (N_p={}, chi={})", n_p, chi));
    }
    const double np = static_cast<double>(n_p);
    if (reading == TheoreticalHReading::dimensional) {
        return std::cbrt(np * chi * chi / 4.0);
    }
    return std::cbrt(np / 4.0 * std::cbrt(chi * chi));
}

std::vector<StatusResidual> research_status(const std::vector<CohortPoint>& cohort) {
    if (cohort.size() < 3) {
        throw DegenerateCohortError(
            fmt::format("research status needs at least 3 cohort points, got {}", cohort.size()));
    }
    for (const auto& p : cohort) {
        if (p.n_p < 0 || p.h < 0 || p.h > p.n_p) {
            throw ValidationError(fmt::format(
                "research status: '{}' has h={} outside [0, N_p={}]", p.entity, p.h, p.n_p));
        }
    }
    const double n = static_cast<double>(cohort.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& p : cohort) {
        mean_x += static_cast<double>(p.n_p);
        mean_y += static_cast<double>(p.h);
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : cohort) {
        const double dx = static_cast<double>(p.n_p) - mean_x;
        sxx += dx * dx;
        sxy += dx * (static_cast<double>(p.h) - mean_y);
    }
    if (sxx == 0.0) {
        throw DegenerateCohortError("research status: every cohort point has the same N_p");
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    std::vector<StatusResidual> out;
    out.reserve(cohort.size());
    for (const auto& p : cohort) {
        const double fitted = intercept + slope * static_cast<double>(p.n_p);
        out.push_back({p.entity, static_cast<double>(p.h) - fitted});
    }
    return out;
}

double vanraan_diagnostic(std::int64_t n_c) {
    if (n_c <= 0) return 0.0;
    return 0.42 * std::pow(static_cast<double>(n_c), 0.45);
}

} // namespace hindex
