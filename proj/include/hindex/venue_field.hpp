#pragma once

// Journal and field level indicators.

#include <cstdint>
#include <string>
#include <vector>

namespace hindex {

struct JournalWindow {
    int target_year = 0;
    std::vector<int> source_years; // empty means the two years before target_year
    std::int64_t n_articles = 0;   // published in the source years
    std::int64_t n_citations = 0;  // received in target_year by those articles
};

struct FieldProfile {
    std::string name;
    double chi = 1.0; // mean citations per paper in the field
};

struct CohortPoint {
    std::string entity;
    std::int64_t n_p = 0;
    std::int64_t h = 0;
};

struct StatusResidual {
    std::string entity;
    double residual = 0.0;
};

enum class TheoreticalHReading {
    dimensional, // (N_p * chi^2 / 4)^(1/3)
    literal,     // ((N_p / 4) * chi^(2/3))^(1/3)
};

std::vector<int> effective_source_years(const JournalWindow& window);

// n_citations / n_articles. Throws UndefinedInputError when n_articles = 0 and
// ValidationError when a source year is not before the target year.
double impact_factor(const JournalWindow& window);

// h / articles published in the year.
double relative_h(std::int64_t h, std::int64_t n_articles_in_year);

// Strike rate index 10 log(h) / log(n). Requires h >= 1 and n >= 2.
double sri(std::int64_t h, std::int64_t n);

// Molinari impact index h / n^beta.
double impact_index_hm(std::int64_t h, std::int64_t n, double beta);

// (reference.chi / field.chi)^(2/3) * h.
double field_normalization_factor(const FieldProfile& reference, const FieldProfile& field);
double field_normalized_h(double h, const FieldProfile& reference, const FieldProfile& field);

// Reference profile used when a caller does not pick one.
FieldProfile default_reference_field(double chi);

// Zipf-model theoretical h from output size and citations per paper.
double theoretical_h_estimate(std::int64_t n_p, double chi,
                              TheoreticalHReading reading = TheoreticalHReading::dimensional);

// Residuals of h from the OLS line h = b0 + b1 * n_p, in input order.
std::vector<StatusResidual> research_status(const std::vector<CohortPoint>& cohort);

// Chemistry-calibrated 0.42 * n_c^0.45; a diagnostic, never a target.
double vanraan_diagnostic(std::int64_t n_c);

} // namespace hindex
