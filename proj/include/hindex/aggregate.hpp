#pragma once

// Group-level indices and theoretical models: successive h, Egghe-Rao h_p and
// h_c, Lotkaian and dynamic h, Glanzel's extreme-value H, and a seeded
// Poisson-gamma career simulator.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hindex/record.hpp"

namespace hindex {

struct Group {
    std::vector<CitationRecord> members;
};

// h of the members' h-indices.
std::int64_t successive_h(const Group& group, const IndexConfig& config = {});
// h of the members' publication counts / citation totals.
std::int64_t group_hp(const Group& group);
std::int64_t group_hc(const Group& group, const IndexConfig& config = {});

// T^(1/alpha); alpha must exceed 1.
double lotkaian_h(double t_sources, double alpha);

// [(1 - b^t)^(alpha-1) T]^(1/alpha): 0 at t = 0, tends to lotkaian_h as t grows.
double dynamic_h(double t_sources, double alpha, double b, double t);

// Survival function G(k) = P(X >= k) over non-negative integer thresholds.
class TailFunction {
public:
    // `support_max`: G(k) = 0 for every k above it; nullopt for unbounded.
    TailFunction(std::function<double(std::int64_t)> survival,
                 std::optional<std::int64_t> support_max);

    // Share of the sample with at least k citations.
    static TailFunction empirical(std::vector<std::int64_t> sample);
    // Discrete Pareto G(k) = k^-exponent for k >= 1, G(0) = 1. The Price
    // distribution is the special case with the exponent it implies.
    static TailFunction discrete_pareto(double exponent);

    double operator()(std::int64_t k) const;
    std::optional<std::int64_t> support_max() const { return support_max_; }

private:
    std::function<double(std::int64_t)> survival_;
    std::optional<std::int64_t> support_max_;
};

// u_r = max{k : G(k) >= r/n}; nullopt when even G(0) < r/n.
std::optional<std::int64_t> characteristic_extreme(const TailFunction& tail, std::int64_t r,
                                                   std::int64_t n);

// H = max{r in 1..n : u_r >= r}, 0 if none.
std::int64_t glanzel_H(const TailFunction& tail, std::int64_t n);

struct SimConfig {
    std::uint64_t seed = 42;
    int careers = 200;
    // Each career lasts a uniformly drawn 1..career_years years.
    int career_years = 30;
    int start_year = 2000;
    double pub_rate = 2.0;
    double gamma_shape = 2.0;
    double gamma_rate = 1.0;
    // Scales every latent citation rate; 0 switches citations off.
    double citation_rate_multiplier = 1.0;
    double lotka_alpha = 2.0;
    double ageing_b = 0.5;
};

void validate(const SimConfig& config);

struct CareerSummary {
    int career_id = 0;
    int years = 0;
    std::int64_t n_p = 0;
    std::int64_t n_c = 0;
    std::int64_t h = 0;
    double a = 0.0;
    std::int64_t core_size = 0;
    std::int64_t core_sum = 0;
};

struct Ensemble {
    std::vector<CitationRecord> careers;
    std::vector<CareerSummary> summaries;
};

// Poisson publications per year, gamma-distributed latent citation rate per
// publication, Poisson citations for every year from publication to career
// end. Career i draws from its own engine seeded by (seed, i).
Ensemble burrell_simulate(const SimConfig& config);

// CSV: career_id,years,n_p,n_c,h,a,core_size
std::string ensemble_csv(const Ensemble& ensemble);

struct LotkaGroup {
    Group group;
    std::int64_t total_sources = 0; // publications across members
};

// Members' publication counts and every publication's citation count follow
// a discrete Pareto law with exponent config.lotka_alpha (support >= 1).
// Uses config.careers as the member count.
LotkaGroup lotka_group_simulate(const SimConfig& config);

} // namespace hindex
