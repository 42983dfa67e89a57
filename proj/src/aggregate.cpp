#include "hindex/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"

namespace hindex {

namespace {

void require_members(const Group& group, std::string_view what) {
    if (group.members.empty()) {
        throw UndefinedInputError(fmt::format("{} needs at least one group member", what));
    }
}

} // namespace

std::int64_t successive_h(const Group& group, const IndexConfig& config) {
    require_members(group, "successive h");
    std::vector<std::int64_t> hs;
    for (const auto& m : group.members) hs.push_back(h_index(citation_vector(m, config)));
    return h_index(CitationVector::from_counts(std::move(hs)));
}

std::int64_t group_hp(const Group& group) {
    require_members(group, "group h_p");
    std::vector<std::int64_t> np;
    for (const auto& m : group.members) np.push_back(totals(m).n_p);
    return h_index(CitationVector::from_counts(std::move(np)));
}

std::int64_t group_hc(const Group& group, const IndexConfig& config) {
    require_members(group, "group h_c");
    std::vector<std::int64_t> nc;
    for (const auto& m : group.members) nc.push_back(citation_vector(m, config).total());
    return h_index(CitationVector::from_counts(std::move(nc)));
}

double lotkaian_h(double t_sources, double alpha) {
    if (!(alpha > 1.0)) {
        throw DomainError(fmt::format("Lotkaian h needs alpha > 1 (alpha={})", alpha));
    }
    if (!(t_sources > 0.0)) {
        throw DomainError(fmt::format("Lotkaian h needs T > 0 (T={})", t_sources));
    }
    return std::pow(t_sources, 1.0 / alpha);
}

double dynamic_h(double t_sources, double alpha, double b, double t) {
    if (!(alpha > 1.0) || !(t_sources > 0.0)) {
        throw DomainError(fmt::format("dynamic h needs alpha > 1 and T > 0 (alpha={}, T={})", alpha,
                                      t_sources));
    }
    if (!(b > 0.0 && b < 1.0)) {
        throw DomainError(fmt::format("dynamic h needs an ageing rate in (0, 1) (b={})", b));
    }
    if (!(t >= 0.0)) {
        throw DomainError(fmt::format("dynamic h needs t >= 0 (t={})", t));
    }
    const double aged = std::pow(1.0 - std::pow(b, t), alpha - 1.0);
    return std::pow(aged * t_sources, 1.0 / alpha);
}

// ---------------------------------------------------------------------------

TailFunction::TailFunction(std::function<double(std::int64_t)> survival,
                           std::optional<std::int64_t> support_max)
    : survival_(std::move(survival)), support_max_(support_max) {}

TailFunction TailFunction::empirical(std::vector<std::int64_t> sample) {
    std::sort(sample.begin(), sample.end());
    const auto m = static_cast<double>(sample.size());
    const std::int64_t top = sample.empty() ? 0 : sample.back();
    auto survival = [sample = std::move(sample), m](std::int64_t k) {
        if (sample.empty()) return 0.0;
        const auto first = std::lower_bound(sample.begin(), sample.end(), k);
        return static_cast<double>(sample.end() - first) / m;
    };
    return TailFunction(std::move(survival), top);
}

TailFunction TailFunction::discrete_pareto(double exponent) {
    if (!(exponent > 0.0)) {
        throw DomainError(fmt::format("discrete Pareto tail needs a positive exponent ({})", exponent));
    }
    auto survival = [exponent](std::int64_t k) {
        if (k <= 1) return 1.0;
        return std::pow(static_cast<double>(k), -exponent);
    };
    return TailFunction(std::move(survival), std::nullopt);
}

double TailFunction::operator()(std::int64_t k) const {
    if (k < 0) return 1.0;
    if (support_max_ && k > *support_max_) return 0.0;
    return survival_(k);
}

std::optional<std::int64_t> characteristic_extreme(const TailFunction& tail, std::int64_t r,
                                                   std::int64_t n) {
    const double level = static_cast<double>(r) / static_cast<double>(n);
    auto reaches = [&](std::int64_t k) { return tail(k) >= level * (1.0 - 1e-12); };
    if (!reaches(0)) return std::nullopt;

    std::int64_t lo = 0; // reaches(lo) holds
    std::int64_t hi;     // reaches(hi) fails
    if (auto top = tail.support_max()) {
        if (reaches(*top)) return *top;
        hi = *top;
    } else {
        constexpr std::int64_t kCap = std::int64_t{1} << 62;
        hi = 1;
        while (reaches(hi)) {
            if (hi >= kCap) return kCap;
            lo = hi;
            hi *= 2;
        }
    }
    while (hi - lo > 1) {
        const auto mid = lo + (hi - lo) / 2;
        (reaches(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::int64_t glanzel_H(const TailFunction& tail, std::int64_t n) {
    if (n < 1) {
        throw DomainError(fmt::format("theoretical H needs a sample size n >= 1 (n={})", n));
    }
    // u_r is non-increasing in r, so the qualifying ranks form a prefix.
    std::int64_t H = 0;
    for (std::int64_t r = 1; r <= n; ++r) {
        const auto u = characteristic_extreme(tail, r, n);
        if (!u || *u < r) break;
        H = r;
    }
    return H;
}

// ---------------------------------------------------------------------------

void validate(const SimConfig& c) {
    auto fail = [](std::string what) { throw DomainError("simulation config: " + what); };
    if (c.careers < 1) fail("careers must be positive");
    if (c.career_years < 1) fail("career_years must be positive");
    if (!(c.pub_rate > 0.0)) fail("pub_rate must be positive");
    if (!(c.gamma_shape > 0.0) || !(c.gamma_rate > 0.0)) fail("gamma shape and rate must be positive");
    if (!(c.citation_rate_multiplier >= 0.0)) fail("citation rate multiplier must be non-negative");
    if (!(c.lotka_alpha > 1.0)) fail("lotka_alpha must exceed 1");
    if (!(c.ageing_b > 0.0 && c.ageing_b < 1.0)) fail("ageing_b must lie in (0, 1)");
}

namespace {

std::mt19937_64 career_engine(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

std::int64_t poisson(std::mt19937_64& engine, double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<std::int64_t>(mean)(engine);
}

CareerSummary summarize(int id, int years, const CitationRecord& record) {
    const auto v = citation_vector(record, IndexConfig{});
    CareerSummary s;
    s.career_id = id;
    s.years = years;
    s.n_p = static_cast<std::int64_t>(v.size());
    s.n_c = v.total();
    s.h = h_index(v);
    s.a = a_index(v);
    s.core_sum = h_core_sum(v);
    if (s.h > 0) {
        s.core_size = std::count_if(v.counts().begin(), v.counts().end(),
                                    [&](std::int64_t c) { return c >= s.h; });
    }
    return s;
}

} // namespace

Ensemble burrell_simulate(const SimConfig& config) {
    validate(config);
    Ensemble ensemble;
    for (int i = 0; i < config.careers; ++i) {
        auto engine = career_engine(config.seed, i);
        const int years = std::uniform_int_distribution<int>(1, config.career_years)(engine);
        std::gamma_distribution<double> latent_rate(config.gamma_shape, 1.0 / config.gamma_rate);

        CitationRecord record;
        record.entity = fmt::format("career-{:04}", i);
        for (int y = 0; y < years; ++y) {
            const auto n_pubs = poisson(engine, config.pub_rate);
            for (std::int64_t p = 0; p < n_pubs; ++p) {
                Publication pub;
                pub.id = fmt::format("c{}-y{}-{}", i, y, p);
                pub.year = config.start_year + y;
                const double rate = latent_rate(engine) * config.citation_rate_multiplier;
                std::vector<CitationEvent> events;
                for (int z = y; z < years; ++z) {
                    const auto k = poisson(engine, rate);
                    for (std::int64_t e = 0; e < k; ++e) {
                        events.push_back({config.start_year + z, {}});
                    }
                }
                pub.citation_count = static_cast<std::int64_t>(events.size());
                pub.citation_events = std::move(events);
                record.publications.push_back(std::move(pub));
            }
        }
        ensemble.summaries.push_back(summarize(i, years, record));
        ensemble.careers.push_back(std::move(record));
    }
    return ensemble;
}

std::string ensemble_csv(const Ensemble& ensemble) {
    std::string out = "career_id,years,n_p,n_c,h,a,core_size\n";
    for (const auto& s : ensemble.summaries) {
        out += fmt::format("{},{},{},{},{},{:.6f},{}\n", s.career_id, s.years, s.n_p, s.n_c, s.h, s.a,
                           s.core_size);
    }
    return out;
}

namespace {

// X = floor(U^(-1/(alpha-1))) has P(X >= k) = k^-(alpha-1): a Lotka law with
// exponent alpha on its frequency function.
std::int64_t lotka_draw(std::mt19937_64& engine, double alpha) {
    constexpr double kCap = 1e6;
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(engine);
    const double x = std::pow(1.0 - u, -1.0 / (alpha - 1.0));
    return static_cast<std::int64_t>(std::floor(std::min(x, kCap)));
}

} // namespace

LotkaGroup lotka_group_simulate(const SimConfig& config) {
    validate(config);
    LotkaGroup out;
    for (int i = 0; i < config.careers; ++i) {
        auto engine = career_engine(config.seed, i);
        CitationRecord member;
        member.entity = fmt::format("member-{:04}", i);
        const auto n_pubs = lotka_draw(engine, config.lotka_alpha);
        for (std::int64_t p = 0; p < n_pubs; ++p) {
            Publication pub;
            pub.id = fmt::format("m{}-{}", i, p);
            pub.year = config.start_year;
            pub.citation_count = lotka_draw(engine, config.lotka_alpha);
            member.publications.push_back(std::move(pub));
        }
        out.total_sources += n_pubs;
        out.group.members.push_back(std::move(member));
    }
    return out;
}

} // namespace hindex
