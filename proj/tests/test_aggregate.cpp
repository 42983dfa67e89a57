#include <cmath>
#include <random>

#include "doctest.h"

#include "hindex/aggregate.hpp"
#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"
#include "support.hpp"

using namespace hindex;
using doctest::Approx;

namespace {

// Member whose h-index is exactly k.
CitationRecord member_with_h(std::int64_t k) {
    return testing::counts_record(std::vector<std::int64_t>(k, k));
}

Group group_of(const std::vector<std::vector<std::int64_t>>& members) {
    Group g;
    for (const auto& m : members) g.members.push_back(testing::counts_record(m));
    return g;
}

} // namespace

TEST_CASE("successive_h") {
    Group g;
    for (auto k : {5, 4, 3, 3, 2}) g.members.push_back(member_with_h(k));
    CHECK(successive_h(g) == 3);

    for (std::int64_t k = 0; k <= 6; ++k) {
        for (std::size_t n = 1; n <= 6; ++n) {
            Group u;
            for (std::size_t i = 0; i < n; ++i) u.members.push_back(member_with_h(k));
            CHECK(successive_h(u) == std::min<std::int64_t>(k, static_cast<std::int64_t>(n)));
        }
    }
    CHECK_THROWS_AS(successive_h(Group{}), UndefinedInputError);
}

TEST_CASE("group h_p and h_c") {
    CHECK(group_hp(group_of({std::vector<std::int64_t>(30, 0), std::vector<std::int64_t>(20, 0),
                             std::vector<std::int64_t>(10, 0)})) == 3);
    CHECK(group_hc(group_of({{0, 0}, {0}})) == 0);
    CHECK(group_hc(group_of({{100}, {1}})) == 1);
    CHECK(group_hc(group_of({{100}, {2}})) == 2);
    CHECK_THROWS_AS(group_hp(Group{}), UndefinedInputError);
}

TEST_CASE("lotkaian_h and dynamic_h") {
    CHECK(lotkaian_h(100, 2) == Approx(10.0));
    CHECK(lotkaian_h(1, 3.7) == Approx(1.0));
    CHECK(lotkaian_h(1000, 2.5) == Approx(15.8489).epsilon(1e-5));
    CHECK_THROWS_AS(lotkaian_h(100, 1.0), DomainError);

    CHECK(dynamic_h(100, 2, 0.5, 0) == 0.0);
    CHECK(dynamic_h(100, 2, 0.5, 1) == Approx(std::sqrt(50.0)));
    for (double b : {0.1, 0.5, 0.9}) {
        CHECK(std::abs(dynamic_h(100, 2, b, 200) - lotkaian_h(100, 2)) < 1e-6);
    }
    CHECK_THROWS_AS(dynamic_h(100, 2, 1.0, 3), DomainError);
    CHECK_THROWS_AS(dynamic_h(100, 2, 0.5, -1), DomainError);
    CHECK_THROWS_AS(dynamic_h(100, 0.5, 0.5, 1), DomainError);
}

TEST_CASE("glanzel_H") {
    const std::vector<std::int64_t> a{35, 34, 33, 32, 31, 30, 29, 28, 28, 10};
    CHECK(glanzel_H(TailFunction::empirical(a), 10) == 10);

    const TailFunction degenerate([](std::int64_t k) { return k <= 0 ? 1.0 : 0.0; }, 0);
    CHECK(glanzel_H(degenerate, 50) == 0);

    CHECK(glanzel_H(TailFunction::discrete_pareto(2.0), 100) == 4);
    CHECK(characteristic_extreme(TailFunction::discrete_pareto(2.0), 4, 100) == 5);
    CHECK(characteristic_extreme(TailFunction::discrete_pareto(2.0), 1, 100) == 10);
    CHECK_THROWS_AS(glanzel_H(degenerate, 0), DomainError);
}

TEST_CASE("burrell_simulate") {
    SimConfig cfg;
    cfg.careers = 40;

    SUBCASE("deterministic for a seed") {
        const auto a = burrell_simulate(cfg);
        const auto b = burrell_simulate(cfg);
        CHECK(ensemble_csv(a) == ensemble_csv(b));
        REQUIRE(a.careers.size() == b.careers.size());
        for (std::size_t i = 0; i < a.careers.size(); ++i) {
            CHECK(serialize_record_json(a.careers[i]) == serialize_record_json(b.careers[i]));
        }
        cfg.seed = 43;
        CHECK(ensemble_csv(burrell_simulate(cfg)) != ensemble_csv(a));
    }
    SUBCASE("zero citation rate gives h = 0 everywhere") {
        cfg.citation_rate_multiplier = 0.0;
        for (const auto& s : burrell_simulate(cfg).summaries) CHECK(s.h == 0);
    }
    SUBCASE("summaries agree with the careers") {
        const auto e = burrell_simulate(cfg);
        for (std::size_t i = 0; i < e.careers.size(); ++i) {
            const auto v = citation_vector(e.careers[i], {});
            CHECK(e.summaries[i].h == h_index(v));
            CHECK(e.summaries[i].n_c == v.total());
            CHECK(e.summaries[i].years >= 1);
            CHECK(e.summaries[i].years <= cfg.career_years);
        }
        CHECK(ensemble_csv(e).rfind("career_id,years,n_p,n_c,h,a,core_size\n", 0) == 0);
    }
    SUBCASE("invalid configs") {
        cfg.careers = 0;
        CHECK_THROWS_AS(burrell_simulate(cfg), DomainError);
        cfg.careers = 5;
        cfg.ageing_b = 1.5;
        CHECK_THROWS_AS(burrell_simulate(cfg), DomainError);
    }
}

TEST_CASE("property: successive h bounds") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        Group g;
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        std::int64_t max_h = 0;
        for (int i = 0; i < n; ++i) {
            g.members.push_back(testing::counts_record(testing::random_counts(rng, 30, 60)));
            max_h = std::max(max_h, h_index(citation_vector(g.members.back(), {})));
        }
        const auto s = successive_h(g);
        CHECK(s <= n);
        CHECK(s <= max_h);
    }
}

TEST_CASE("property: dynamic h is non-decreasing in t") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const double T = std::uniform_real_distribution<double>(1.0, 1e5)(rng);
        const double alpha = std::uniform_real_distribution<double>(1.05, 4.0)(rng);
        const double b = std::uniform_real_distribution<double>(0.01, 0.95)(rng);
        double previous = 0.0;
        for (double t = 0.0; t <= 60.0; t += 0.5) {
            const double v = dynamic_h(T, alpha, b, t);
            CHECK(v >= previous - 1e-12);
            previous = v;
        }
        CHECK(previous <= lotkaian_h(T, alpha) + 1e-9);
    }
}

TEST_CASE("property: glanzel H on empirical tails equals h") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = testing::random_counts(rng);
        if (c.empty()) continue;
        CHECK(glanzel_H(TailFunction::empirical(c), static_cast<std::int64_t>(c.size())) ==
              h_index(CitationVector::from_counts(c)));
    }
}

TEST_CASE("property: Lotkaian groups order successive h <= h_p <= h_c") {
    int holds = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        SimConfig cfg;
        cfg.seed = 1000 + trial;
        cfg.careers = 50;
        cfg.lotka_alpha = 2.0 + 0.01 * trial;
        const auto lg = lotka_group_simulate(cfg);
        const auto s = successive_h(lg.group);
        const auto hp = group_hp(lg.group);
        const auto hc = group_hc(lg.group);
        if (s <= hp && hp <= hc) ++holds;
    }
    CHECK(holds >= 95);
}
