#include <cmath>
#include <random>

#include "doctest.h"

#include "hindex/coauthor.hpp"
#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"
#include "support.hpp"

using namespace hindex;
using doctest::Approx;

namespace {

AuthoredVector av(const std::vector<std::int64_t>& counts, const std::vector<int>& authors) {
    std::vector<AuthoredEntry> e;
    for (std::size_t i = 0; i < counts.size(); ++i) e.push_back({counts[i], authors[i]});
    return AuthoredVector::from_entries(std::move(e));
}

AuthoredVector single_authored(const std::vector<std::int64_t>& counts) {
    return av(counts, std::vector<int>(counts.size(), 1));
}

} // namespace

TEST_CASE("hi_index") {
    const auto solo = single_authored({9, 7, 5, 4, 4, 1});
    CHECK(hi_index(solo, CoreCenter::mean) == Approx(4.0));
    CHECK(hi_index(solo, CoreCenter::median) == Approx(4.0));
    CHECK(hi_index(av({9, 8, 7, 6}, {2, 2, 2, 2}), CoreCenter::mean) == Approx(2.0));
    const auto skew = av({9, 8, 7, 6}, {10, 1, 1, 1});
    CHECK(hi_index(skew, CoreCenter::mean) == Approx(4.0 / 3.25));
    CHECK(hi_index(skew, CoreCenter::median) == Approx(4.0));
    CHECK(hi_index(single_authored({0, 0}), CoreCenter::mean) == 0.0);
    CHECK(hi_index(av({5, 5, 5, 5}, {1, 2, 3, 4}), CoreCenter::median) == Approx(4.0 / 2.5));
}

TEST_CASE("pure_h") {
    CHECK(pure_h(single_authored({9, 7, 5, 4, 4, 1})) == Approx(4.0));
    CHECK(pure_h(av({9, 8, 7, 6}, {4, 4, 4, 4})) == Approx(2.0));
    CHECK(pure_h(av({9, 8, 7, 6}, {10, 1, 1, 1})) == Approx(4.0 / std::sqrt(3.25)));
    CHECK(pure_h(single_authored({})) == 0.0);

    SUBCASE("score override") {
        const auto v = av({9, 8, 7, 6}, {2, 2, 2, 2});
        const std::vector<double> first_author{1.0, 1.0, 1.0, 1.0};
        CHECK(pure_h(v, std::span<const double>(first_author)) == Approx(4.0));
        const std::vector<double> short_scores{1.0};
        CHECK_THROWS(pure_h(v, std::span<const double>(short_scores)));
    }
}

TEST_CASE("schreiber_hm") {
    CHECK(schreiber_hm(single_authored({9, 7, 5, 4, 4, 1})) == Approx(4.0));
    CHECK(schreiber_hm(av({6, 5, 4, 3}, {2, 1, 2, 1})) == Approx(3.0));
    CHECK(schreiber_hm(av({2, 1}, {3, 3})) == Approx(2.0 / 3.0));
    CHECK(schreiber_hm(single_authored({0})) == 0.0);
}

TEST_CASE("schreiber_hm can drop when an increase re-ranks papers") {
    CHECK(schreiber_hm(av({1, 1}, {1, 2})) == Approx(1.0));
    CHECK(schreiber_hm(av({1, 2}, {1, 2})) == Approx(0.5));
}

TEST_CASE("author counts below one are rejected") {
    CHECK_THROWS_AS(av({3}, {0}), DomainError);
}

TEST_CASE("authored_vector follows the record's author counts") {
    CitationRecord r;
    r.publications = {testing::counts_pub("a", 2000, 5, 3), testing::counts_pub("b", 2000, 9, 1)};
    const auto v = authored_vector(r, {});
    REQUIRE(v.size() == 2);
    CHECK(v.entries()[0].citations == 9);
    CHECK(v.entries()[0].authors == 1);
    CHECK(v.entries()[1].authors == 3);
}

TEST_CASE("property: co-authorship indices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto counts = testing::random_counts(rng, 30, 80);
        std::vector<int> authors(counts.size());
        for (auto& a : authors) a = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto v = av(counts, authors);
        const auto h = static_cast<double>(h_index(v.citations()));

        CHECK(schreiber_hm(v) <= h + 1e-12);
        CHECK(pure_h(v) >= hi_index(v, CoreCenter::mean) - 1e-12);

        const auto solo = single_authored(counts);
        CHECK(hi_index(solo, CoreCenter::mean) == Approx(h));
        CHECK(hi_index(solo, CoreCenter::median) == Approx(h));
        CHECK(pure_h(solo) == Approx(h));
        CHECK(schreiber_hm(solo) == Approx(h));

        // Monotone in any count whose increase keeps the rank order.
        if (!counts.empty()) {
            std::vector<AuthoredEntry> ranked(v.entries().begin(), v.entries().end());
            const auto i = std::uniform_int_distribution<std::size_t>(0, ranked.size() - 1)(rng);
            if (i == 0 || ranked[i - 1].citations > ranked[i].citations) {
                ranked[i].citations += 1;
                CHECK(schreiber_hm(AuthoredVector::from_entries(ranked)) >= schreiber_hm(v) - 1e-12);
            }
        }
    }
}
