#include <cmath>
#include <random>

#include "doctest.h"

#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"
#include "hindex/temporal.hpp"
#include "support.hpp"

using namespace hindex;
using doctest::Approx;
using testing::counts_pub;
using testing::events_pub;

namespace {

std::vector<CitationEvent> events(int year, int n) {
    return std::vector<CitationEvent>(n, CitationEvent{year, {}});
}

IndexConfig params(double gamma, double delta, std::optional<int> now = std::nullopt) {
    IndexConfig c;
    c.gamma = gamma;
    c.delta = delta;
    c.now_year = now;
    return c;
}

std::int64_t plain_h(const CitationRecord& r) { return h_index(citation_vector(r, {})); }

} // namespace

TEST_CASE("contemporary_h") {
    CitationRecord r;
    r.publications = {counts_pub("a", 2020, 3), counts_pub("b", 2020, 2), counts_pub("c", 2020, 1)};
    const auto scores = contemporary_scores(r, params(4, 1));
    CHECK(scores.scores == std::vector<double>{12.0, 8.0, 4.0});
    CHECK(contemporary_h(r, params(4, 1)) == 3);
    CHECK(contemporary_h(testing::counts_record({0, 0, 0}), params(4, 1)) == 0);
    const auto a = testing::same_h("A");
    CHECK(contemporary_h(a, params(1, 0)) == plain_h(a));
}

TEST_CASE("trend_h") {
    SUBCASE("all events in now_year matches contemporary h of current-year counts") {
        CitationRecord ev;
        ev.publications = {events_pub("a", 2018, events(2020, 3)), events_pub("b", 2019, events(2020, 2)),
                           events_pub("c", 2020, events(2020, 1))};
        CitationRecord cur;
        cur.publications = {counts_pub("a", 2020, 3), counts_pub("b", 2020, 2), counts_pub("c", 2020, 1)};
        CHECK(trend_h(ev, params(4, 1)) == contemporary_h(cur, params(4, 1)));
    }
    SUBCASE("gamma 1, delta 0 equals plain h") {
        CitationRecord ev;
        ev.publications = {events_pub("a", 2010, events(2012, 4)), events_pub("b", 2011, events(2015, 3)),
                           events_pub("c", 2012, events(2013, 1))};
        CHECK(trend_h(ev, params(1, 0)) == plain_h(ev));
    }
    SUBCASE("five one-year-old events score 10") {
        CitationRecord ev;
        ev.publications = {events_pub("a", 2018, events(2019, 5))};
        const auto cfg = params(4, 1, 2020);
        CHECK(trend_scores(ev, cfg).scores.front() == Approx(10.0));
        CHECK(trend_h(ev, cfg) == 1);
    }
    SUBCASE("counts-only data is rejected") {
        CHECK_THROWS_AS(trend_h(testing::counts_record({3, 1}), {}), FidelityError);
    }
}

TEST_CASE("normalized_h_output") {
    CHECK(normalized_h_output(testing::same_h("A")) == Approx(1.0));
    CHECK(normalized_h_output(testing::three_factor("ACE")) == Approx(0.35));
    CHECK(normalized_h_output(testing::counts_record({1})) == Approx(1.0));
    CHECK_THROWS_AS(normalized_h_output(CitationRecord{}), UndefinedInputError);
}

TEST_CASE("ar_index") {
    const auto a_now = testing::counts_record({35, 34, 33, 32, 31, 30, 29, 28, 28, 10}, 2020);
    CHECK(ar_index(a_now, {}) == Approx(r_index(citation_vector(a_now, {}))));

    auto d = testing::same_h("D");
    for (auto& p : d.publications) p.year = 2017;
    CHECK(ar_index(d, params(4, 1, 2020)) == Approx(std::sqrt(340.0 / 4.0)));

    CHECK(ar_index(testing::counts_record({0, 0}), {}) == 0.0);
}

TEST_CASE("m_quotient") {
    auto r = testing::counts_record(std::vector<std::int64_t>(10, 10), 2011);
    CHECK(m_quotient(r, params(4, 1, 2020)) == Approx(1.0));
    auto big = testing::counts_record(std::vector<std::int64_t>(20, 20), 2011);
    CHECK(m_quotient(big, params(4, 1, 2020)) == Approx(2.0));
    CHECK(m_quotient(testing::counts_record({0}), {}) == 0.0);
    CHECK_THROWS_AS(m_quotient(CitationRecord{}, {}), UndefinedInputError);
}

TEST_CASE("h_sequence") {
    SUBCASE("single-year career") {
        const auto r = testing::counts_record({4, 4, 4, 1}, 2010);
        const auto s = h_sequence(r, {});
        CHECK(s.values == std::vector<std::int64_t>{3});
        CHECK(s.start_years == std::vector<int>{2010});
    }
    SUBCASE("two publications a year apart") {
        CitationRecord r;
        r.publications = {counts_pub("new", 2011, 5), counts_pub("old", 2010, 7)};
        const auto s = h_sequence(r, {});
        CHECK(s.values == std::vector<std::int64_t>{1, 2});
        CHECK(s.start_years == std::vector<int>{2011, 2010});
    }
    SUBCASE("full window equals plain h") {
        const auto r = testing::three_factor("ACF");
        CHECK(h_sequence(r, {}).values.back() == plain_h(r));
    }
    SUBCASE("through-last-year counting needs events and truncates") {
        CitationRecord r;
        r.publications = {events_pub("a", 2010, {{2010, {}}, {2011, {}}, {2013, {}}}),
                          events_pub("b", 2011, {{2011, {}}, {2011, {}}})};
        const auto s = h_sequence(r, {}, SequenceCitations::through_last_year);
        CHECK(s.values == std::vector<std::int64_t>{1, 2});
        const auto all = h_sequence(r, {}, SequenceCitations::recorded_totals);
        CHECK(all.values == std::vector<std::int64_t>{1, 2});
        CHECK_THROWS_AS(h_sequence(testing::counts_record({1}), {}, SequenceCitations::through_last_year),
                        FidelityError);
    }
    CHECK(h_sequence(CitationRecord{}, {}).values.empty());
}

TEST_CASE("h_matrix") {
    const auto one = testing::three_factor("BDF");
    const auto m1 = h_matrix({one}, {});
    REQUIRE(m1.rows.size() == 1);
    const auto seq = h_sequence(one, {});
    for (std::size_t i = 0; i < seq.values.size(); ++i) CHECK(m1.rows[0][i] == seq.values[i]);

    const auto m2 = h_matrix({one, one}, {});
    CHECK(m2.rows[0] == m2.rows[1]);

    CitationRecord short_career, long_career;
    short_career.entity = "short";
    long_career.entity = "long, with comma";
    for (int y = 0; y < 3; ++y) short_career.publications.push_back(counts_pub(fmt::format("s{}", y), 2000 + y, 3));
    for (int y = 0; y < 5; ++y) long_career.publications.push_back(counts_pub(fmt::format("l{}", y), 2000 + y, 3));
    const auto m = h_matrix({short_career, long_career}, {});
    CHECK(m.columns() == 5);
    CHECK(m.rows[0].size() == 5);
    CHECK(m.rows[0][2].has_value());
    CHECK_FALSE(m.rows[0][3].has_value());
    CHECK(m.rows[1][4].has_value());
    CHECK(h_matrix_csv(m) == "entity,w0,w1,w2,w3,w4\nshort,1,2,3,,\n\"long, with comma\",1,2,3,3,3\n");

    CHECK_THROWS_AS(h_matrix({}, {}), UndefinedInputError);
}

TEST_CASE("property: temporal identities on random event records") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = testing::random_event_record(rng);
        const auto h = plain_h(r);

        CHECK(trend_h(r, params(1, 0)) == h);
        CHECK(contemporary_h(r, params(1, 0)) == h);
        CHECK(contemporary_h(r, params(1, 1)) <= h);

        auto unit_age = r;
        for (auto& p : unit_age.publications) {
            p.year = 2020;
            for (auto& e : *p.citation_events) e.year = 2020;
        }
        CHECK(ar_index(unit_age, params(4, 1, 2020)) ==
              Approx(r_index(citation_vector(unit_age, {}))).epsilon(1e-12));

        const auto cfg = params(4, 1, 2020);
        int first = 2020;
        for (const auto& p : r.publications) first = std::min(first, p.year);
        CHECK(m_quotient(r, cfg) * (2020 - first + 1) == Approx(static_cast<double>(h)).epsilon(1e-12));

        double previous = ar_index(r, params(4, 1, 2020));
        for (int now = 2021; now <= 2024; ++now) {
            const double ar = ar_index(r, params(4, 1, now));
            CHECK(ar <= previous + 1e-12);
            previous = ar;
        }

        for (auto mode : {SequenceCitations::recorded_totals, SequenceCitations::through_last_year}) {
            const auto s = h_sequence(r, {}, mode);
            for (std::size_t i = 1; i < s.values.size(); ++i) CHECK(s.values[i] >= s.values[i - 1]);
        }
    }
}
