#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "repart/partition.hpp"
#include "test_util.hpp"

using namespace repart;

namespace {

// Independent oracle: p(n) by the pentagonal-number recurrence. Kept apart
// from the DP the library uses.
std::vector<std::uint64_t> pentagonal_counts(int n_max) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const std::int64_t g1 = static_cast<std::int64_t>(k) * (3 * k - 1) / 2;
            const std::int64_t g2 = static_cast<std::int64_t>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return {p.begin(), p.end()};
}

}  // namespace

TEST_CASE("construction validates parts") {
    CHECK(P({5, 3, 1}).sum() == 9);
    CHECK(P({5, 3, 1}).length() == 3);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(P({3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(P({0}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
}

TEST_CASE("enumeration golden set at n = 5") {
    const std::vector<std::vector<Part>> expected = {
        {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(parts_of(enumerate_partitions(5)) == expected);
}

TEST_CASE("the empty partition is the unique partition of 0") {
    const auto all = enumerate_partitions(0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
    CHECK(all[0].sum() == 0);
}

TEST_CASE("partition_count matches the pentagonal recurrence up to 60") {
    const auto oracle = pentagonal_counts(60);
    CHECK(oracle[5] == 7);
    CHECK(oracle[20] == 627);
    CHECK(oracle[50] == 204226);
    for (Part n = 0; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(partition_count(n) == oracle[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("enumeration is complete, valid and descending-lex ordered for n <= 30") {
    for (Part n = 0; n <= 30; ++n) {
        CAPTURE(n);
        std::uint64_t count = 0;
        std::vector<Part> prev;
        bool first = true;
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            ++count;
            Part sum = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                REQUIRE(parts[i] >= 1);
                if (i > 0) REQUIRE(parts[i - 1] >= parts[i]);
                sum += parts[i];
            }
            REQUIRE(sum == n);
            if (!first) REQUIRE(prev > parts);  // strict order implies distinctness
            prev = parts;
            first = false;
        });
        CHECK(count == partition_count(n));
    }
}

TEST_CASE("enumeration length at n = 20 equals 627") {
    CHECK(enumerate_partitions(20).size() == 627);
}

TEST_CASE("enumeration refuses out-of-range sizes") {
    CHECK_THROWS_AS(enumerate_partitions(61), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(P({2, 2, 1, 1}), 2) == 2);
    CHECK(multiplicity(P({1, 1, 1, 1, 1}), 1) == 5);
    CHECK(multiplicity(P({5}), 3) == 0);
    CHECK_THROWS_AS(multiplicity(P({5}), 0), std::invalid_argument);
    for (const auto& p : enumerate_partitions(10)) {
        Part total = 0;
        for (Part k = 1; k <= 10; ++k) total += k * multiplicity(p, k);
        CHECK(total == p.sum());
    }
}

TEST_CASE("statistics goldens") {
    CHECK(distinct_part_count(P({3, 1, 1})) == 2);
    CHECK(distinct_part_count(P({1, 1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK(distinct_part_count(P({3, 2, 1})) == 3);
    CHECK(consecutive_run_count(P({3, 2})) == 1);
    CHECK(consecutive_run_count(P({4, 1})) == 2);
    CHECK(consecutive_run_count(P({5})) == 1);
    CHECK(distinct_part_count(Partition{}) == 0);
    CHECK(consecutive_run_count(Partition{}) == 0);
}

TEST_CASE("statistics reproduce the odd/strict refinement at small n") {
    // Brute-force oracle, independent of the family predicates: histogram
    // odd-part partitions by distinct values and strict partitions by runs.
    for (Part n = 0; n <= 14; ++n) {
        CAPTURE(n);
        std::vector<std::uint64_t> by_kinds(20, 0), by_runs(20, 0);
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            const Partition p = Partition::unchecked(parts);
            const bool all_odd = std::all_of(parts.begin(), parts.end(),
                                             [](Part v) { return v % 2 == 1; });
            const bool strict = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
            if (all_odd) ++by_kinds[static_cast<std::size_t>(distinct_part_count(p))];
            if (strict) ++by_runs[static_cast<std::size_t>(consecutive_run_count(p))];
        });
        CHECK(by_kinds == by_runs);
        if (n == 5) {
            CHECK(by_kinds[1] == 2);
            CHECK(by_kinds[2] == 1);
        }
    }
}

TEST_CASE("conjugate goldens") {
    CHECK(conjugate(P({12, 10, 10, 9, 9, 9})) == P({6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 1, 1}));
    CHECK(conjugate(P({7, 6, 6, 3, 3, 3})) == P({6, 6, 6, 3, 3, 3, 1}));
    CHECK(conjugate(P({2, 1, 1})) == P({3, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugation is a size-preserving involution for n <= 25") {
    for (Part n = 0; n <= 25; ++n) {
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            const Partition p = Partition::unchecked(parts);
            const Partition t = conjugate(p);
            REQUIRE(t.sum() == p.sum());
            REQUIRE(conjugate(t) == p);
        });
    }
}

TEST_CASE("quot_rem goldens and reconstruction") {
    CHECK(quot_rem(15, 6) == QuotRem{2, 3});
    CHECK(quot_rem(9, 6) == QuotRem{1, 3});
    CHECK(quot_rem(4, 4) == QuotRem{1, 0});
    CHECK_THROWS_AS(quot_rem(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(quot_rem(3, 0), std::invalid_argument);
    for (const auto& p : enumerate_partitions(12)) {
        for (Part r = 1; r <= 10; ++r) {
            for (Part part : p.parts()) {
                const auto qr = quot_rem(part, r);
                REQUIRE(qr.remainder >= 0);
                REQUIRE(qr.remainder < r);
                REQUIRE(r * qr.quotient + qr.remainder == part);
            }
        }
    }
}

TEST_CASE("statistic bounds: 1 <= runs <= kinds <= length for nonempty partitions") {
    for (Part n = 1; n <= 18; ++n) {
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            const Partition p = Partition::unchecked(parts);
            const Part s = consecutive_run_count(p);
            const Part k = distinct_part_count(p);
            REQUIRE(1 <= s);
            REQUIRE(s <= k);
            REQUIRE(k <= static_cast<Part>(p.length()));
        });
    }
}

TEST_CASE("canonical text form") {
    CHECK(to_text(P({15, 9, 7, 3, 1})) == "15,9,7,3,1");
    CHECK(to_text(Partition{}) == "");
    CHECK(parse_partition("15,9,7,3,1") == P({15, 9, 7, 3, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("15, 9, 7") == P({15, 9, 7}));
    CHECK_THROWS_AS(parse_partition("3,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    for (const auto& p : enumerate_partitions(9)) {
        CHECK(parse_partition(to_text(p)) == p);
    }
}
