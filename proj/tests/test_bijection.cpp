#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "repart/bijection.hpp"
#include "test_util.hpp"

using namespace repart;

namespace {

Tableau T(std::vector<std::vector<Part>> rows) { return Tableau(std::move(rows)); }

}  // namespace

TEST_CASE("tableau construction and rendering") {
    CHECK(T({{6, 6, 3}, {6, 3}}).cell_sum() == 24);
    CHECK(T({{6, 6, 3}, {6, 3}}).render() == "6 6 3\n6 3");
    CHECK(Tableau{}.render() == "");
    CHECK_THROWS_AS(T({{}}), std::invalid_argument);
    CHECK_THROWS_AS(T({{0}}), std::invalid_argument);
}

TEST_CASE("quotient/remainder tableau goldens") {
    CHECK(build_tableau(P({15, 9, 7, 3, 1}), 6) ==
          T({{6, 6, 3}, {6, 3}, {6, 1}, {3}, {1}}));
    CHECK(build_tableau(P({1}), 6) == T({{1}}));
    CHECK(build_tableau(P({8, 1, 1}), 3) == T({{3, 3, 2}, {1}, {1}}));
    CHECK(build_tableau(P({12}), 6) == T({{6, 6}}));  // parts divisible by r keep all-r rows
    CHECK(build_tableau(Partition{}, 6).empty());
}

TEST_CASE("single hook strips") {
    auto s1 = strip_hook(T({{6, 6, 3}, {6, 3}, {6, 1}, {3}, {1}}));
    CHECK(s1.part == 7);
    CHECK(s1.rest == T({{5, 5, 2}, {5, 3}, {5, 1}, {2}}));

    auto s2 = strip_hook(T({{1, 1}, {1, 3}, {1, 1}}));
    CHECK(s2.part == 4);
    CHECK(s2.rest == T({{3}, {1}}));

    auto s3 = strip_hook(T({{1}}));
    CHECK(s3.part == 1);
    CHECK(s3.rest.empty());

    CHECK_THROWS_AS(strip_hook(Tableau{}), std::invalid_argument);
}

TEST_CASE("forward chain reproduces every intermediate tableau") {
    const auto trace = forward_trace(P({15, 9, 7, 3, 1}), 6);
    CHECK(trace.initial == T({{6, 6, 3}, {6, 3}, {6, 1}, {3}, {1}}));
    CHECK(trace.stripped == std::vector<Part>{7, 6, 6, 4, 4, 4, 2, 1, 1});
    CHECK(trace.weakly_decreasing);
    const std::vector<Tableau> expected_steps = {
        T({{5, 5, 2}, {5, 3}, {5, 1}, {2}}),
        T({{4, 4, 1}, {4, 3}, {4, 1}, {1}}),
        T({{3, 3}, {3, 3}, {3, 1}}),
        T({{2, 2}, {2, 3}, {2, 1}}),
        T({{1, 1}, {1, 3}, {1, 1}}),
        T({{3}, {1}}),
        T({{2}}),
        T({{1}}),
        Tableau{},
    };
    REQUIRE(trace.steps.size() == expected_steps.size());
    for (std::size_t i = 0; i < expected_steps.size(); ++i) {
        CAPTURE(i);
        CHECK(trace.steps[i].after == expected_steps[i]);
    }
}

TEST_CASE("forward map goldens") {
    CHECK(forward_map(P({15, 9, 7, 3, 1}), 6) == P({7, 6, 6, 4, 4, 4, 2, 1, 1}));
    CHECK(forward_map(P({1}), 6) == P({1}));
    CHECK(forward_map(Partition{}, 6).empty());
}

TEST_CASE("strip accounting: every strip removes exactly the recorded part") {
    for (Part n = 0; n <= 12; ++n) {
        for (Part r = 2; r <= 6; ++r) {
            for_each_partition(n, [&](const std::vector<Part>& parts) {
                const Partition p = Partition::unchecked(parts);
                Tableau t = build_tableau(p, r);
                Part remaining = t.cell_sum();
                REQUIRE(remaining == n);
                while (!t.empty()) {
                    const auto [part, rest] = strip_hook(t);
                    REQUIRE(part == static_cast<Part>(t.rows()[0].size() + t.rows().size()) - 1);
                    REQUIRE(rest.cell_sum() == remaining - part);
                    remaining -= part;
                    t = rest;
                }
                REQUIRE(remaining == 0);
            });
        }
    }
}

TEST_CASE("splitting into groups of r positions") {
    const auto groups = split_groups(P({12, 10, 10, 9, 9, 9, 7, 6, 6, 3, 3, 3, 2, 1, 1}), 6);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0] == P({12, 10, 10, 9, 9, 9}));
    CHECK(groups[1] == P({7, 6, 6, 3, 3, 3}));
    CHECK(groups[2] == P({2, 1, 1}));
    CHECK(split_groups(P({5}), 3) == std::vector<Partition>{P({5})});
    CHECK(split_groups(Partition{}, 3).empty());
}

TEST_CASE("group hook sequences") {
    CHECK(group_sequence(P({12, 10, 10, 9, 9, 9}), 6) ==
          HookSequence{{1, 1, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3}});
    CHECK(group_sequence(P({7, 6, 6, 3, 3, 3}), 6) == HookSequence{{1, 3, 3, 6, 6, 6, 3}});
    CHECK(group_sequence(P({2, 1, 1}), 6) == HookSequence{{1, 3}});
    // conjugate of (2,2) is (2,2): nothing but r remains with r = 2
    CHECK_THROWS_AS(group_sequence(P({2, 2}), 2), std::domain_error);
}

TEST_CASE("folding the worked sequences rebuilds the good tableau") {
    const std::vector<HookSequence> seqs = {
        {{1, 1, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3}}, {{1, 3, 3, 6, 6, 6, 3}}, {{1, 3}}};
    const Tableau good = T({{6, 6, 6, 3},
                            {6, 6, 3},
                            {6, 6, 3},
                            {6, 6, 1},
                            {6, 3},
                            {6, 3},
                            {6, 1},
                            {1},
                            {1}});
    const auto folds = enumerate_valid_folds(seqs, 6);
    REQUIRE(folds.size() == 1);
    CHECK(folds[0] == good);
    CHECK(fold_into_tableau(seqs, 6) == good);
}

TEST_CASE("single-sequence fold golden") {
    CHECK(fold_into_tableau({{{1, 3}}}, 6) == T({{3}, {1}}));
}

TEST_CASE("invalid sequences have no fold") {
    // descending pair: the row would be all-r or end in r either way
    CHECK(enumerate_valid_folds({{{3, 6}}}, 6).empty());
    CHECK_THROWS_AS(fold_into_tableau({{{3, 6}}}, 6), std::domain_error);
    CHECK_THROWS_AS(fold_into_tableau({{{}}}, 6), std::invalid_argument);
}

TEST_CASE("inverse map golden") {
    CHECK(inverse_map(P({12, 10, 10, 9, 9, 9, 7, 6, 6, 3, 3, 3, 2, 1, 1}), 6) ==
          P({21, 15, 15, 13, 9, 9, 7, 1, 1}));
    CHECK(inverse_map(P({1}), 6) == P({1}));
    CHECK(inverse_map(Partition{}, 6).empty());
}

TEST_CASE("inverse trace carries the worked intermediates") {
    const auto trace = inverse_trace(P({12, 10, 10, 9, 9, 9, 7, 6, 6, 3, 3, 3, 2, 1, 1}), 6);
    REQUIRE(trace.conjugates.size() == 3);
    CHECK(trace.conjugates[0] == P({6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 1, 1}));
    CHECK(trace.conjugates[1] == P({6, 6, 6, 3, 3, 3, 1}));
    CHECK(trace.conjugates[2] == P({3, 1}));
    CHECK(trace.result == P({21, 15, 15, 13, 9, 9, 7, 1, 1}));
}

TEST_CASE("example pair round-trips both ways") {
    CHECK(inverse_map(P({7, 6, 6, 4, 4, 4, 2, 1, 1}), 6) == P({15, 9, 7, 3, 1}));
    CHECK(forward_map(P({21, 15, 15, 13, 9, 9, 7, 1, 1}), 6) ==
          P({12, 10, 10, 9, 9, 9, 7, 6, 6, 3, 3, 3, 2, 1, 1}));
}

TEST_CASE("round trip, image membership, injectivity and fold uniqueness on pattern families") {
    constexpr Variant kVariants[] = {Variant::Free, Variant::FullPeriod, Variant::ZeroTail};
    for (Part r = 2; r <= 6; ++r) {
        std::vector<std::vector<Part>> sweeps;
        {
            std::vector<Part> cur;
            auto rec = [&](auto&& self, Part next) -> void {
                for (Part v = next; v <= r - 1; ++v) {
                    cur.push_back(v);
                    sweeps.push_back(cur);
                    self(self, v + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 1);
        }
        for (const auto& s : sweeps) {
            const PeriodPattern pat(r, s);
            for (Part n = 0; n <= 20; ++n) {
                std::set<std::vector<Part>> images;
                for_each_partition(n, [&](const std::vector<Part>& parts) {
                    const Partition p = Partition::unchecked(parts);
                    if (!is_cp_pattern(p, pat, Variant::Free)) return;
                    CAPTURE(r);
                    CAPTURE(n);
                    CAPTURE(to_text(p));
                    const Partition image = forward_map(p, r);
                    REQUIRE(image.sum() == p.sum());
                    REQUIRE(is_rp_pattern(image, pat, Variant::Free));
                    REQUIRE(images.insert(image.parts()).second);  // injectivity
                    // fold uniqueness is checked inside inverse_map
                    REQUIRE(inverse_map(image, r) == p);
                    for (Variant v : kVariants) {
                        if (is_cp_pattern(p, pat, v)) REQUIRE(is_rp_pattern(image, pat, v));
                    }
                });
            }
        }
    }
}

TEST_CASE("conjugates of image groups use only the pattern residues and r") {
    const PeriodPattern pat(6, {1, 3});
    for (Part n = 0; n <= 16; ++n) {
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            const Partition p = Partition::unchecked(parts);
            if (!is_rp_pattern(p, pat, Variant::Free)) return;
            for (const auto& group : split_groups(p, 6)) {
                const Partition conj = conjugate(group);
                for (Part value : conj.parts()) {
                    REQUIRE((value == 6 || value == 1 || value == 3));
                }
            }
        });
    }
}

TEST_CASE("brute-force inverse agrees with the constructive inverse") {
    const auto family = FamilySelector::parse("cp:r=6,s=1+3");
    const auto found = brute_force_inverse(P({7, 6, 6, 4, 4, 4, 2, 1, 1}), 6, family);
    REQUIRE(found.has_value());
    CHECK(*found == P({15, 9, 7, 3, 1}));
    CHECK(brute_force_inverse(P({1}), 6, family) == P({1}));

    const PeriodPattern pat(3, {1, 2});
    const auto selector = FamilySelector::parse("cp:r=3,s=1+2");
    for (Part n = 0; n <= 18; ++n) {
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            const Partition mu = Partition::unchecked(parts);
            if (!is_rp_pattern(mu, pat, Variant::Free)) return;
            CAPTURE(to_text(mu));
            const auto oracle = brute_force_inverse(mu, 3, selector);
            REQUIRE(oracle.has_value());
            REQUIRE(*oracle == inverse_map(mu, 3));
        });
    }
}

TEST_CASE("brute-force inverse returns nothing for partitions outside the image") {
    const auto family = FamilySelector::parse("cp:r=6,s=1+3");
    // (9,3) is not in the regular-side family, so nothing maps to it
    CHECK_FALSE(brute_force_inverse(P({9, 3}), 6, family).has_value());
}
