#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "toppling/configuration.hpp"
#include "toppling/permutation.hpp"

using namespace toppling;

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_values(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Configuration> all_configurations(int n, int p) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Configuration> out;
    do {
        if (v[static_cast<std::size_t>(p - 1)] < v[static_cast<std::size_t>(p)]) out.emplace_back(v, p);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> record_values(const Permutation& pi, RecordDirection d) {
    std::vector<int> out;
    for (auto r : records(pi, d)) out.push_back(r.value);
    return out;
}

}  // namespace

TEST_CASE("permutation construction") {
    CHECK(Permutation::from_values({1}).size() == 1);
    CHECK(parse_permutation("6214357").size() == 7);
    CHECK_THROWS_AS(Permutation::from_values({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_values({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_values({}), std::invalid_argument);
    CHECK(parse_permutation("6,2,1,4,3,5,7") == parse_permutation("6214357"));
    CHECK(to_string(parse_permutation("10,1,2,3,4,5,6,7,8,9")) == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_WITH_AS(parse_permutation("12x"), doctest::Contains("'x'"), std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
    CHECK(parse_permutation("6214357").inverse() == parse_permutation("3254617"));
    CHECK(parse_permutation("21").inverse() == parse_permutation("21"));
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_permutations(n)) REQUIRE(pi.inverse().inverse() == pi);
    }
}

TEST_CASE("records") {
    CHECK(record_values(parse_permutation("4123"), RecordDirection::left_max) == std::vector<int>{4});
    CHECK(record_values(parse_permutation("21"), RecordDirection::right_min) == std::vector<int>{1});
    CHECK(record_values(parse_permutation("12"), RecordDirection::right_min) == std::vector<int>{1, 2});
    CHECK(records(Permutation::identity(5), RecordDirection::left_max).size() == 5);

    // Left maxima values of pi are the positions of right minima of pi^{-1}.
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_permutations(n)) {
            std::set<int> values;
            for (auto r : records(pi, RecordDirection::left_max)) values.insert(r.value);
            std::set<int> positions;
            for (auto r : records(pi.inverse(), RecordDirection::right_min)) positions.insert(r.position);
            REQUIRE(values == positions);
        }
    }
}

TEST_CASE("left maxima are counted by Stirling numbers of the first kind") {
    // [n k] from the coefficients of x(x+1)...(x+n-1).
    std::vector<std::vector<long>> s1{{1}};
    for (int n = 1; n <= 7; ++n) {
        std::vector<long> row(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 0; k < n; ++k) {
            row[static_cast<std::size_t>(k) + 1] += s1.back()[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] += (n - 1) * s1.back()[static_cast<std::size_t>(k)];
        }
        s1.push_back(row);
    }
    for (int n = 1; n <= 7; ++n) {
        std::vector<long> by_k(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& pi : all_permutations(n)) ++by_k[records(pi, RecordDirection::left_max).size()];
        CHECK(by_k == s1[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("split_at") {
    auto s = split_at(parse_permutation("1243"), 2);
    REQUIRE(s);
    CHECK(s->left == std::vector<int>{1, 2});
    CHECK(s->right == std::vector<int>{4, 3});
    CHECK_FALSE(split_at(parse_permutation("2413"), 2));
    for (int p = 1; p <= 5; ++p) CHECK(split_at(Permutation::identity(5), p));
    CHECK(split_at(Permutation::identity(3), 3)->left.empty());
    CHECK_THROWS_AS(split_at(Permutation::identity(3), 0), std::invalid_argument);
}

TEST_CASE("configuration literals") {
    auto c = parse_configuration("7,3,1,5,(2,4),6,8");
    CHECK(c.n() == 7);
    CHECK(c.p() == 5);
    CHECK(c.pair() == std::pair{2, 4});
    CHECK(to_string(c) == "7,3,1,5,(2,4),6,8");
    CHECK(parse_configuration("1(32)4") == parse_configuration("1,(2,3),4"));
    auto m = parse_marked_configuration("7,3,1,5,(2*,4),6,8");
    CHECK(m.mark == 2);
    CHECK(to_string(m) == "7,3,1,5,(2*,4),6,8");
    CHECK_THROWS_AS(parse_configuration("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_configuration("1,(2,2),3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_marked_configuration("1,(2,3),4"), std::invalid_argument);
    CHECK_THROWS_AS(MarkedConfiguration(c, 7), std::invalid_argument);
}

TEST_CASE("reverse complement of configurations") {
    auto c = parse_configuration("(1,2)");
    CHECK(reverse_complement(c) == c);
    CHECK(reverse_complement(parse_configuration("1,(2,3),4")) == parse_configuration("1,(2,3),4"));
    CHECK(reverse_complement(parse_configuration("4,(3,2),1")) == parse_configuration("4,(3,2),1"));
    CHECK(reverse_complement(parse_configuration("1,2,(3,4)")) == parse_configuration("(1,2),3,4"));
    for (int n = 1; n <= 5; ++n) {
        for (int p = 1; p <= n; ++p) {
            for (const auto& cf : all_configurations(n, p)) {
                auto r = reverse_complement(cf);
                REQUIRE(r.p() == n + 1 - p);
                REQUIRE(reverse_complement(r) == cf);
            }
        }
    }
}

TEST_CASE("lift and unlift") {
    auto m = lift(parse_permutation("6214357"), 2, 5);
    CHECK(m.config == parse_configuration("7,3,1,5,(2,4),6,8"));
    CHECK(m.mark == 2);
    auto m2 = lift(parse_permutation("6314257"), 4, 5);
    CHECK(m2.config == m.config);
    CHECK(m2.mark == 4);
    auto m3 = lift(Permutation::identity(1), 1, 1);
    CHECK(m3.config == parse_configuration("(1,2)"));
    CHECK_THROWS_AS(lift(Permutation::identity(3), 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(lift(Permutation::identity(3), 1, 4), std::invalid_argument);

    auto u = unlift(parse_configuration("7,3,1,5,(2,4),6,8"));
    CHECK(u[0] == Unlifted{parse_permutation("6214357"), 2});
    CHECK(u[1] == Unlifted{parse_permutation("6314257"), 4});
    auto u1 = unlift(parse_configuration("(1,2)"));
    CHECK(u1[0].r == 1);
    CHECK(u1[1].r == 2);
    auto u3 = unlift(parse_configuration("1,(2,3),4"));
    CHECK(u3[0] == Unlifted{Permutation::identity(3), 2});
    CHECK(u3[1] == Unlifted{Permutation::identity(3), 3});

    for (int n = 1; n <= 5; ++n) {
        for (int p = 1; p <= n; ++p) {
            for (const auto& c : all_configurations(n, p)) {
                for (const auto& [pi, r] : unlift(c)) REQUIRE(lift(pi, r, p).config == c);
            }
        }
    }
}

TEST_CASE("map_w") {
    CHECK(map_w(parse_marked_configuration("7,3,1,5,(2*,4),6,8")) == parse_permutation("73154268"));
    CHECK(map_w(parse_marked_configuration("(1,2*)")) == parse_permutation("12"));
    CHECK(map_w(parse_marked_configuration("1,(2*,3),4")) == parse_permutation("1324"));
}
