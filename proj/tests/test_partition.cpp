#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hookpart/partition.hpp"

using namespace hookpart;

TEST_CASE("hook length of sample partitions") {
    CHECK(Partition{{3}}.hook() == 3);
    CHECK(Partition{{2, 1}}.hook() == 3);
    CHECK(Partition{{2, 2}}.hook() == 3);
    CHECK(Partition{{1, 1, 1}}.hook() == 3);
    CHECK(Partition{{5, 3, 3, 1}}.hook() == 8);
}

TEST_CASE("enumerate_hook(1) is the single partition (1)") {
    auto h1 = enumerate_hook(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0] == Partition{{1}});
}

TEST_CASE("enumerate_hook(3) lists exactly the four partitions of hook 3") {
    auto h3 = enumerate_hook(3);
    REQUIRE(h3.size() == 4);
    // deterministic order: first part ascending, then later parts largest-first
    CHECK(h3[0] == Partition{{1, 1, 1}});
    CHECK(h3[1] == Partition{{2, 2}});
    CHECK(h3[2] == Partition{{2, 1}});
    CHECK(h3[3] == Partition{{3}});
}

TEST_CASE("enumeration counts double with n and entries are valid") {
    for (int n = 1; n <= 14; ++n) {
        std::set<std::vector<int>> seen;
        long long count = 0;
        for_each_hook_partition(n, [&](const Partition& p) {
            ++count;
            CHECK(p.hook() == n);
            CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
            CHECK(p.parts.back() >= 1);
            seen.insert(p.parts);
        });
        CHECK(count == (1LL << (n - 1)));
        CHECK(seen.size() == static_cast<std::size_t>(count)); // no duplicates
    }
}

TEST_CASE("statistics on small partitions") {
    CHECK(count_even_parts(Partition{{2, 2}}) == 2);
    CHECK(count_even_parts(Partition{{3}}) == 0);
    CHECK(count_even_parts(Partition{{2, 1}}) == 1);

    CHECK(count_equal_adjacent_pairs(Partition{{1, 1, 1}}) == 2);
    CHECK(count_equal_adjacent_pairs(Partition{{2, 2}}) == 1);
    CHECK(count_equal_adjacent_pairs(Partition{{3}}) == 0);
    CHECK(count_equal_adjacent_pairs(Partition{{4, 4, 2, 2, 1}}) == 2);
}

TEST_CASE("oracle tables match the reference rows") {
    auto [by_even, by_pairs] = oracle_tables(5);
    CHECK(by_even.row(3) == std::vector<Int>{2, 1, 1});
    CHECK(by_pairs.row(3) == std::vector<Int>{2, 1, 1});
    CHECK(by_even.row(5) == std::vector<Int>{5, 5, 4, 1, 1});
}

TEST_CASE("both statistics have the same distribution") {
    auto [by_even, by_pairs] = oracle_tables(12);
    for (int n = 1; n <= 12; ++n)
        for (int m = 0; m < n; ++m)
            CHECK(by_even.at(n, m) == by_pairs.at(n, m));
}

TEST_CASE("enumeration cap is enforced and named in the error") {
    CHECK_THROWS_WITH_AS(enumerate_hook(25), doctest::Contains("enumeration too large"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(enumerate_hook(25), doctest::Contains("24"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(enumerate_hook(5, 4), doctest::Contains("cap 4"), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_hook(0), std::invalid_argument);
    CHECK_NOTHROW(enumerate_hook(5, 5));
}
