#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hookpart/golden.hpp"
#include "hookpart/sequence.hpp"

using namespace hookpart;

TEST_CASE("binomial convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("reference rows of the A-triangle") {
    TriangleTable t = a_table(15);
    CHECK(t.row(6) == std::vector<Int>{8, 10, 7, 5, 1, 1});
    CHECK(t.row(15) ==
          std::vector<Int>{610, 1685, 2663, 3082, 2867, 2240, 1520, 889, 481, 206, 100, 25, 14, 1, 1});
    CHECK(t.at(15, 3) == 3082);
    CHECK(t.at(10, 0) == 55);
    // out-of-triangle lookups are zero
    CHECK(t.at(5, 5) == 0);
    CHECK(t.at(5, -1) == 0);
    CHECK(t.at(0, 0) == 0);
    CHECK_THROWS_AS(t.at(16, 0), std::out_of_range);
}

TEST_CASE("closed form matches the recurrence table") {
    const int depth = 120;
    TriangleTable t = a_table(depth);
    for (int n = 1; n <= depth; ++n)
        for (int m = 0; m < n; ++m)
            CHECK(a_closed(n, m) == t.at(n, m));
}

TEST_CASE("closed form matches the recurrence on deep sampled rows") {
    TriangleTable t = a_table(300);
    for (int n : {200, 300})
        for (int m = 0; m < n; m += 3)
            CHECK(a_closed(n, m) == t.at(n, m));
}

TEST_CASE("closed form edge values") {
    CHECK(a_closed(5, 2) == 4);
    CHECK(a_closed(0, 0) == 0);
    CHECK(a_closed(1, 0) == 1);
    CHECK(a_closed(5, -1) == 0);
    CHECK(a_closed(5, 7) == 0);
    CHECK(a_closed(-4, 2) == 0);
}

TEST_CASE("the m = 0 column is the Fibonacci sequence") {
    TriangleTable t = a_table(120);
    CHECK(t.at(1, 0) == 1);
    CHECK(t.at(2, 0) == 1);
    CHECK(t.at(10, 0) == 55);
    for (int n = 3; n <= 120; ++n)
        CHECK(t.at(n, 0) == t.at(n - 1, 0) + t.at(n - 2, 0));
}

TEST_CASE("delta values from the reference table") {
    CHECK(delta(15, 4) == -215);
    CHECK(delta(7, 5) == -5);
    CHECK(delta(7, 3) == -7);
    for (long long m = 1; m <= 50; ++m)
        CHECK(delta(m + 1, m) == 0);
}

TEST_CASE("boundary delta closed forms") {
    CHECK(boundary_delta(3, 4) == -7);
    CHECK(boundary_delta(1, 5) == 2);
    CHECK(boundary_delta(5, 1) == 0);
    CHECK(boundary_delta(4, 2) == -4);
    for (long long m = 1; m <= 120; ++m)
        for (int offset = 1; offset <= 5; ++offset)
            CHECK(boundary_delta(m, offset) == delta(m + offset, m));
    CHECK_THROWS_AS(boundary_delta(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary_delta(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(boundary_delta(0, 1), std::invalid_argument);
}

TEST_CASE("g values derived from the delta table") {
    CHECK(g_value(9, 2) == 1);  // 3 + (-2)
    CHECK(g_value(7, 2) == -5); // -2 + (-3)
    CHECK(g_value(2, 0) == 2);  // 1 + 1
}

TEST_CASE("stateless and table-backed paths agree") {
    SequenceView view(60);
    for (int n = 1; n <= 60; ++n)
        for (int m = 0; m <= n; ++m) {
            CHECK(view.delta(n, m) == delta(n, m));
            CHECK(view.g(n, m) == g_value(n, m));
        }
}

TEST_CASE("CSV dialect is stable") {
    CHECK(a_table(2).to_csv() == "n\\m,0,1\n1,1\n2,1,1\n");
}

TEST_CASE("table CSV reproduces the embedded goldens byte for byte") {
    SequenceView view(15);
    CHECK(view.table().to_csv() == golden::kTable1Csv);
    CHECK(view.delta_table().to_csv() == golden::kTable2Csv);
}

#ifdef HOOKPART_GOLDEN_DIR
static std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

TEST_CASE("embedded goldens stay in sync with the committed files") {
    CHECK(slurp(std::string(HOOKPART_GOLDEN_DIR) + "/table1_golden.csv") == golden::kTable1Csv);
    CHECK(slurp(std::string(HOOKPART_GOLDEN_DIR) + "/table2_golden.csv") == golden::kTable2Csv);
}
#endif
