#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookpart/unimodality.hpp"

using namespace hookpart;

TEST_CASE("predicted mode") {
    CHECK(unimodal_mode(6) == 1);
    CHECK(unimodal_mode(9) == 2);
    CHECK(unimodal_mode(15) == 3);
    CHECK(unimodal_mode(300) == 74);
    CHECK_THROWS_AS(unimodal_mode(5), std::invalid_argument);
}

TEST_CASE("row 8 is the documented strict chain") {
    SequenceView view(10);
    // 21 < 33 > 31 > 23 > 11 > 7 > 1, then the fixed tail 1, 1
    UnimodalityReport r = check_strong_unimodality(view, 8);
    CHECK(r.pass());
    CHECK(r.mode_expected == 1);
    CHECK(r.strictly_increasing_prefix_ok);
    CHECK(r.strictly_decreasing_suffix_ok);
    CHECK(r.tail_pair_is_one);
    REQUIRE(r.argmax_indices.size() == 1);
    CHECK(r.argmax_indices[0] == 1);
    CHECK(view.a(8, 1) == 33);
}

TEST_CASE("rows attain their maximum at the predicted mode") {
    SequenceView view(15);
    CHECK(view.a(15, 3) == 3082);
    CHECK(check_strong_unimodality(view, 15).argmax_indices == std::vector<int>{3});
    CHECK(view.a(9, 2) == 62);
    CHECK(check_strong_unimodality(view, 9).argmax_indices == std::vector<int>{2});
    CHECK(view.a(6, 1) == 10);
}

TEST_CASE("strong unimodality holds through n = 120") {
    SequenceView view(120);
    CHECK(verify_strong_unimodality(view, {6, 120}).pass());
}

TEST_CASE("log-concavity defect equals 2-n") {
    SequenceView view(100);
    CHECK(log_concavity_defect(view, 10) == -8);
    CHECK(log_concavity_defect(view, 3) == -1);
    CHECK(verify_log_concavity_defect(view, {3, 100}).pass());
    CHECK_THROWS_AS(log_concavity_defect(view, 2), std::invalid_argument);
}

TEST_CASE("ratio bounds for m = 5 include the documented point") {
    SequenceView view(30);
    // Delta(8,5)/Delta(9,5) = (-4)/(-18) = 2/9, inside (1/5, 7/9)
    CHECK(view.delta(8, 5) == -4);
    CHECK(view.delta(9, 5) == -18);
    CHECK(check_ratio_bounds(view, 5).pass());
    CHECK_THROWS_AS(check_ratio_bounds(view, 4), std::invalid_argument);
}

TEST_CASE("ratio bounds hold for 5 <= m <= 40") {
    SequenceView view(160);
    CHECK(verify_ratio_bounds(view, {5, 40}).pass());
}

TEST_CASE("the lower end of the n-range is sharp") {
    SequenceView view(20);
    // at n = m+3 the ratio Delta(m+2,m)/Delta(m+3,m) = m/(m-1) exceeds 1
    const Int num = view.delta(7, 5);  // -5
    const Int den = view.delta(8, 5);  // -4
    CHECK(num == -5);
    CHECK(den == -4);
    CHECK((-num) * 1 > (-den) * 1);          // ratio > 1
    CHECK(9 * (-num) > 7 * (-den));          // upper bound 7/9 indeed fails here
}

TEST_CASE("10/9 bound with the documented exact ratios") {
    SequenceView view(60);
    CHECK(view.delta(10, 3) == -18);
    CHECK(view.delta(11, 3) == -22);
    // 18/22 == 9/11
    CHECK(Rat(18, 22) == Rat(9, 11));
    CHECK(check_upper_10_9(view, 3));
    CHECK(view.delta(14, 4) == -192);
    CHECK(view.delta(15, 4) == -215);
    CHECK(check_upper_10_9(view, 4));
    CHECK(verify_upper_10_9(view, {3, 14}).pass());
    CHECK_THROWS_AS(check_upper_10_9(view, 2), std::invalid_argument);
}

TEST_CASE("sign pattern of delta across the triangle") {
    SequenceView view(120);
    CHECK(view.delta(13, 3) == 26);
    CHECK(view.delta(11, 3) == -22);
    CHECK(check_sign_pattern(view, 120).pass());
    CHECK_THROWS_AS(check_sign_pattern(view, 5), std::invalid_argument);
}
