#include <doctest.h>

#include "qhabiro/json_io.hpp"
#include "test_util.hpp"

using namespace qh;

TEST_SUITE_BEGIN("json");

TEST_CASE("round trips") {
    qhtest::Rng rng;
    for (int t = 0; t < 25; ++t) {
        const LaurentPoly p = qhtest::random_laurent(rng, 8, 30, 1000000);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
    }
    for (int t = 0; t < 10; ++t) {
        const HabiroTrunc x =
            habiro_make(9, 2, qhtest::random_laurent(rng, 6, 8, 9, 4).shifted(2));
        CHECK(habiro_from_json(habiro_to_json(x)) == x);
        const CyclotomicNumber c =
            cyclo_from_laurent(qhtest::random_laurent(rng, 6, 18, 9), 9);
        CHECK(cyclo_from_json(cyclo_to_json(c)) == c);
    }
    PPrimeVector v = vn_to_pprime(4);
    CHECK(pprime_from_json(pprime_to_json(v)) == v);
}

TEST_CASE("hand-written forms and rejects") {
    const Json j = Json::parse(R"x({"unit":"q^(1/4)","terms":[[-2,"1"],[2,"1"]]})x");
    CHECK(laurent_from_json(j) == qint(2));
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"x({"terms":[[0,"0"]]})x")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"x({"unit":"q","terms":[]})x")), ParseError);
    // Non-canonical representatives are rejected on load.
    const Json bad = Json::parse(
        R"x({"level":1,"offset":0,"rep":{"unit":"q^(1/4)","terms":[[4,"1"]]}})x");
    CHECK_THROWS_AS(habiro_from_json(bad), ParseError);
}

TEST_SUITE_END();
