#include <doctest.h>

#include "qhabiro/multi.hpp"
#include "qhabiro/surgery.hpp"

using namespace qh;

TEST_SUITE_BEGIN("multi");

TEST_CASE("single -1-framed component reproduces the b=1 route") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    MultiSurgeryData d;
    d.name = "4_1-as-multi";
    d.arity = 1;
    d.framings = {-1};
    d.max_index = 11;
    for (long k = 0; k <= 11; ++k) d.coeffs[{k}] = f8.coeff(k);

    CHECK(multi_invariant(d, {0}, 12) == invariant(f8, 1, 12));
    DescendantSpec spec{1, {-1}, 12};
    CHECK(multi_invariant(d, {-1}, 12) == descendant(f8, spec));
}

TEST_CASE("product data factors") {
    // Two unlinked -1-framed copies of the core: coefficients multiply, and
    // so do the invariants.
    const KnotOracle f8 = KnotOracle::figure_eight();
    MultiSurgeryData d;
    d.name = "4_1-disjoint-4_1";
    d.arity = 2;
    d.framings = {-1, -1};
    d.max_index = 9;
    for (long k1 = 0; k1 <= 9; ++k1)
        for (long k2 = 0; k2 <= 9; ++k2) {
            const LaurentPoly c = f8.coeff(k1) * f8.coeff(k2);
            if (!c.is_zero()) d.coeffs[{k1, k2}] = c;
        }
    const HabiroTrunc x = invariant(f8, 1, 10);
    CHECK(multi_invariant(d, {0, 0}, 10) == habiro_mul(x, x));
}

TEST_CASE("validation") {
    MultiSurgeryData d;
    d.arity = 1;
    d.framings = {-1};
    d.max_index = 2;
    d.coeffs[{0}] = LaurentPoly::one();
    CHECK_THROWS_AS(multi_invariant(d, {0, 0}, 2), Error); // wrong shift arity
    CHECK_THROWS_AS(multi_invariant(d, {0}, 5), OracleError); // too short
}

TEST_SUITE_END();
