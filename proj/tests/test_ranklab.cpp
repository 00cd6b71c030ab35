#include <doctest.h>

#include "qhabiro/ranklab.hpp"
#include "qhabiro/surgery.hpp"
#include "test_util.hpp"

using namespace qh;

TEST_SUITE_BEGIN("ranklab");

namespace {

HabiroTrunc random_trunc(qhtest::Rng& rng, long level) {
    return habiro_make(level, 0, qhtest::random_laurent(rng, 7, 9, 9, 4));
}

} // namespace

TEST_CASE("the (q,-1) relation on {x, qx}") {
    qhtest::Rng rng;
    const long level = 9;
    const HabiroTrunc x = random_trunc(rng, level);
    const HabiroTrunc qx = habiro_scale(x, LaurentPoly::q_power(1));
    std::vector<HabiroTrunc> family{x, qx};
    std::vector<std::string> names{"x", "qx"};

    const auto certs = relation_search(family, names, 1);
    CHECK(!certs.empty());
    std::vector<LaurentPoly> target{LaurentPoly::q_power(1), -LaurentPoly::one()};
    CHECK(relation_in_span(certs, target));

    // Soundness: re-verify each certificate from recomputed members. The
    // synthetic family is defined by its lift, so recomputation at any level
    // is reduction of the same raw data.
    auto recompute = [&](const std::string& name, long lvl) {
        HabiroTrunc base;
        base.level = lvl;
        base.offset = 0;
        base.rep = reduce_mod(x.rep, lvl);
        if (name == "qx") return habiro_scale(base, LaurentPoly::q_power(1));
        return base;
    };
    for (auto cert : certs) {
        CHECK(verify_relation(cert, level, recompute));
    }

    // A corrupted certificate fails with a nonzero residue witness.
    auto bad = certs.front();
    bad.coeffs[0] += LaurentPoly::q_power(2);
    const auto residue = relation_residue(bad, level, recompute);
    CHECK(residue.has_value());
    CHECK(!residue->is_zero());
}

TEST_CASE("rank of simple families") {
    qhtest::Rng rng;
    const long level = 9;
    {
        std::vector<HabiroTrunc> family{habiro_one(level)};
        const RankReport r = rank_estimate(family, {"1"}, 3);
        CHECK(r.rank == 1);
        CHECK(r.certificates.empty());
    }
    {
        const HabiroTrunc x = random_trunc(rng, level);
        std::vector<HabiroTrunc> family{x, habiro_scale(x, LaurentPoly::q_power(1)),
                                        habiro_mul(x, x)};
        const RankReport r = rank_estimate(family, {"x", "qx", "xx"}, 2);
        CHECK(r.rank == 2);
    }
    {
        // Three Z[q]-combinations of two series: pigeonhole forces a relation.
        const HabiroTrunc a = random_trunc(rng, level);
        const HabiroTrunc b = random_trunc(rng, level);
        const HabiroTrunc c = habiro_add(habiro_scale(a, LaurentPoly::q_power(2)),
                                         habiro_scale(b, LaurentPoly::integer(3)));
        const auto certs = relation_search({a, b, c}, {"a", "b", "c"}, 3);
        CHECK(!certs.empty());
    }
}

TEST_CASE("monotonicity under more constraints") {
    // Relations only accumulate with level and degree.
    const KnotOracle f8 = KnotOracle::figure_eight();
    std::vector<HabiroTrunc> fam15;
    std::vector<std::string> names;
    for (long m0 = -1; m0 <= 1; ++m0) {
        DescendantSpec spec{1, {m0}, 15};
        fam15.push_back(descendant(f8, spec));
        names.push_back("D(" + std::to_string(m0) + ")");
    }
    std::vector<HabiroTrunc> fam10;
    for (const auto& x : fam15) fam10.push_back(project(x, 10));

    const long r10_d4 = rank_estimate(fam10, names, 4).rank;
    const long r15_d4 = rank_estimate(fam15, names, 4).rank;
    const long r10_d6 = rank_estimate(fam10, names, 6).rank;
    CHECK(r10_d4 >= r15_d4);
    CHECK(r10_d4 >= r10_d6);
}

TEST_CASE("kernel reconstruction needs several primes for huge coefficients") {
    // A relation whose integer coefficients exceed one word-size prime forces
    // the CRT/rational-reconstruction path; the certificate must still verify
    // exactly.
    qhtest::Rng rng;
    const long level = 8;
    const HabiroTrunc x = random_trunc(rng, level);
    const Int big = Int("123456789012345678901234567890123456789");
    LaurentPoly c = LaurentPoly::q_power(1);
    c *= big;
    c += LaurentPoly::one();
    const HabiroTrunc y = habiro_scale(x, c);
    const auto certs = relation_search({x, y}, {"x", "y"}, 2);
    CHECK(!certs.empty());
    std::vector<LaurentPoly> target{c, -LaurentPoly::one()};
    CHECK(relation_in_span(certs, target));
}

TEST_CASE("certificates re-verify at their level plus three") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    std::vector<HabiroTrunc> family;
    std::vector<std::string> names;
    for (long m0 = -1; m0 <= 1; ++m0) {
        DescendantSpec spec{1, {m0}, 12};
        family.push_back(descendant(f8, spec));
        names.push_back(std::to_string(m0));
    }
    family.push_back(normalize_offset(colored_invariant(f8, 1, 1, 12)));
    names.push_back("colored");
    auto recompute = [&](const std::string& name, long lvl) {
        if (name == "colored") return normalize_offset(colored_invariant(f8, 1, 1, lvl));
        DescendantSpec spec{1, {std::stol(name)}, lvl};
        return descendant(f8, spec);
    };
    for (auto cert : relation_search(family, names, 4)) {
        CHECK(cert.verified_level == 12);
        CHECK(verify_relation(cert, 15, recompute));
        CHECK(cert.verified_level == 15);
    }
}

TEST_CASE("the four-term identity is found by relation_search") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    const long level = 15;
    DescendantSpec s0{1, {0}, level}, sm1{1, {-1}, level}, sp1{1, {1}, level};
    std::vector<HabiroTrunc> family{habiro_one(level), descendant(f8, s0), descendant(f8, sm1),
                                    descendant(f8, sp1),
                                    normalize_offset(colored_invariant(f8, 1, 1, level))};
    std::vector<std::string> names{"1", "I(0)", "I(-1)", "I(1)", "I_MK"};
    const auto certs = relation_search(family, names, 3);
    CHECK(!certs.empty());
    std::vector<LaurentPoly> target{LaurentPoly::zero(), LaurentPoly::one(), LaurentPoly::zero(),
                                    LaurentPoly::q_power(1), -LaurentPoly::q_power(1)};
    CHECK(relation_in_span(certs, target));
}

TEST_CASE("polynomial matrix rank") {
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly q = LaurentPoly::q_power(1);
    CHECK(poly_matrix_rank({{one, q}, {q, one}}) == 2);
    CHECK(poly_matrix_rank({{one, q}, {q, q * q}}) == 1);
    CHECK(poly_matrix_rank({{LaurentPoly::zero(), LaurentPoly::zero()}}) == 0);
    CHECK(poly_matrix_rank({}) == 0);
}

TEST_CASE("level and offset preconditions") {
    qhtest::Rng rng;
    const HabiroTrunc a = random_trunc(rng, 8);
    const HabiroTrunc b = random_trunc(rng, 9);
    CHECK_THROWS_AS(relation_search({a, b}, {"a", "b"}, 2), LevelMismatchError);
    HabiroTrunc c = random_trunc(rng, 8);
    c.offset = 4;
    CHECK_THROWS_AS(relation_search({a, c}, {"a", "c"}, 2), OffsetMismatchError);
    CHECK(normalize_offset(c).offset == 0);
}

TEST_SUITE_END();
