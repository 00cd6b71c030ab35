#include <doctest.h>

#include "qhabiro/surgery.hpp"

using namespace qh;

TEST_SUITE_BEGIN("surgery");

namespace {

// Direct truncated summation of the explicit M_0 = S³_{4_1,-1/2} formula:
// (1-q)·I^{(m0,m1)} = Σ_{k>=l>=0} (-1)^k q^{-k(k+1)/2+l(l+1)}
//                     (q;q)_{2k+1}/((q;q)_l (q;q)_{k-l}) q^{k m0 + l m1}.
HabiroTrunc im0_direct(long m0, long m1, long level) {
    LaurentPoly acc;
    for (long k = 0; k <= level - 1; ++k) {
        for (long l = 0; l <= k; ++l) {
            LaurentPoly term =
                exact_div(qpoch_cached(2 * k + 1), qpoch_cached(l) * qpoch_cached(k - l));
            term = term.shifted(-2 * k * (k + 1) + 4 * l * (l + 1) + 4 * (k * m0 + l * m1));
            if (k % 2 != 0) term = -term;
            acc += term;
        }
    }
    return habiro_make(level, 0, acc);
}

} // namespace

TEST_CASE("kernel values") {
    CHECK(kernel_alpha(1, 0, {}) == LaurentPoly::one());
    CHECK(kernel_alpha(1, 3, {}) == LaurentPoly::quarter_power(18));
    CHECK(kernel_alpha(2, 1, {0}) == LaurentPoly::q_power(1));
    CHECK_THROWS_AS(kernel_alpha(2, 1, {2}), Error);
    CHECK_THROWS_AS(kernel_alpha(3, 3, {1, 2}), Error);
    for (long k = 0; k <= 8; ++k) {
        for (long l = 0; l <= k; ++l) {
            const LaurentPoly direct =
                exact_div(qpoch_cached(k), qpoch_cached(l) * qpoch_cached(k - l))
                    .shifted(k * (k + 3) + 4 * l * (l + 1));
            CHECK(kernel_alpha(2, k, {l}) == direct);
        }
    }
}

TEST_CASE("alpha recurrences") {
    const RecurrenceReport rep = verify_alpha_recurrences(12, 12);
    CHECK(rep.ok());
    CHECK(selected_kernel_reading() == KernelReading::KMinusEllFirst);
}

TEST_CASE("summation bound") {
    CHECK(summation_bound(20).kmax == 19);
    CHECK(summation_bound(20, 3).kmax == 22);
}

TEST_CASE("unknot controls") {
    const KnotOracle u = KnotOracle::unknot();
    for (long b = 1; b <= 3; ++b) {
        for (long level : {1L, 5L, 20L}) {
            CHECK(invariant(u, b, level) == habiro_one(level));
        }
        DescendantSpec spec{b, std::vector<long>(static_cast<std::size_t>(b), -2), 12};
        CHECK(descendant(u, spec) == habiro_one(12));
    }
}

TEST_CASE("figure-eight b=2 reproduces the explicit formula") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    for (long m0 = -1; m0 <= 1; ++m0) {
        for (long m1 = -1; m1 <= 1; ++m1) {
            DescendantSpec spec{2, {m0, m1}, 14};
            const HabiroTrunc lhs =
                habiro_scale(descendant(f8, spec), LaurentPoly::one() - LaurentPoly::q_power(1));
            CHECK(lhs == im0_direct(m0, m1, 14));
        }
    }
}

TEST_CASE("bounded oracles are rejected when too short") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    std::vector<LaurentPoly> values;
    for (long k = 0; k <= 3; ++k) values.push_back(f8.coeff(k));
    const KnotOracle shorty = KnotOracle::from_cyclotomic("short", values);
    DescendantSpec ok{1, {0}, 4};
    CHECK(descendant(shorty, ok) == invariant(f8, 1, 4));
    DescendantSpec too_deep{1, {0}, 10};
    CHECK_THROWS_AS(descendant(shorty, too_deep), OracleError);
    CHECK_THROWS_AS(colored_invariant(shorty, 1, 2, 3), OracleError);
}

TEST_CASE("truncation exactness") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    DescendantSpec spec{1, {0}, 15};
    const long kmax = summation_bound(15).kmax;
    CHECK(descendant_bounded(f8, spec, kmax) == descendant_bounded(f8, spec, kmax + 5));
    DescendantSpec spec2{2, {1, -1}, 12};
    const long kmax2 = summation_bound(12).kmax;
    CHECK(descendant_bounded(f8, spec2, kmax2) == descendant_bounded(f8, spec2, kmax2 + 5));
}

TEST_CASE("tower coherence of invariants") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    for (long b = 1; b <= 2; ++b) {
        const HabiroTrunc high = invariant(f8, b, 20);
        CHECK(project(high, 10) == invariant(f8, b, 10));
        CHECK(project(high, 5) == invariant(f8, b, 5));
    }
}

TEST_CASE("mirror") {
    const HabiroTrunc one = habiro_one(10);
    CHECK(mirror(one) == one);

    const KnotOracle f8 = KnotOracle::figure_eight();
    const HabiroTrunc x = invariant(f8, 1, 15);
    CHECK(mirror(mirror(x)) == x);

    // Second route: sum the q -> 1/q transformed series directly (the +1
    // surgery kernel) and reduce.
    LaurentPoly acc;
    for (long k = 0; k <= summation_bound(15).kmax; ++k) {
        acc += f8.coeff(k).invert_q().shifted(-k * (k + 3));
    }
    CHECK(mirror(x) == habiro_make(15, 0, acc));
}

TEST_CASE("colored invariants") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    const KnotOracle u = KnotOracle::unknot();

    for (long b = 1; b <= 2; ++b) CHECK(colored_invariant(f8, b, 0, 12) == invariant(f8, b, 12));

    // b=1, m=1 termwise: Σ_k ({k+1}·J_{k+1} + (v^{2k+1}+v^{-2k-1})·J_k)·q^{k(k+3)/4}.
    {
        const long level = 14;
        LaurentPoly acc;
        for (long k = 0; k <= summation_bound(level, 1).kmax; ++k) {
            LaurentPoly g = qbrace(k + 1) * f8.coeff(k + 1);
            LaurentPoly w;
            w.add_term(2 * (2 * k + 1), 1);
            w.add_term(-2 * (2 * k + 1), 1);
            g += w * f8.coeff(k);
            acc += g.shifted(k * (k + 3));
        }
        CHECK(colored_invariant(f8, 1, 1, level) == habiro_make(level, 2, acc));
    }

    // Unknot: the closed-form quantum dimension [m+1], carried at offset 2m.
    for (long b = 1; b <= 2; ++b)
        for (long m = 0; m <= 4; ++m)
            CHECK(colored_invariant(u, b, m, 10) ==
                  habiro_make(10, 2 * m, qint(m + 1).shifted(0)));
}

TEST_CASE("cables") {
    const KnotOracle u = KnotOracle::unknot();
    const KnotOracle f8 = KnotOracle::figure_eight();

    CHECK(phi_cable(u, 1, 0, 10) == habiro_one(10));
    CHECK(phi_cable(f8, 2, 0, 10) == invariant(f8, 2, 10));

    // Unknot: phi(K^(m)) = (-1)^m Σ c_{m,l} [l+1].
    for (long m = 0; m <= 4; ++m) {
        LaurentPoly expect;
        for (const auto& [l, c] : cable_expand(m)) expect += qint(l + 1) * c;
        if (m % 2 != 0) expect = -expect;
        CHECK(phi_cable(u, 1, m, 10) == habiro_make(10, 2 * m, expect));
    }

    // phi(K^(2)) = colored(2) + colored(0), aligned at the cable's grading.
    {
        const HabiroTrunc c2 = colored_invariant(f8, 2, 2, 12);
        const HabiroTrunc c0 = colored_invariant(f8, 2, 0, 12);
        const HabiroTrunc expect = habiro_make(12, 4, c2.lift() + c0.lift());
        CHECK(phi_cable(f8, 2, 2, 12) == expect);
    }
}

TEST_CASE("descendant decomposition") {
    const KnotOracle f8 = KnotOracle::figure_eight();

    // m = 0: the trivial decomposition.
    for (long b = 1; b <= 2; ++b) {
        const Decomposition d = decompose_to_descendants(f8, b, 0, 10);
        CHECK(d.terms.size() == 1);
        CHECK(d.terms[0].coeff == LaurentPoly::one());
        CHECK(d.constant.is_zero());
        for (long s : d.terms[0].spec.shifts) CHECK(s == 0);
    }

    // The b=1, m=1 decomposition is the algebraic content of the four-term
    // identity: v^{-1}I^{(0)} + v·I^{(1)} with no constant left.
    {
        const Decomposition d = decompose_to_descendants(f8, 1, 1, 12);
        CHECK(d.constant.is_zero());
        CHECK(d.terms.size() == 2);
        CHECK(evaluate_decomposition(f8, d, 12) == colored_invariant(f8, 1, 1, 12));
    }

    for (long b = 1; b <= 2; ++b) {
        for (long m = 0; m <= 3; ++m) {
            const Decomposition d = decompose_to_descendants(f8, b, m, 12);
            CHECK(evaluate_decomposition(f8, d, 12) == colored_invariant(f8, b, m, 12));
        }
    }
    CHECK_THROWS_AS(decompose_to_descendants(f8, 3, 1, 10), Error);
}

TEST_CASE("wrt at roots of unity") {
    const KnotOracle f8 = KnotOracle::figure_eight();
    const KnotOracle u = KnotOracle::unknot();

    CHECK(wrt_at_root(f8, 1, 0, 1) == CyclotomicNumber::one(1));
    CHECK(wrt_at_root(u, 2, 0, 7) == CyclotomicNumber::one(7));
    CHECK_THROWS_AS(wrt_at_root(f8, 1, 0, 4), EvenOrderError);

    for (long n : {1L, 3L, 5L, 7L, 9L}) {
        for (long b = 1; b <= 2; ++b) {
            for (long m = 0; m <= 2; ++m) {
                const HabiroTrunc x = colored_invariant(f8, b, m, std::max(n, 1L));
                CHECK(wrt_at_root(f8, b, m, n) == evaluate_at_root(x, n));
            }
        }
    }
}

TEST_SUITE_END();
