#include "qhabiro/verify.hpp"

#include <sstream>

#include "qhabiro/ranklab.hpp"
#include "qhabiro/surgery.hpp"

namespace qh {

namespace {

void check(SuiteReport& rep, bool ok, const std::string& what) {
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) rep.passed = false;
}

SuiteReport suite_basis(const SuiteParams& params) {
    SuiteReport rep{"basis", true, {}};
    const long kk = params.range;

    bool two_route = true;
    for (long ell = 0; ell <= kk && two_route; ++ell) {
        for (long k = ell; k <= kk && two_route; ++k) {
            // Route 1: the gamma coefficients. Route 2: expand V_ell through
            // vn_to_pprime and multiply out with pprime_mul.
            PPrimeVector direct;
            for (long i = 0; i <= ell; ++i) direct.add_term(k + i, gamma_at(i, ell, k));
            PPrimeVector composed;
            for (const auto& [i, c] : vn_to_pprime(ell).coeffs) {
                for (const auto& [idx, pc] : pprime_mul(i, k).coeffs) {
                    composed.add_term(idx, c * pc);
                }
            }
            two_route = (direct == composed);
        }
    }
    check(rep, two_route, "V_ell·P'_k expansion agrees between gamma and vn_to_pprime∘pprime_mul"
                          " for 0 <= ell <= k <= " + std::to_string(kk));

    bool a_div = true;
    for (long i = 0; i <= kk && a_div; ++i)
        for (long s = 0; s <= i && a_div; ++s)
            for (long k = i; k <= kk && a_div; ++k) {
                LaurentPoly denom = LaurentPoly::one();
                for (long t = 1; t <= s; ++t) denom *= qbrace(k + t);
                a_div = divides(denom, a_coeff_at(s, i, k));
            }
    check(rep, a_div, "a^s_{i,k} divisible by {k+1}...{k+s} for indices <= " + std::to_string(kk));

    bool g_div_v = true, g_div_q = true;
    for (long ell = 0; ell <= kk; ++ell)
        for (long i = 0; i <= ell; ++i)
            for (long k = ell; k <= kk; ++k) {
                const LaurentPoly g = gamma_at(i, ell, k);
                LaurentPoly dv = LaurentPoly::one();
                LaurentPoly dq = LaurentPoly::one();
                for (long t = 1; t <= i; ++t) {
                    dv *= qbrace(k + t);
                    dq *= LaurentPoly::one() - LaurentPoly::q_power(k + t);
                }
                g_div_v = g_div_v && divides(dv, g);
                g_div_q = g_div_q && divides(dq, g);
            }
    check(rep, g_div_v, "gamma^i_{ell,k} divisible by {k+1}...{k+i} (bracket normalization)");
    check(rep, g_div_q, "gamma^i_{ell,k} divisible by (1-q^{k+1})...(1-q^{k+i})");

    bool coh = true;
    for (long i = 0; i <= 6 && coh; ++i)
        for (long s = 0; s <= i && coh; ++s)
            for (long k = 0; k <= kk && coh; ++k)
                coh = (a_coeff(s, i).eval_at_u_power(k) == a_coeff_at(s, i, k));
    check(rep, coh, "a^s_i(v,v^k) = a^s_{i,k}(q) specialization coherence");

    bool dims = true;
    for (long m = 0; m <= 12 && dims; ++m) {
        Int total = 0;
        for (const auto& [ell, c] : cable_expand(m)) total += c * Int(ell + 1);
        Int expect = Int(1) << m;
        dims = (total == expect);
    }
    check(rep, dims, "cable_expand dimension count: sum c_{m,ell}(ell+1) = 2^m for m <= 12");
    return rep;
}

SuiteReport suite_integrality(const SuiteParams& params) {
    SuiteReport rep{"integrality", true, {}};
    const KnotOracle o = resolve_knot(params.knot);
    long upto = 20;
    if (o.max_k() >= 0) upto = std::min(upto, o.max_k());
    for (long k = 0; k <= upto; ++k) {
        const bool strong = integrality_check(o.coeff(k), k);
        const bool weak = integrality_check_weak(o.coeff(k), k);
        check(rep, strong && weak,
              "J(P'_" + std::to_string(k) + ") in (q^{k+1};q)_{k+1}/(1-q)·Z[q^{±1}] and (q;q)_k·Z[q^{±1}]");
    }
    return rep;
}

SuiteReport suite_recurrences(const SuiteParams& params) {
    SuiteReport rep{"recurrences", true, {}};
    const long r = std::max<long>(params.range, 2);
    const RecurrenceReport rr = verify_alpha_recurrences(r, r);
    check(rep, rr.ok(), "alpha^{(2)} q-difference recurrences exact for k,l <= " + std::to_string(r));
    for (const auto& f : rr.failures) rep.lines.push_back("     witness: " + f);
    check(rep, selected_kernel_reading() == KernelReading::KMinusEllFirst,
          kernel_reading_description());
    return rep;
}

SuiteReport suite_imk1(const SuiteParams& params) {
    SuiteReport rep{"imk1", true, {}};
    const long L = params.level;
    const KnotOracle o = resolve_knot(params.knot);

    DescendantSpec s0{1, {0}, L}, sm1{1, {-1}, L}, sp1{1, {1}, L};
    const HabiroTrunc i0 = descendant(o, s0);
    const HabiroTrunc im1 = descendant(o, sm1);
    const HabiroTrunc ip1 = descendant(o, sp1);
    const HabiroTrunc imk = colored_invariant(o, 1, 1, L);

    // v^{-1}(-1+I^{(0)}) - v^{-3}q(-1+I^{(-1)}) + v·I^{(1)} + v^{-1}·I^{(-1)}.
    const LaurentPoly vinv = LaurentPoly::quarter_power(-2);
    const LaurentPoly vm3q = LaurentPoly::quarter_power(-6) * LaurentPoly::q_power(1);
    const LaurentPoly v = LaurentPoly::quarter_power(2);
    LaurentPoly rhs;
    rhs += vinv * (i0.rep - LaurentPoly::one());
    rhs -= vm3q * (im1.rep - LaurentPoly::one());
    rhs += v * ip1.rep;
    rhs += vinv * im1.rep;
    const HabiroTrunc rhs_t = habiro_make(L, 2, rhs);
    check(rep, rhs_t == imk, "I_{(M,K)} equals the four-term descendant combination mod (q;q)_" +
                                 std::to_string(L));

    // relation_search must recover the relation with degree >= 3.
    std::vector<HabiroTrunc> family{habiro_one(L), i0, im1, ip1, normalize_offset(imk)};
    std::vector<std::string> names{"1", "I(0)", "I(-1)", "I(1)", "I_MK"};
    const auto certs = relation_search(family, names, 3);
    check(rep, !certs.empty(), "relation_search(degree 3) finds relations: " +
                                   std::to_string(certs.size()) + " certificate(s)");
    // I^{(0)} + q·I^{(1)} − q·(q^{-1/2}·I_{(M,K)}) = 0 is the cleared form.
    std::vector<LaurentPoly> target{LaurentPoly::zero(), LaurentPoly::one(), LaurentPoly::zero(),
                                    LaurentPoly::q_power(1), -LaurentPoly::q_power(1)};
    check(rep, relation_in_span(certs, target), "the displayed relation lies in the certificate span");
    return rep;
}

SuiteReport suite_vanishing(const SuiteParams& params) {
    SuiteReport rep{"vanishing", true, {}};
    for (long n : params.orders) {
        if (n < 3 || n % 2 == 0) continue;
        bool ok = true;
        std::ostringstream os;
        for (long k = 0; k <= n; ++k) {
            // Vanishing holds exactly when the factor list k+1..2k+1 hits a
            // multiple of N, i.e. 2k+1 >= N for k <= N.
            const bool vanished = vanishing_check(n, k);
            const bool expected = 2 * k + 1 >= n;
            if (vanished != expected) {
                ok = false;
                os << " k=" << k << (expected ? " should vanish" : " should not vanish");
            }
        }
        check(rep, ok, "(xi^{k+1};xi)_{k+1}/(1-xi) vanishes exactly for 2k+1 >= N, N = " +
                           std::to_string(n) + os.str());
    }
    return rep;
}

SuiteReport suite_tower(const SuiteParams& params) {
    SuiteReport rep{"tower", true, {}};
    const KnotOracle o = resolve_knot(params.knot);
    const long top = params.level;
    const std::vector<long> checkpoints = {5, 10, 15, 20};
    for (long b = 1; b <= 2; ++b) {
        DescendantSpec spec{b, std::vector<long>(static_cast<std::size_t>(b), 0), top};
        spec.shifts[0] = -1;
        const HabiroTrunc high = descendant(o, spec);
        for (long m : checkpoints) {
            if (m > top) continue;
            DescendantSpec low = spec;
            low.level = m;
            const bool ok = project(high, m) == descendant(o, low);
            check(rep, ok, "project(level-" + std::to_string(top) + " b=" + std::to_string(b) +
                               " descendant, " + std::to_string(m) + ") matches direct computation");
        }
    }
    {
        const HabiroTrunc high = colored_invariant(o, 2, 1, top);
        for (long m : checkpoints) {
            if (m > top) continue;
            const bool ok = project(high, m) == colored_invariant(o, 2, 1, m);
            check(rep, ok, "project(level-" + std::to_string(top) +
                               " colored m=1, " + std::to_string(m) + ") matches direct computation");
        }
    }
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"basis", "integrality", "recurrences", "imk1", "vanishing", "tower"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "basis") return suite_basis(params);
    if (name == "integrality") return suite_integrality(params);
    if (name == "recurrences") return suite_recurrences(params);
    if (name == "imk1") return suite_imk1(params);
    if (name == "vanishing") return suite_vanishing(params);
    if (name == "tower") return suite_tower(params);
    throw Error("unknown verify suite '" + name + "'");
}

} // namespace qh
