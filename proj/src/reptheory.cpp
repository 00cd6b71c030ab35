#include "qhabiro/reptheory.hpp"

#include <mutex>

namespace qh {

void PPrimeVector::add_term(long k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(k);
    if (it == coeffs.end()) {
        coeffs.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

PPrimeVector& PPrimeVector::operator+=(const PPrimeVector& rhs) {
    for (const auto& [k, c] : rhs.coeffs) add_term(k, c);
    return *this;
}

LaurentPoly PPrimeVector::coeff(long k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? LaurentPoly::zero() : it->second;
}

TwoVarLaurent TwoVarLaurent::monomial(Int c, std::int64_t a, std::int64_t b) {
    TwoVarLaurent t;
    if (c != 0) t.terms_[{a, b}] = std::move(c);
    return t;
}

TwoVarLaurent TwoVarLaurent::from_laurent(const LaurentPoly& p) {
    TwoVarLaurent t;
    for (const auto& [e, c] : p.terms()) t.terms_[{e, 0}] = c;
    return t;
}

void TwoVarLaurent::add_term(std::int64_t a, std::int64_t b, const Int& c) {
    if (c == 0) return;
    const Key key{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TwoVarLaurent& TwoVarLaurent::operator+=(const TwoVarLaurent& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

TwoVarLaurent& TwoVarLaurent::operator-=(const TwoVarLaurent& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TwoVarLaurent operator*(const TwoVarLaurent& a, const TwoVarLaurent& b) {
    TwoVarLaurent r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

LaurentPoly TwoVarLaurent::eval_at_u_power(long k) const {
    LaurentPoly p;
    for (const auto& [key, c] : terms_) p.add_term(key.first + 2 * k * key.second, c);
    return p;
}

TwoVarLaurent TwoVarLaurent::exact_div_one_minus_u2qt(long t) const {
    // Solve F = Q·(1 − q^t u²) coefficient-wise in ascending u-exponent:
    // Q_b = F_b + q^t·Q_{b−2}.
    if (is_zero()) return zero();
    std::int64_t bmin = terms_.begin()->first.second, bmax = bmin;
    for (const auto& [key, c] : terms_) {
        bmin = std::min(bmin, key.second);
        bmax = std::max(bmax, key.second);
    }
    // Group coefficients of u^b as Laurent polynomials in q^{1/4}.
    std::map<std::int64_t, LaurentPoly> rows;
    for (const auto& [key, c] : terms_) {
        LaurentPoly& row = rows[key.second];
        row.add_term(key.first, c);
    }
    std::map<std::int64_t, LaurentPoly> q;
    for (std::int64_t b = bmin; b <= bmax; ++b) {
        LaurentPoly qb;
        auto itf = rows.find(b);
        if (itf != rows.end()) qb = itf->second;
        auto itq = q.find(b - 2);
        if (itq != q.end()) qb += itq->second.shifted(4 * t);
        if (!qb.is_zero()) {
            if (b > bmax - 2) {
                // A genuine quotient cannot reach here: u²·Q would overflow F.
                throw NotDivisibleError("TwoVarLaurent: not divisible by 1 - q^t u^2",
                                        LaurentPoly::zero());
            }
            q.emplace(b, std::move(qb));
        }
    }
    TwoVarLaurent result;
    for (const auto& [b, row] : q) {
        for (const auto& [a, c] : row.terms()) result.add_term(a, b, c);
    }
    return result;
}

PPrimeVector vn_to_pprime(long n) {
    if (n < 0) throw Error("vn_to_pprime: n must be >= 0");
    PPrimeVector v;
    for (long i = 0; i <= n; ++i) v.add_term(i, qbinom(n + i + 1, 2 * i + 1) * qbrace_fact(i));
    return v;
}

PPrimeVector pprime_mul(long m, long n) {
    if (m < 0 || n < 0) throw Error("pprime_mul: indices must be >= 0");
    PPrimeVector v;
    const LaurentPoly top = qbrace_fact(m + n);
    for (long i = 0; i <= std::min(m, n); ++i) {
        const LaurentPoly den = qbrace_fact(i) * qbrace_fact(m - i) * qbrace_fact(n - i);
        v.add_term(m + n - i, exact_div(top, den));
    }
    return v;
}

TwoVarLaurent a_coeff(long s, long i) {
    if (s < 0 || i < 0 || s > i) throw Error("a_coeff: need 0 <= s <= i");
    // a^s_i(v,u) = qbinom(i,s)·Π_{j'=1}^{2i−s} (u·v^{s−i+j'} − u^{−1}·v^{i−s−j'}),
    // the closed form of the coefficient of P'_{k+s} in {i}!·P'_i·P'_k.
    TwoVarLaurent r = TwoVarLaurent::from_laurent(qbinom(i, s));
    for (long j = 1; j <= 2 * i - s; ++j) {
        TwoVarLaurent f;
        f.add_term(2 * (s - i + j), 1, 1);
        f.add_term(2 * (i - s - j), -1, -1);
        r = r * f;
    }
    return r;
}

LaurentPoly a_coeff_at(long s, long i, long k) {
    if (s < 0 || i < 0 || s > i) throw Error("a_coeff_at: need 0 <= s <= i");
    LaurentPoly r = qbinom(i, s);
    for (long j = 1; j <= 2 * i - s; ++j) r *= qbrace(k - i + s + j);
    return r;
}

namespace {

const TwoVarLaurent& gamma_cached(long i, long ell) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, TwoVarLaurent> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({i, ell});
    if (it == cache.end()) {
        // V_ell·P'_k = Σ_t qbinom(ell+t+1, 2t+1)·({t}!·P'_t·P'_k) and a^i_t is
        // the P'_{k+i}-coefficient of {t}!·P'_t·P'_k, so the binomial weight
        // enters bare.
        TwoVarLaurent g;
        for (long t = i; t <= ell; ++t) {
            g += TwoVarLaurent::from_laurent(qbinom(ell + t + 1, 2 * t + 1)) * a_coeff(i, t);
        }
        it = cache.emplace(std::make_pair(i, ell), std::move(g)).first;
    }
    return it->second;
}

} // namespace

TwoVarLaurent gamma_coeff(long i, long ell) {
    if (i < 0 || ell < 0 || i > ell) throw Error("gamma_coeff: need 0 <= i <= ell");
    return gamma_cached(i, ell);
}

LaurentPoly gamma_at(long i, long ell, long k) {
    if (i < 0 || ell < 0 || i > ell) throw Error("gamma_at: need 0 <= i <= ell");
    LaurentPoly r;
    for (long t = i; t <= ell; ++t) r += qbinom(ell + t + 1, 2 * t + 1) * a_coeff_at(i, t, k);
    return r;
}

PPrimeVector v_times_pprime(long k) {
    if (k < 0) throw Error("v_times_pprime: k must be >= 0");
    PPrimeVector v;
    v.add_term(k + 1, qbrace(k + 1));
    LaurentPoly c;
    c.add_term(2 * (2 * k + 1), 1);
    c.add_term(-2 * (2 * k + 1), 1);
    v.add_term(k, c);
    return v;
}

std::map<long, Int> cable_expand(long m) {
    if (m < 0) throw Error("cable_expand: m must be >= 0");
    std::map<long, Int> cur;
    cur[0] = 1;
    for (long step = 0; step < m; ++step) {
        std::map<long, Int> next;
        for (const auto& [ell, c] : cur) {
            next[ell + 1] += c;
            if (ell >= 1) next[ell - 1] += c;
        }
        for (auto it = next.begin(); it != next.end();) {
            it = it->second == 0 ? next.erase(it) : std::next(it);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace qh
