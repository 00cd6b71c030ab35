#include "qhabiro/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qh {

LaurentPoly LaurentPoly::integer(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_[0] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Int c, Exp quarter_exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[quarter_exp] = std::move(c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Exp LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exp LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(Exp e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

namespace {

// Dense product over the quarter-exponent range. Both inputs nonzero.
LaurentPoly mul_dense(const LaurentPoly& a, const LaurentPoly& b) {
    const auto amin = a.min_exp(), amax = a.max_exp();
    const auto bmin = b.min_exp(), bmax = b.max_exp();
    const std::size_t span = static_cast<std::size_t>((amax - amin) + (bmax - bmin)) + 1;
    std::vector<Int> acc(span);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            acc[static_cast<std::size_t>((ea - amin) + (eb - bmin))] += ca * cb;
        }
    }
    LaurentPoly r;
    for (std::size_t i = 0; i < span; ++i) {
        if (acc[i] != 0) r.add_term(amin + bmin + static_cast<LaurentPoly::Exp>(i), acc[i]);
    }
    return r;
}

// Sparse accumulation, better when one factor has few terms.
LaurentPoly mul_sparse(const LaurentPoly& small, const LaurentPoly& big) {
    LaurentPoly r;
    for (const auto& [ea, ca] : small.terms()) {
        for (const auto& [eb, cb] : big.terms()) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

} // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero();
    const auto na = a.term_count(), nb = b.term_count();
    if (na <= 24 || nb <= 24) {
        return na <= nb ? mul_sparse(a, b) : mul_sparse(b, a);
    }
    return mul_dense(a, b);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(Exp quarter_exp) const {
    if (quarter_exp == 0) return *this;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + quarter_exp, c);
    return r;
}

bool LaurentPoly::in_z_q() const {
    for (const auto& [e, c] : terms_)
        if (e % 4 != 0) return false;
    return true;
}

bool LaurentPoly::in_z_v() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

std::optional<int> LaurentPoly::exp_residue_mod4() const {
    if (terms_.empty()) return 0;
    const int r = static_cast<int>(((terms_.begin()->first % 4) + 4) % 4);
    for (const auto& [e, c] : terms_)
        if (((e % 4) + 4) % 4 != r) return std::nullopt;
    return r;
}

LaurentPoly LaurentPoly::invert_q() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (!unit) os << a.get_str() << "*";
        if (e % 4 == 0) {
            os << "q";
            if (e != 4) os << "^" << (e / 4);
        } else if (e % 2 == 0) {
            os << "v";
            if (e != 2) os << "^" << (e / 2);
        } else {
            os << "q^(" << e << "/4)";
        }
    }
    return os.str();
}

LaurentPoly qint(long n) {
    if (n < 0) throw Error("qint: negative argument");
    LaurentPoly r;
    for (long j = 0; j < n; ++j) r.add_term(2 * (n - 1 - 2 * j), 1);
    return r;
}

LaurentPoly qbrace(long n) {
    LaurentPoly r;
    if (n == 0) return r;
    r.add_term(2 * n, 1);
    r.add_term(-2 * n, -1);
    return r;
}

LaurentPoly qbrace_fact(long n) {
    if (n < 0) throw Error("qbrace_fact: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (long j = 1; j <= n; ++j) r *= qbrace(j);
    return r;
}

LaurentPoly qbinom(long n, long k) {
    if (n < 0) throw Error("qbinom: negative n");
    if (k < 0 || k > n) return LaurentPoly::zero();
    return exact_div(qbrace_fact(n), qbrace_fact(k) * qbrace_fact(n - k));
}

LaurentPoly pochhammer(long n, long shift) {
    if (n < 0 || shift < 0) throw Error("pochhammer: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (long j = 1; j <= n; ++j) {
        LaurentPoly f = LaurentPoly::one();
        f.add_term(4 * (shift + j), -1);
        r *= f;
    }
    return r;
}

const LaurentPoly& qpoch_cached(long n) {
    static std::mutex mu;
    static std::map<long, LaurentPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, pochhammer(n, 0)).first;
    return it->second;
}

namespace {

// Dense polynomial in x = q^{1/4}: c[i] is the coefficient of x^{base+i}.
struct XDense {
    LaurentPoly::Exp base = 0;
    std::vector<Int> c;
};

XDense to_xdense(const LaurentPoly& p) {
    XDense d;
    if (p.is_zero()) return d;
    d.base = p.min_exp();
    d.c.assign(static_cast<std::size_t>(p.max_exp() - d.base) + 1, Int(0));
    for (const auto& [e, v] : p.terms()) d.c[static_cast<std::size_t>(e - d.base)] = v;
    return d;
}

LaurentPoly from_xdense(const XDense& d) {
    LaurentPoly p;
    for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (d.c[i] != 0) p.add_term(d.base + static_cast<LaurentPoly::Exp>(i), d.c[i]);
    }
    return p;
}

long top_nonzero(const std::vector<Int>& c) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] != 0) return static_cast<long>(i);
    }
    return -1;
}

} // namespace

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error("exact_div: division by zero");
    if (f.is_zero()) return LaurentPoly::zero();

    // Normalize both to honest polynomials in x = q^{1/4}; units ±x^k move the
    // question entirely into Z[x].
    XDense fd = to_xdense(f);
    XDense gd = to_xdense(g);
    const long dg = top_nonzero(gd.c);
    std::vector<Int> rem = fd.c;
    long dr = top_nonzero(rem);
    std::vector<Int> quot(rem.size(), Int(0));
    const Int& glead = gd.c[static_cast<std::size_t>(dg)];

    while (dr >= dg) {
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[static_cast<std::size_t>(dr)].get_mpz_t(),
                    glead.get_mpz_t());
        if (r != 0) {
            LaurentPoly w = from_xdense({fd.base, rem});
            throw NotDivisibleError("exact_div: leading coefficient does not divide", w);
        }
        quot[static_cast<std::size_t>(dr - dg)] = qc;
        for (long i = 0; i <= dg; ++i) {
            if (gd.c[static_cast<std::size_t>(i)] != 0)
                rem[static_cast<std::size_t>(dr - dg + i)] -= qc * gd.c[static_cast<std::size_t>(i)];
        }
        dr = top_nonzero(rem);
    }
    if (dr >= 0) {
        LaurentPoly w = from_xdense({fd.base, rem});
        throw NotDivisibleError("exact_div: nonzero remainder", w);
    }
    XDense qd;
    qd.base = fd.base - gd.base;
    qd.c = std::move(quot);
    return from_xdense(qd);
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) {
    try {
        exact_div(f, g);
        return true;
    } catch (const NotDivisibleError&) {
        return false;
    }
}

namespace {

// Dense polynomial in q (not q^{1/4}) with nonnegative exponents.
using QVec = std::vector<Int>;

void qvec_rem_inplace(QVec& a, const QVec& p) {
    const long dp = static_cast<long>(p.size()) - 1; // p monic up to sign, lead ±1
    long da = top_nonzero(a);
    const Int& plead = p[static_cast<std::size_t>(dp)];
    while (da >= dp) {
        // (q;q)_n has leading coefficient ±1, so this division is always exact.
        Int qc = a[static_cast<std::size_t>(da)];
        if (plead == -1) qc = -qc;
        for (long i = 0; i <= dp; ++i) {
            if (p[static_cast<std::size_t>(i)] != 0)
                a[static_cast<std::size_t>(da - dp + i)] -= qc * p[static_cast<std::size_t>(i)];
        }
        da = top_nonzero(a);
    }
    a.resize(static_cast<std::size_t>(std::max<long>(da + 1, 0)));
}

// a ← a·q^{-1} mod (q;q)_n, using that (q;q)_n has constant term 1:
// the unique representative y with q·y ≡ a is (a − a₀·(q;q)_n)/q.
void qvec_divide_q_inplace(QVec& a, const QVec& p) {
    if (a.empty()) return;
    const Int a0 = a[0];
    if (a0 != 0) {
        for (std::size_t i = 0; i < p.size() && i < a.size(); ++i) a[i] -= a0 * p[i];
        if (a.size() < p.size()) {
            const std::size_t old = a.size();
            a.resize(p.size());
            for (std::size_t i = old; i < p.size(); ++i) a[i] = -a0 * p[i];
        }
    }
    a.erase(a.begin());
}

const QVec& qpoch_qvec_cached(long n) {
    static std::mutex mu;
    static std::map<long, QVec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        const LaurentPoly& p = qpoch_cached(n);
        QVec v(static_cast<std::size_t>(p.max_exp() / 4) + 1, Int(0));
        for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e / 4)] = c;
        it = cache.emplace(n, std::move(v)).first;
    }
    return it->second;
}

} // namespace

LaurentPoly reduce_mod(const LaurentPoly& f, long level) {
    if (level < 1) throw LevelError("reduce_mod: level must be >= 1");
    if (!f.in_z_q()) throw Error("reduce_mod: operand has fractional q-exponents");
    if (f.is_zero()) return f;

    const QVec& p = qpoch_qvec_cached(level);
    const long qmin = f.min_exp() / 4;
    const long t = qmin < 0 ? -qmin : 0;

    // Work with f·q^t, a genuine polynomial in q.
    QVec a(static_cast<std::size_t>(f.max_exp() / 4 + t) + 1, Int(0));
    for (const auto& [e, c] : f.terms()) a[static_cast<std::size_t>(e / 4 + t)] = c;

    qvec_rem_inplace(a, p);
    for (long i = 0; i < t; ++i) qvec_divide_q_inplace(a, p);

    LaurentPoly r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) r.add_term(4 * static_cast<LaurentPoly::Exp>(i), a[i]);
    }
    return r;
}

} // namespace qh
