#include "qhabiro/cyclo.hpp"

#include <mutex>
#include <sstream>

namespace qh {

namespace {

// Exact division of integer polynomials, ascending dense coefficients.
// Divisor must be nonzero with leading coefficient ±1 here (cyclotomics are
// monic); remainder must vanish.
std::vector<Int> poly_exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Int> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw Error("poly_exact_div: zero divisor");
    if (num.empty()) return {};
    const long dd = static_cast<long>(d.size()) - 1;
    long dn = static_cast<long>(num.size()) - 1;
    std::vector<Int> quot(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    while (dn >= dd) {
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), num[static_cast<std::size_t>(dn)].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw Error("poly_exact_div: inexact division");
        quot[static_cast<std::size_t>(dn - dd)] = qc;
        for (long i = 0; i <= dd; ++i)
            num[static_cast<std::size_t>(dn - dd + i)] -= qc * d[static_cast<std::size_t>(i)];
        while (dn >= 0 && num[static_cast<std::size_t>(dn)] == 0) --dn;
    }
    if (dn >= 0) throw Error("poly_exact_div: nonzero remainder");
    return quot;
}

void poly_rem_monic_inplace(std::vector<Int>& a, const std::vector<Int>& p) {
    const long dp = static_cast<long>(p.size()) - 1;
    long da = static_cast<long>(a.size()) - 1;
    while (da >= 0 && a[static_cast<std::size_t>(da)] == 0) --da;
    while (da >= dp) {
        const Int qc = a[static_cast<std::size_t>(da)]; // p monic
        for (long i = 0; i <= dp; ++i)
            a[static_cast<std::size_t>(da - dp + i)] -= qc * p[static_cast<std::size_t>(i)];
        while (da >= 0 && a[static_cast<std::size_t>(da)] == 0) --da;
    }
    a.resize(static_cast<std::size_t>(da + 1));
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, std::vector<Int>> cache;
    if (n < 1) throw Error("cyclotomic_polynomial: order must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto compute = [](auto&& self, long m) -> const std::vector<Int>& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1; // x^m − 1
        for (long d = 1; d < m; ++d) {
            if (m % d == 0) num = poly_exact_div(std::move(num), self(self, d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return compute(compute, n);
}

CyclotomicNumber::CyclotomicNumber(long order) : order_(order) {
    if (order < 1) throw Error("CyclotomicNumber: order must be >= 1");
    coords_.assign(cyclotomic_polynomial(order).size() - 1, Int(0));
}

CyclotomicNumber CyclotomicNumber::one(long order) {
    CyclotomicNumber c(order);
    c.coords_[0] = 1;
    return c;
}

CyclotomicNumber CyclotomicNumber::root_power(long order, long e) {
    CyclotomicNumber c(order);
    long r = e % order;
    if (r < 0) r += order;
    std::vector<Int> a(static_cast<std::size_t>(r) + 1, Int(0));
    a[static_cast<std::size_t>(r)] = 1;
    poly_rem_monic_inplace(a, cyclotomic_polynomial(order));
    for (std::size_t i = 0; i < a.size(); ++i) c.coords_[i] = a[i];
    return c;
}

CyclotomicNumber CyclotomicNumber::from_coords(long order, std::vector<Int> coords) {
    CyclotomicNumber c(order);
    if (coords.size() != c.coords_.size())
        throw Error("CyclotomicNumber: wrong coordinate count");
    c.coords_ = std::move(coords);
    return c;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (order_ != rhs.order_) throw Error("CyclotomicNumber: order mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    if (order_ != rhs.order_) throw Error("CyclotomicNumber: order mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order()) throw Error("CyclotomicNumber: order mismatch");
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    std::vector<Int> prod(ca.size() + cb.size(), Int(0));
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] != 0) prod[i + j] += ca[i] * cb[j];
        }
    }
    poly_rem_monic_inplace(prod, cyclotomic_polynomial(a.order()));
    prod.resize(ca.size(), Int(0));
    return CyclotomicNumber::from_coords(a.order(), std::move(prod));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& rhs) const {
    return order_ == rhs.order_ && coords_ == rhs.coords_;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    os << "Z[zeta_" << order_ << "](";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].get_str();
    }
    os << ")";
    return os.str();
}

long fourth_root_exponent(long n) {
    if (n < 1) throw Error("fourth_root_exponent: order must be >= 1");
    if (n % 2 == 0) throw EvenOrderError("fourth_root_exponent: order must be odd");
    if (n == 1) return 0;
    // 4^{-1} mod n for odd n.
    long inv = 1;
    while ((4 * inv) % n != 1) ++inv;
    return inv;
}

CyclotomicNumber cyclo_from_laurent(const LaurentPoly& f, long order) {
    if (order % 2 == 0) throw EvenOrderError("cyclo_from_laurent: order must be odd");
    const long inv4 = fourth_root_exponent(order);
    std::vector<Int> acc(static_cast<std::size_t>(order), Int(0));
    for (const auto& [e, c] : f.terms()) {
        long t = (e * inv4) % order;
        if (t < 0) t += order;
        acc[static_cast<std::size_t>(t)] += c;
    }
    poly_rem_monic_inplace(acc, cyclotomic_polynomial(order));
    acc.resize(cyclotomic_polynomial(order).size() - 1, Int(0));
    return CyclotomicNumber::from_coords(order, std::move(acc));
}

bool vanishing_check(long order, long k) {
    if (order < 3 || order % 2 == 0) throw EvenOrderError("vanishing_check: order must be odd >= 3");
    if (k < 0) throw Error("vanishing_check: k must be >= 0");
    // (q^{k+1};q)_{k+1}/(1−q) is an honest integer polynomial; evaluating it
    // at ζ_N is the same element as dividing inside Z[ζ_N].
    const LaurentPoly num = pochhammer(k + 1, k);
    const LaurentPoly d = pochhammer(1, 0);
    return cyclo_from_laurent(exact_div(num, d), order).is_zero();
}

} // namespace qh
