#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhabiro/bigint.hpp"
#include "qhabiro/errors.hpp"

namespace qh {

/// Exact Laurent polynomial in q^{1/4} with Int coefficients.
///
/// A stored exponent e stands for q^{e/4}, so q itself is exponent 4 and
/// v = q^{1/2} is exponent 2. Zero coefficients are never stored. This is the
/// universal scalar of the library: every invariant, basis coefficient and
/// certificate is built out of these.
class LaurentPoly {
public:
    using Exp = std::int64_t;
    using Terms = std::map<Exp, Int>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly integer(Int c);
    static LaurentPoly monomial(Int c, Exp quarter_exp);
    /// q^k
    static LaurentPoly q_power(Exp k) { return monomial(1, 4 * k); }
    /// v^k = q^{k/2}
    static LaurentPoly v_power(Exp k) { return monomial(1, 2 * k); }
    /// q^{e/4}
    static LaurentPoly quarter_power(Exp e) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Smallest/largest stored exponent (quarter units). Throws on zero.
    Exp min_exp() const;
    Exp max_exp() const;

    Int coeff(Exp e) const;
    void add_term(Exp e, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& operator*=(const Int& c);
    friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }

    /// Multiply by q^{dq/4}.
    LaurentPoly shifted(Exp quarter_exp) const;

    /// Membership in Z[q^{±1}]: every exponent ≡ 0 (mod 4).
    bool in_z_q() const;
    /// Membership in Z[q^{±1/2}]: every exponent ≡ 0 (mod 2).
    bool in_z_v() const;

    /// If every exponent is congruent to the same residue r mod 4, returns r
    /// (0 for the zero polynomial); otherwise nullopt.
    std::optional<int> exp_residue_mod4() const;

    /// The substitution q^{1/4} → q^{-1/4} (an involutive ring map).
    LaurentPoly invert_q() const;

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }

    /// Human-readable form, e.g. "q^-1 + 1 + q"; exponents print as q^k or
    /// v^k when exact and as q^(e/4) otherwise.
    std::string str() const;

private:
    Terms terms_;
};

/// Thrown by exact_div when division is inexact; carries the remainder so an
/// integrality violation upstream can be reported with a witness.
class NotDivisibleError : public Error {
public:
    NotDivisibleError(const std::string& what, LaurentPoly remainder)
        : Error(what), remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

/// Quantum integer [n] = (v^n − v^{−n})/(v − v^{−1}) = Σ_{j=0}^{n−1} v^{n−1−2j}.
LaurentPoly qint(long n);

/// Balanced bracket {n} = v^n − v^{−n}. Defined for all integers ({−n} = −{n}).
LaurentPoly qbrace(long n);

/// {n}! = Π_{j=1}^n {j}, with {0}! = 1.
LaurentPoly qbrace_fact(long n);

/// Balanced q-binomial {n}!/({k}!{n−k}!); zero outside 0 ≤ k ≤ n.
LaurentPoly qbinom(long n, long k);

/// (q^{1+shift}; q)_n = Π_{j=1}^n (1 − q^{shift+j}).
LaurentPoly pochhammer(long n, long shift);

/// (q;q)_n, cached across calls.
const LaurentPoly& qpoch_cached(long n);

/// Exact division: returns h with f = g·h, throws NotDivisibleError otherwise.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Divisibility test without the throw.
bool divides(const LaurentPoly& g, const LaurentPoly& f);

/// Canonical representative of f mod (q;q)_n in Z[q]: nonnegative exponents,
/// q-degree < n(n+1)/2. Negative powers of q are cleared through the inverse
/// of q mod (q;q)_n, which exists because (q;q)_n has constant term 1.
/// Requires f ∈ Z[q^{±1}] (exponents ≡ 0 mod 4); idempotent.
LaurentPoly reduce_mod(const LaurentPoly& f, long level);

} // namespace qh
