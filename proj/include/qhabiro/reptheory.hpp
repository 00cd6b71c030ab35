#pragma once

#include <map>
#include <utility>

#include "qhabiro/laurent.hpp"

namespace qh {

/// Finite Z[q^{±1/4}]-linear combination Σ_k coeffs[k]·P'_k of the cyclotomic
/// basis elements P'_k = P_k/{k}!. Zero coefficients are never stored.
struct PPrimeVector {
    std::map<long, LaurentPoly> coeffs;

    void add_term(long k, const LaurentPoly& c);
    PPrimeVector& operator+=(const PPrimeVector& rhs);
    bool operator==(const PPrimeVector& rhs) const { return coeffs == rhs.coeffs; }
    bool operator!=(const PPrimeVector& rhs) const { return !(*this == rhs); }
    LaurentPoly coeff(long k) const;
    bool is_zero() const { return coeffs.empty(); }
};

/// Laurent polynomial in two variables: q^{1/4} (exponent a, quarter units,
/// v = q^{1/2} is a = 2) and u (exponent b). Hosts the structure constants
/// a^s_i(v,u) and γ^i_ℓ(v,u), whose specializations u = v^k recover the
/// one-variable coefficients for every k.
class TwoVarLaurent {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (quarter exp of q, exp of u)
    using Terms = std::map<Key, Int>;

    TwoVarLaurent() = default;
    static TwoVarLaurent zero() { return TwoVarLaurent(); }
    static TwoVarLaurent one() { return monomial(1, 0, 0); }
    static TwoVarLaurent monomial(Int c, std::int64_t quarter_exp, std::int64_t u_exp);
    static TwoVarLaurent from_laurent(const LaurentPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(std::int64_t a, std::int64_t b, const Int& c);

    TwoVarLaurent& operator+=(const TwoVarLaurent& rhs);
    TwoVarLaurent& operator-=(const TwoVarLaurent& rhs);
    friend TwoVarLaurent operator+(TwoVarLaurent a, const TwoVarLaurent& b) { return a += b; }
    friend TwoVarLaurent operator-(TwoVarLaurent a, const TwoVarLaurent& b) { return a -= b; }
    friend TwoVarLaurent operator*(const TwoVarLaurent& a, const TwoVarLaurent& b);
    bool operator==(const TwoVarLaurent& rhs) const { return terms_ == rhs.terms_; }

    /// Substitute u = v^k.
    LaurentPoly eval_at_u_power(long k) const;

    /// Exact division by (1 − q^t·u²); throws NotDivisibleError if inexact.
    TwoVarLaurent exact_div_one_minus_u2qt(long t) const;

private:
    Terms terms_;
};

/// V_n = Σ_{i=0}^n qbinom(n+i+1, 2i+1)·{i}!·P'_i.
PPrimeVector vn_to_pprime(long n);

/// P'_m·P'_n = Σ_i ({m+n}!/({i}!{m−i}!{n−i}!))·P'_{m+n−i}.
PPrimeVector pprime_mul(long m, long n);

/// Structure constant a^s_i(v,u): the coefficient of P'_{k+s} in {i}!·P'_i·P'_k
/// is a^s_i(v,v^k) for every k ≥ 0. Requires 0 ≤ s ≤ i.
TwoVarLaurent a_coeff(long s, long i);
LaurentPoly a_coeff_at(long s, long i, long k);

/// γ^i_ℓ(v,u): V_ℓ·P'_k = Σ_{i=0}^ℓ γ^i_ℓ(v,v^k)·P'_{k+i}. Requires 0 ≤ i ≤ ℓ.
TwoVarLaurent gamma_coeff(long i, long ell);
LaurentPoly gamma_at(long i, long ell, long k);

/// V·P'_k = {k+1}·P'_{k+1} + (v^{2k+1}+v^{−2k−1})·P'_k.
PPrimeVector v_times_pprime(long k);

/// Clebsch–Gordan: V^{⊗m} = Σ_ℓ c_{m,ℓ}·V_ℓ via V·V_n = V_{n+1} + V_{n−1}.
std::map<long, Int> cable_expand(long m);

} // namespace qh
