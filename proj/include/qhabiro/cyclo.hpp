#pragma once

#include <vector>

#include "qhabiro/laurent.hpp"

namespace qh {

/// Exact element of Z[ζ_N] for odd N ≥ 1, stored as coordinates with respect
/// to the power basis of Z[x]/Φ_N(x). Canonical (reduced mod Φ_N), so equality
/// is coordinate equality.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(long order);

    long order() const { return order_; }
    const std::vector<Int>& coords() const { return coords_; }

    static CyclotomicNumber zero(long order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(long order);
    /// ζ_N^e (e arbitrary integer).
    static CyclotomicNumber root_power(long order, long e);
    static CyclotomicNumber from_coords(long order, std::vector<Int> coords);

    bool is_zero() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);

    bool operator==(const CyclotomicNumber& rhs) const;
    bool operator!=(const CyclotomicNumber& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    long order_;
    std::vector<Int> coords_; // length deg Φ_N
};

/// Φ_N as a dense monic integer polynomial (ascending coefficients); computed
/// by exact division of x^N − 1 by the proper-divisor cyclotomics, cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// 4^{−1} mod N: the exponent making ζ_N^e the canonical fourth root of ζ_N
/// inside μ_N. Throws EvenOrderError for even N.
long fourth_root_exponent(long n);

/// Substitute q^{1/4} → ζ_N^{4^{−1} mod N} into f and reduce mod Φ_N.
CyclotomicNumber cyclo_from_laurent(const LaurentPoly& f, long order);

/// True iff (ξ^{k+1};ξ)_{k+1}/(1−ξ) = 0 in Z[ζ_N]. The factor exponents run
/// over k+1..2k+1, so for k ≤ N this vanishes exactly when 2k+1 ≥ N; every
/// surgery summand is divisible by it, which is what truncates root-of-unity
/// evaluations.
bool vanishing_check(long order, long k);

} // namespace qh
