#pragma once

#include <string>
#include <vector>

#include "qhabiro/habiro.hpp"
#include "qhabiro/knotdata.hpp"
#include "qhabiro/reptheory.hpp"

namespace qh {

/// One descendant of the surgery sum for M = S³_{K,−1/b}: the summand is
/// weighted by q^{k·m_0 + Σ_j ℓ_j·m_j} with shifts = (m_0, …, m_{b−1}).
struct DescendantSpec {
    long b = 1;
    std::vector<long> shifts;
    long level = 1;

    void validate() const;
    bool operator==(const DescendantSpec& rhs) const {
        return b == rhs.b && shifts == rhs.shifts && level == rhs.level;
    }
};

/// Cut-off for the outer k-sum that is provably exact mod (q;q)_level: the
/// k-th summand lies in (q;q)_k·Z[q^{±1}] up to a unit, and (q;q)_k ∈
/// ((q;q)_n) for k ≥ n.
struct SummationBound {
    long kmax = 0;
};

SummationBound summation_bound(long level, long max_shift = 0);

/// Surgery kernel α^{(b)}_{k,ℓ⃗}(q); requires k ≥ ℓ_1 ≥ … ≥ ℓ_{b−1} ≥ 0.
/// b = 1 gives q^{k(k+3)/4}; b = 2 gives q^{k(k+3)/4+ℓ(ℓ+1)}·(q;q)_k/((q;q)_ℓ(q;q)_{k−ℓ}).
LaurentPoly kernel_alpha(long b, long k, const std::vector<long>& ell);

/// Which reading of the general-b kernel denominator is in force; decided by
/// the b = 2 specialization test.
enum class KernelReading { EllFirst, KMinusEllFirst };
KernelReading selected_kernel_reading();
std::string kernel_reading_description();

HabiroTrunc descendant(const KnotOracle& o, const DescendantSpec& spec);
/// Same with an explicit k-sum cut-off (for truncation-exactness checks).
HabiroTrunc descendant_bounded(const KnotOracle& o, const DescendantSpec& spec, long kmax);

/// I_M at truncation level `level` (all shifts zero).
HabiroTrunc invariant(const KnotOracle& o, long b, long level);

/// Orientation reversal: q → q^{−1} on the class; offset negates. Well
/// defined because (q;q)_n is invariant up to a unit under q → q^{−1}.
HabiroTrunc mirror(const HabiroTrunc& x);

/// I_{(M,K_m)}: the surgery core colored by V_m, via V_m·P'_k = Σ_j γ^j_m·P'_{k+j}.
HabiroTrunc colored_invariant(const KnotOracle& o, long b, long m, long level);

/// φ(K^{(m)}) = (−1)^m Σ_ℓ c_{m,ℓ}·I_{(M,K_ℓ)} with c from cable_expand.
HabiroTrunc phi_cable(const KnotOracle& o, long b, long m, long level);

struct DescendantTerm {
    LaurentPoly coeff;
    DescendantSpec spec;
};

/// An explicit Z[q^{±1/4}]-combination of descendants plus a constant whose
/// value equals colored_invariant(o, b, m, ·).
struct Decomposition {
    long b = 1;
    long m = 0;
    std::vector<DescendantTerm> terms;
    LaurentPoly constant;
};

Decomposition decompose_to_descendants(const KnotOracle& o, long b, long m, long level);
HabiroTrunc evaluate_decomposition(const KnotOracle& o, const Decomposition& d, long level);

/// WRT value at an odd-order root: the k-sum truncated at (N−1)/3 evaluated
/// directly in Z[ζ_N].
CyclotomicNumber wrt_at_root(const KnotOracle& o, long b, long m, long order);

struct RecurrenceReport {
    long range_k = 0;
    long range_l = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Exact check of both q-difference equations of the b = 2 kernel.
RecurrenceReport verify_alpha_recurrences(long range_k, long range_l);

} // namespace qh
