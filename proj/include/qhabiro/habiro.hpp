#pragma once

#include <vector>

#include "qhabiro/cyclo.hpp"
#include "qhabiro/laurent.hpp"

namespace qh {

/// A truncated Habiro-ring element q^{offset/4}·rep with rep the canonical
/// representative mod (q;q)_level (a q-polynomial of degree < level(level+1)/2
/// with nonnegative exponents). Offsets are kept exactly, never normalized
/// mod 4, so the q^{g/4}-grading carried by surgery values stays visible and
/// sign/offset bugs cannot hide.
struct HabiroTrunc {
    long level = 1;
    long offset = 0;
    LaurentPoly rep;

    bool operator==(const HabiroTrunc& rhs) const {
        return level == rhs.level && offset == rhs.offset && rep == rhs.rep;
    }
    bool operator!=(const HabiroTrunc& rhs) const { return !(*this == rhs); }

    bool is_zero() const { return rep.is_zero(); }

    /// rep·q^{offset/4} as a plain Laurent polynomial.
    LaurentPoly lift() const { return rep.shifted(offset); }
};

/// Linking data of a colored framed link (plus optional surgery components):
/// lk is the symmetric r×r linking matrix with framings on the diagonal,
/// colors are the ℓ_i of the V_{ℓ_i}-colored components, cyclo_colors the k_i
/// of the P'_{k_i}-colored ones. surgery_lk holds lk(L'_i, L_j) rows and
/// surgery_mutual the pairwise lk(L'_i, L'_{i'}) entries used by the evenness
/// test.
struct LinkingData {
    std::vector<std::vector<long>> lk;
    std::vector<long> colors;
    std::vector<long> cyclo_colors;
    std::vector<std::vector<long>> surgery_lk;
    std::vector<std::vector<long>> surgery_mutual;

    void validate() const;
};

/// Build a truncation from an element of q^{offset/4}·Z[q^{±1}]: raw must have
/// every exponent ≡ offset (mod 4).
HabiroTrunc habiro_make(long level, long offset, const LaurentPoly& raw);

HabiroTrunc habiro_one(long level);
HabiroTrunc habiro_zero(long level);

/// Addition aligns offsets that differ by a multiple of 4 (a power of q moves
/// between offset and rep); anything else is an OffsetMismatchError. The
/// result carries level = min(levels) and offset = min(offsets).
HabiroTrunc habiro_add(const HabiroTrunc& x, const HabiroTrunc& y);
HabiroTrunc habiro_sub(const HabiroTrunc& x, const HabiroTrunc& y);
HabiroTrunc habiro_mul(const HabiroTrunc& x, const HabiroTrunc& y);

/// Scale by c ∈ Z[q^{±1}] (exponents ≡ 0 mod 4).
HabiroTrunc habiro_scale(const HabiroTrunc& x, const LaurentPoly& c);

/// Truncate to a lower level; functorial.
HabiroTrunc project(const HabiroTrunc& x, long level);

/// Quarter-power offsets of colored-link invariants:
///   g = Σ_{i,j} lk(L_i,L_j)·ℓ_i·ℓ_j + 2·Σ_i (lk(L_i,L_i)+1)·ℓ_i,
/// and f adds the cyclotomic-color term Σ_i k_i(k_i−1)/2.
long offset_f(const LinkingData& d);
long offset_g(const LinkingData& d);

/// Evenness condition: surgery components mutually unlinked and every
/// ε_i = Σ_j lk(L'_i, L_j)·ℓ_j even.
bool evenness_check(const LinkingData& d);

/// Membership of f in ((q^{k+1};q)_{k+1}/(1−q))·Z[q^{±1}] after stripping the
/// uniform q^{·/4} offset. Returns false (never throws) on failure.
bool integrality_check(const LaurentPoly& f, long k);
bool integrality_check(const HabiroTrunc& f, long k);
/// The weaker (q;q)_k-membership test.
bool integrality_check_weak(const LaurentPoly& f, long k);

/// Evaluate at q = ζ_N (odd N, level ≥ N so the class is well defined) with
/// q^{1/4} realized as the canonical fourth root ζ_N^{4^{−1} mod N}.
CyclotomicNumber evaluate_at_root(const HabiroTrunc& x, long order);

} // namespace qh
