#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhabiro/habiro.hpp"

namespace qh {

/// A polynomial-coefficient linear relation Σ coeffs[i]·member[i] ≡ 0 mod
/// (q;q)_{verified_level}. Coefficients live in Z[q^{±1}] (members are assumed
/// offset-normalized); not all zero; re-checkable at any level the members can
/// be recomputed at.
struct RelationCertificate {
    std::vector<std::string> members;
    std::vector<LaurentPoly> coeffs;
    long verified_level = 0;
};

/// Drop the q^{g/4} unit in front of a truncation (rank bookkeeping treats
/// members up to units).
HabiroTrunc normalize_offset(const HabiroTrunc& x);

/// Exact kernel of the shifted family {q^e·x_i : 0 ≤ e ≤ degree} mod
/// (q;q)_level. Kernel vectors are found by modular elimination with CRT and
/// rational reconstruction, then certified by exact integer re-verification;
/// the modular dimension bound makes the certified basis provably complete.
/// Members must share level and offset.
std::vector<RelationCertificate> relation_search(const std::vector<HabiroTrunc>& family,
                                                 const std::vector<std::string>& names,
                                                 long degree);

struct RankReport {
    long family_size = 0;
    long level = 0;
    long degree = 0;
    long rank = 0;
    std::vector<RelationCertificate> certificates;
};

/// rank = |family| − rank_{Q(q)}(relation coefficient vectors), the latter by
/// fraction-free Gaussian elimination on the polynomial matrix. Reported
/// together with (level, degree): truncation can only overcount relations and
/// bounded degree can only undercount them.
RankReport rank_estimate(const std::vector<HabiroTrunc>& family,
                         const std::vector<std::string>& names, long degree);

/// Recompute members at new_level and test the congruence there; updates
/// cert.verified_level on success.
bool verify_relation(RelationCertificate& cert, long new_level,
                     const std::function<HabiroTrunc(const std::string&, long)>& recompute);

/// Same, returning the residue on failure (nullopt = relation holds).
std::optional<LaurentPoly> relation_residue(
    const RelationCertificate& cert, long level,
    const std::function<HabiroTrunc(const std::string&, long)>& recompute);

/// Q(q)-rank of a polynomial matrix (fraction-free elimination, exact).
long poly_matrix_rank(std::vector<std::vector<LaurentPoly>> m);

/// Is the target coefficient vector in the Q(q)-span of the certificates'?
bool relation_in_span(const std::vector<RelationCertificate>& certs,
                      const std::vector<LaurentPoly>& target);

} // namespace qh
