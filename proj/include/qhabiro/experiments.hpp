#pragma once

#include "qhabiro/json_io.hpp"
#include "qhabiro/knotdata.hpp"
#include "qhabiro/ranklab.hpp"
#include "qhabiro/surgery.hpp"

namespace qh {

/// One rank experiment: the same family examined across a window of
/// truncation levels with a fixed coefficient-degree bound. The stabilized
/// value is only a claim about the window; the report always carries (level,
/// degree) so the statement is reproducible.
struct RankExperimentReport {
    std::string family_desc;
    long degree = 0;
    long level_lo = 0;
    long level_hi = 0;
    std::vector<long> levels;
    std::vector<long> ranks;
    bool stabilized = false;
    long stabilized_rank = -1;
    std::vector<RelationCertificate> certificates_at_hi;

    Json to_json() const;
};

/// Descendant grid {−radius..radius}^b for S³_{K,−1/b}.
RankExperimentReport rank_descendant_grid(const KnotOracle& o, long b, long radius, long degree,
                                          long level_lo, long level_hi);

/// Cable family {φ(K^{(m)}) : 0 ≤ m ≤ mmax} (offset-normalized).
RankExperimentReport rank_cable_family(const KnotOracle& o, long b, long mmax, long degree,
                                       long level_lo, long level_hi);

} // namespace qh
