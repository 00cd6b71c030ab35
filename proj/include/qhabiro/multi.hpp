#pragma once

#include <map>

#include "qhabiro/habiro.hpp"

namespace qh {

/// Experimental: user-supplied multi-index cyclotomic coefficients for a
/// diagonal ±1 surgery presentation with s components (no colored
/// components). J(k_1,…,k_s) entries absent from the file are zero.
struct MultiSurgeryData {
    std::string name;
    long arity = 1;
    std::vector<int> framings; // d_i = ±1
    long max_index = 0;
    std::map<std::vector<long>, LaurentPoly> coeffs;
};

MultiSurgeryData load_multi_file(const std::string& path);

/// Σ_{k⃗} J(k⃗)·Π_i (−d_i)^{k_i} q^{−d_i k_i(k_i+3)/4}·q^{Σ_i k_i m_i},
/// truncated exactly at each k_i ≤ level−1.
HabiroTrunc multi_invariant(const MultiSurgeryData& data, const std::vector<long>& shifts,
                            long level);

} // namespace qh
