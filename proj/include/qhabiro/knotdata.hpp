#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qhabiro/laurent.hpp"

namespace qh {

/// Source of cyclotomic coefficients J_K(P'_k) — the only knot input the
/// whole artifact consumes. Built-ins are unbounded; file-backed oracles carry
/// max_k. coeff(0) = 1 always (the trivially colored unnormalized invariant),
/// and every supported coefficient passes the Habiro integrality test.
class KnotOracle {
public:
    enum class Kind { Builtin, DerivedFromColoredJones, File };

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    /// Largest supported index; −1 means unbounded.
    long max_k() const { return max_k_; }
    /// Stable content digest (hex), used as a cache key component.
    const std::string& digest() const { return digest_; }

    const LaurentPoly& coeff(long k) const;

    static KnotOracle unknot();
    static KnotOracle figure_eight();
    /// Resolve "unknot", "4_1"/"fig8"/"figure8"; throws OracleError otherwise.
    static KnotOracle builtin(const std::string& name);

    static KnotOracle from_cyclotomic(const std::string& name, std::vector<LaurentPoly> values);
    /// Triangular inversion of J_K(V_n) = Σ_{i≤n} qbinom(n+i+1,2i+1)·{i}!·J_K(P'_i).
    /// Throws OracleError("...not a Laurent polynomial...") on inconsistent data.
    static KnotOracle from_colored_jones(const std::string& name, std::vector<LaurentPoly> values);

private:
    KnotOracle() = default;

    std::string name_;
    Kind kind_ = Kind::Builtin;
    long max_k_ = -1;
    std::string digest_;
    std::function<LaurentPoly(long)> fn_;
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

/// Forward sum: J_K(V_n) from the cyclotomic coefficients.
LaurentPoly colored_jones_from_cyclotomic(const KnotOracle& o, long n);

/// Load {"name","kind","max_index","values"} JSON; validates coeff(0)=1 and
/// integrality for k ≤ min(max_index, 20). Errors name the failing index.
KnotOracle load_knot_file(const std::string& path);

/// Resolve a CLI knot argument: builtin name or a path to a knot file.
KnotOracle resolve_knot(const std::string& name_or_path);

} // namespace qh
