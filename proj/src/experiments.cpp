#include "qhabiro/experiments.hpp"

#include <sstream>

namespace qh {

Json RankExperimentReport::to_json() const {
    Json j;
    j["family"] = family_desc;
    j["degree"] = degree;
    j["levels"] = levels;
    j["ranks"] = ranks;
    j["stabilized"] = stabilized;
    j["stabilized_rank"] = stabilized ? Json(stabilized_rank) : Json(nullptr);
    Json certs = Json::array();
    for (const auto& c : certificates_at_hi) {
        Json jc;
        jc["members"] = c.members;
        Json coeffs = Json::array();
        for (const auto& p : c.coeffs) coeffs.push_back(laurent_to_json(p));
        jc["coeffs"] = std::move(coeffs);
        jc["verified_level"] = c.verified_level;
        certs.push_back(std::move(jc));
    }
    j["certificates_at_top_level"] = std::move(certs);
    return j;
}

namespace {

RankExperimentReport run_window(std::vector<HabiroTrunc> family, std::vector<std::string> names,
                                const std::string& desc, long degree, long level_lo,
                                long level_hi) {
    RankExperimentReport rep;
    rep.family_desc = desc;
    rep.degree = degree;
    rep.level_lo = level_lo;
    rep.level_hi = level_hi;
    for (long n = level_lo; n <= level_hi; ++n) {
        std::vector<HabiroTrunc> at_n;
        at_n.reserve(family.size());
        for (const auto& x : family) at_n.push_back(project(x, n));
        RankReport rr = rank_estimate(at_n, names, degree);
        rep.levels.push_back(n);
        rep.ranks.push_back(rr.rank);
        if (n == level_hi) rep.certificates_at_hi = std::move(rr.certificates);
    }
    rep.stabilized = !rep.ranks.empty();
    for (long r : rep.ranks) rep.stabilized = rep.stabilized && (r == rep.ranks.front());
    rep.stabilized_rank = rep.stabilized ? rep.ranks.front() : -1;
    return rep;
}

} // namespace

RankExperimentReport rank_descendant_grid(const KnotOracle& o, long b, long radius, long degree,
                                          long level_lo, long level_hi) {
    if (radius < 0) throw Error("rank_descendant_grid: radius must be >= 0");
    if (level_lo < 1 || level_hi < level_lo) throw LevelError("rank_descendant_grid: bad window");
    std::vector<HabiroTrunc> family;
    std::vector<std::string> names;
    std::vector<long> shifts(static_cast<std::size_t>(b), -radius);
    while (true) {
        DescendantSpec spec{b, shifts, level_hi};
        family.push_back(descendant(o, spec));
        std::ostringstream nm;
        nm << "D(";
        for (std::size_t i = 0; i < shifts.size(); ++i) nm << (i ? "," : "") << shifts[i];
        nm << ")";
        names.push_back(nm.str());
        long pos = static_cast<long>(shifts.size()) - 1;
        while (pos >= 0 && shifts[static_cast<std::size_t>(pos)] == radius) {
            shifts[static_cast<std::size_t>(pos)] = -radius;
            --pos;
        }
        if (pos < 0) break;
        ++shifts[static_cast<std::size_t>(pos)];
    }
    std::ostringstream desc;
    desc << o.name() << " b=" << b << " descendants, shifts in {-" << radius << ".." << radius
         << "}^" << b;
    return run_window(std::move(family), std::move(names), desc.str(), degree, level_lo, level_hi);
}

RankExperimentReport rank_cable_family(const KnotOracle& o, long b, long mmax, long degree,
                                       long level_lo, long level_hi) {
    if (mmax < 0) throw Error("rank_cable_family: mmax must be >= 0");
    if (level_lo < 1 || level_hi < level_lo) throw LevelError("rank_cable_family: bad window");
    std::vector<HabiroTrunc> family;
    std::vector<std::string> names;
    for (long m = 0; m <= mmax; ++m) {
        family.push_back(normalize_offset(phi_cable(o, b, m, level_hi)));
        names.push_back("phi(K^(" + std::to_string(m) + "))");
    }
    std::ostringstream desc;
    desc << o.name() << " b=" << b << " cables phi(K^(m)), m <= " << mmax;
    return run_window(std::move(family), std::move(names), desc.str(), degree, level_lo, level_hi);
}

} // namespace qh
