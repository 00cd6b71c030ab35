#include "qhabiro/habiro.hpp"

#include <algorithm>

namespace qh {

void LinkingData::validate() const {
    const std::size_t r = colors.size();
    if (lk.size() != r) throw Error("LinkingData: lk must be r x r");
    for (const auto& row : lk)
        if (row.size() != r) throw Error("LinkingData: lk must be r x r");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (lk[i][j] != lk[j][i]) throw Error("LinkingData: lk must be symmetric");
    const std::size_t s = cyclo_colors.size();
    if (!surgery_lk.empty()) {
        if (surgery_lk.size() != s) throw Error("LinkingData: surgery_lk must have s rows");
        for (const auto& row : surgery_lk)
            if (row.size() != r) throw Error("LinkingData: surgery_lk rows must have r entries");
    }
    if (!surgery_mutual.empty()) {
        if (surgery_mutual.size() != s) throw Error("LinkingData: surgery_mutual must be s x s");
        for (const auto& row : surgery_mutual)
            if (row.size() != s) throw Error("LinkingData: surgery_mutual must be s x s");
    }
    for (long c : colors)
        if (c < 0) throw Error("LinkingData: colors must be >= 0");
    for (long c : cyclo_colors)
        if (c < 0) throw Error("LinkingData: cyclotomic colors must be >= 0");
}

HabiroTrunc habiro_make(long level, long offset, const LaurentPoly& raw) {
    if (level < 1) throw LevelError("habiro_make: level must be >= 1");
    const long r = ((offset % 4) + 4) % 4;
    for (const auto& [e, c] : raw.terms()) {
        if (((e % 4) + 4) % 4 != r)
            throw OffsetMismatchError("habiro_make: exponent " + std::to_string(e) +
                                      " incompatible with offset " + std::to_string(offset));
    }
    HabiroTrunc x;
    x.level = level;
    x.offset = offset;
    x.rep = reduce_mod(raw.shifted(-offset), level);
    return x;
}

HabiroTrunc habiro_one(long level) { return habiro_make(level, 0, LaurentPoly::one()); }

HabiroTrunc habiro_zero(long level) { return habiro_make(level, 0, LaurentPoly::zero()); }

HabiroTrunc habiro_add(const HabiroTrunc& x, const HabiroTrunc& y) {
    const long level = std::min(x.level, y.level);
    HabiroTrunc r;
    r.level = level;
    // A zero operand imposes no grading of its own.
    if (x.is_zero() && !y.is_zero()) {
        r.offset = y.offset;
        r.rep = reduce_mod(y.rep, level);
        return r;
    }
    if (y.is_zero()) {
        r.offset = x.offset;
        r.rep = reduce_mod(x.rep, level);
        return r;
    }
    if ((x.offset - y.offset) % 4 != 0)
        throw OffsetMismatchError("habiro_add: offsets differ by a non-multiple of 4");
    r.offset = std::min(x.offset, y.offset);
    const LaurentPoly xr = x.rep.shifted(x.offset - r.offset);
    const LaurentPoly yr = y.rep.shifted(y.offset - r.offset);
    r.rep = reduce_mod(xr + yr, level);
    return r;
}

HabiroTrunc habiro_sub(const HabiroTrunc& x, const HabiroTrunc& y) {
    HabiroTrunc ny = y;
    ny.rep = -ny.rep;
    return habiro_add(x, ny);
}

HabiroTrunc habiro_mul(const HabiroTrunc& x, const HabiroTrunc& y) {
    HabiroTrunc r;
    r.level = std::min(x.level, y.level);
    r.offset = x.offset + y.offset;
    r.rep = reduce_mod(x.rep * y.rep, r.level);
    return r;
}

HabiroTrunc habiro_scale(const HabiroTrunc& x, const LaurentPoly& c) {
    if (!c.in_z_q()) throw OffsetMismatchError("habiro_scale: scalar must lie in Z[q^{±1}]");
    HabiroTrunc r = x;
    r.rep = reduce_mod(x.rep * c, x.level);
    return r;
}

HabiroTrunc project(const HabiroTrunc& x, long level) {
    if (level < 1 || level > x.level) throw LevelError("project: level out of range");
    HabiroTrunc r = x;
    r.level = level;
    r.rep = reduce_mod(x.rep, level);
    return r;
}

long offset_f(const LinkingData& d) {
    long f = offset_g(d);
    for (long k : d.cyclo_colors) f += k * (k - 1) / 2;
    return f;
}

long offset_g(const LinkingData& d) {
    d.validate();
    long g = 0;
    const std::size_t r = d.colors.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g += d.lk[i][j] * d.colors[i] * d.colors[j];
    for (std::size_t i = 0; i < r; ++i) g += 2 * (d.lk[i][i] + 1) * d.colors[i];
    return g;
}

bool evenness_check(const LinkingData& d) {
    d.validate();
    for (std::size_t i = 0; i < d.surgery_mutual.size(); ++i) {
        for (std::size_t j = 0; j < d.surgery_mutual[i].size(); ++j) {
            if (i != j && d.surgery_mutual[i][j] != 0) return false;
        }
    }
    for (const auto& row : d.surgery_lk) {
        long eps = 0;
        for (std::size_t j = 0; j < row.size(); ++j) eps += row[j] * d.colors[j];
        if (eps % 2 != 0) return false;
    }
    return true;
}

namespace {

// Strip the uniform q^{r/4} factor and normalize the minimum exponent to 0.
// Returns false when the exponents are not all congruent mod 4.
bool strip_to_poly(const LaurentPoly& f, LaurentPoly& out) {
    const auto residue = f.exp_residue_mod4();
    if (!residue) return false;
    if (f.is_zero()) {
        out = f;
        return true;
    }
    out = f.shifted(-f.min_exp());
    return true;
}

} // namespace

bool integrality_check(const LaurentPoly& f, long k) {
    if (f.is_zero()) return true;
    LaurentPoly g;
    if (!strip_to_poly(f, g)) return false;
    const LaurentPoly d = exact_div(pochhammer(k + 1, k), pochhammer(1, 0));
    return divides(d, g);
}

bool integrality_check(const HabiroTrunc& f, long k) { return integrality_check(f.lift(), k); }

bool integrality_check_weak(const LaurentPoly& f, long k) {
    if (f.is_zero()) return true;
    LaurentPoly g;
    if (!strip_to_poly(f, g)) return false;
    return divides(qpoch_cached(k), g);
}

CyclotomicNumber evaluate_at_root(const HabiroTrunc& x, long order) {
    if (order % 2 == 0) throw EvenOrderError("evaluate_at_root: order must be odd");
    if (x.level < order)
        throw LevelError("evaluate_at_root: level " + std::to_string(x.level) +
                         " too low for order " + std::to_string(order));
    return cyclo_from_laurent(x.lift(), order);
}

} // namespace qh
