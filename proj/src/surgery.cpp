#include "qhabiro/surgery.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace qh {

void DescendantSpec::validate() const {
    if (b < 1) throw Error("DescendantSpec: b must be >= 1");
    if (static_cast<long>(shifts.size()) != b)
        throw Error("DescendantSpec: shifts must have length b");
    if (level < 1) throw LevelError("DescendantSpec: level must be >= 1");
}

SummationBound summation_bound(long level, long max_shift) {
    if (level < 1) throw LevelError("summation_bound: level must be >= 1");
    return SummationBound{level - 1 + std::max<long>(max_shift, 0)};
}

LaurentPoly kernel_alpha(long b, long k, const std::vector<long>& ell) {
    if (b < 1) throw Error("kernel_alpha: b must be >= 1");
    if (k < 0) throw Error("kernel_alpha: k must be >= 0");
    if (static_cast<long>(ell.size()) != b - 1)
        throw Error("kernel_alpha: need b-1 inner indices");
    long prev = k;
    for (long e : ell) {
        if (e < 0 || e > prev) throw Error("kernel_alpha: indices must satisfy k >= l1 >= ... >= 0");
        prev = e;
    }
    if (b == 1) return LaurentPoly::quarter_power(k * (k + 3));
    // The multinomial reading that specializes to the b = 2 formula:
    // (q;q)_k / ((q;q)_{k-l1}·(q;q)_{l1-l2}···(q;q)_{l_{b-2}-l_{b-1}}·(q;q)_{l_{b-1}}).
    LaurentPoly den = qpoch_cached(k - ell[0]);
    for (long j = 1; j + 1 <= b - 1; ++j) den *= qpoch_cached(ell[j - 1] - ell[j]);
    den *= qpoch_cached(ell[b - 2]);
    LaurentPoly frac = exact_div(qpoch_cached(k), den);
    long e = k * (k + 3);
    for (long l : ell) e += 4 * l * (l + 1);
    return frac.shifted(e);
}

KernelReading selected_kernel_reading() {
    static std::once_flag once;
    static KernelReading reading = KernelReading::KMinusEllFirst;
    std::call_once(once, [] {
        bool a_ok = true;
        bool b_ok = true;
        for (long k = 0; k <= 5 && (a_ok || b_ok); ++k) {
            for (long l = 0; l <= k; ++l) {
                const LaurentPoly im2 =
                    exact_div(qpoch_cached(k), qpoch_cached(l) * qpoch_cached(k - l));
                if (a_ok) {
                    try {
                        a_ok = exact_div(qpoch_cached(k), qpoch_cached(l) * qpoch_cached(l)) == im2;
                    } catch (const NotDivisibleError&) {
                        a_ok = false;
                    }
                }
                if (b_ok) {
                    b_ok = exact_div(qpoch_cached(k), qpoch_cached(k - l) * qpoch_cached(l)) == im2;
                }
            }
        }
        if (b_ok) {
            reading = KernelReading::KMinusEllFirst;
        } else if (a_ok) {
            reading = KernelReading::EllFirst;
        } else {
            throw Error("kernel reading selection: neither reading matches the b=2 formula");
        }
    });
    return reading;
}

std::string kernel_reading_description() {
    return selected_kernel_reading() == KernelReading::KMinusEllFirst
               ? "general-b kernel denominator starts with (q;q)_{k-l1} (b=2-consistent reading)"
               : "general-b kernel denominator starts with (q;q)_{l1}";
}

namespace {

// reduce(J_K(P'_k)·q^{k(k+3)/4}, (q;q)_level), cached per oracle digest.
const LaurentPoly& jk_reduced(const KnotOracle& o, long k, long level) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, long, long>, LaurentPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(o.digest(), level, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        LaurentPoly raw = o.coeff(k).shifted(k * (k + 3));
        if (!raw.in_z_q())
            throw OffsetMismatchError("oracle '" + o.name() + "': coefficient " +
                                      std::to_string(k) +
                                      " has quarter-grading incompatible with the surgery kernel");
        it = cache.emplace(key, reduce_mod(raw, level)).first;
    }
    return it->second;
}

// Inner chain sum of the b >= 2 kernel over l1 >= ... >= l_{b-1}, reduced:
//   S_k = Σ Π_j binom(l_{j-1}, l_j)_q · q^{Σ_j l_j(l_j+1) + l_j m_j},  l_0 = k.
// For b = 1 this is 1.
const LaurentPoly& chain_reduced(long b, const std::vector<long>& tail, long level, long k) {
    static std::mutex mu;
    static std::map<std::tuple<long, std::vector<long>, long, long>, LaurentPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(b, tail, level, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    LaurentPoly s;
    if (b == 1) {
        s = LaurentPoly::one();
    } else {
        // Gaussian binomial row table via [x,y] = [x-1,y-1] + q^y·[x-1,y].
        static std::vector<std::vector<LaurentPoly>> binom{{LaurentPoly::one()}};
        while (static_cast<long>(binom.size()) <= k) {
            const auto& prev = binom.back();
            const long x = static_cast<long>(binom.size());
            std::vector<LaurentPoly> row(static_cast<std::size_t>(x) + 1);
            row[0] = LaurentPoly::one();
            row[static_cast<std::size_t>(x)] = LaurentPoly::one();
            for (long y = 1; y < x; ++y) {
                row[static_cast<std::size_t>(y)] =
                    prev[static_cast<std::size_t>(y - 1)] +
                    prev[static_cast<std::size_t>(y)].shifted(4 * y);
            }
            binom.push_back(std::move(row));
        }
        std::vector<LaurentPoly> a(static_cast<std::size_t>(k) + 1);
        for (long j = b - 2; j >= 0; --j) {
            std::vector<LaurentPoly> next(static_cast<std::size_t>(k) + 1);
            for (long x = 0; x <= k; ++x) {
                LaurentPoly inner;
                if (j == b - 2) {
                    inner = LaurentPoly::one();
                } else {
                    for (long y = 0; y <= x; ++y)
                        inner += binom[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                                 a[static_cast<std::size_t>(y)];
                }
                next[static_cast<std::size_t>(x)] =
                    inner.shifted(4 * (x * (x + 1) + x * tail[static_cast<std::size_t>(j)]));
            }
            a = std::move(next);
        }
        for (long y = 0; y <= k; ++y)
            s += binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)] *
                 a[static_cast<std::size_t>(y)];
    }
    return cache.emplace(key, reduce_mod(s, level)).first->second;
}

HabiroTrunc descendant_impl(const KnotOracle& o, const DescendantSpec& spec, long kmax) {
    spec.validate();
    if (o.max_k() >= 0 && kmax > o.max_k())
        throw OracleError("oracle '" + o.name() + "' too short: need J(P'_k) up to k = " +
                          std::to_string(kmax));
    const std::vector<long> tail(spec.shifts.begin() + 1, spec.shifts.end());
    const long m0 = spec.shifts[0];
    LaurentPoly acc;
    for (long k = 0; k <= kmax; ++k) {
        const LaurentPoly& jk = jk_reduced(o, k, spec.level);
        if (jk.is_zero()) continue;
        LaurentPoly x = chain_reduced(spec.b, tail, spec.level, k);
        if (m0 != 0) x = reduce_mod(x.shifted(4 * k * m0), spec.level);
        acc += reduce_mod(jk * x, spec.level);
    }
    HabiroTrunc r;
    r.level = spec.level;
    r.offset = 0;
    r.rep = reduce_mod(acc, spec.level);
    return r;
}

} // namespace

HabiroTrunc descendant(const KnotOracle& o, const DescendantSpec& spec) {
    spec.validate();
    return descendant_impl(o, spec, summation_bound(spec.level).kmax);
}

HabiroTrunc descendant_bounded(const KnotOracle& o, const DescendantSpec& spec, long kmax) {
    if (kmax < 0) throw Error("descendant_bounded: kmax must be >= 0");
    return descendant_impl(o, spec, kmax);
}

HabiroTrunc invariant(const KnotOracle& o, long b, long level) {
    DescendantSpec spec;
    spec.b = b;
    spec.shifts.assign(static_cast<std::size_t>(b), 0);
    spec.level = level;
    return descendant(o, spec);
}

HabiroTrunc mirror(const HabiroTrunc& x) {
    HabiroTrunc r;
    r.level = x.level;
    r.offset = -x.offset;
    r.rep = reduce_mod(x.rep.invert_q(), x.level);
    return r;
}

HabiroTrunc colored_invariant(const KnotOracle& o, long b, long m, long level) {
    if (m < 0) throw Error("colored_invariant: m must be >= 0");
    if (b < 1) throw Error("colored_invariant: b must be >= 1");
    if (level < 1) throw LevelError("colored_invariant: level must be >= 1");
    const long kmax = summation_bound(level, m).kmax;
    if (o.max_k() >= 0 && kmax + m > o.max_k())
        throw OracleError("oracle '" + o.name() + "' too short: need J(P'_k) up to k = " +
                          std::to_string(kmax + m));
    const std::vector<long> tail(static_cast<std::size_t>(b - 1), 0);
    LaurentPoly acc;
    for (long k = 0; k <= kmax; ++k) {
        LaurentPoly g;
        for (long j = 0; j <= m; ++j) {
            const LaurentPoly ge = gamma_coeff(j, m).eval_at_u_power(k);
            if (!ge.is_zero()) g += ge * o.coeff(k + j);
        }
        if (g.is_zero()) continue;
        const LaurentPoly raw = g.shifted(k * (k + 3) - 2 * m);
        if (!raw.in_z_q())
            throw OffsetMismatchError(
                "colored_invariant: summand at k = " + std::to_string(k) +
                " is not in q^{m/2}·Z[q^{±1}]");
        LaurentPoly t = reduce_mod(raw, level);
        const LaurentPoly& x = chain_reduced(b, tail, level, k);
        acc += reduce_mod(t * x, level);
    }
    HabiroTrunc r;
    r.level = level;
    r.offset = 2 * m;
    r.rep = reduce_mod(acc, level);
    return r;
}

HabiroTrunc phi_cable(const KnotOracle& o, long b, long m, long level) {
    if (m < 0) throw Error("phi_cable: m must be >= 0");
    const auto expansion = cable_expand(m);
    HabiroTrunc r;
    r.level = level;
    r.offset = 2 * m;
    LaurentPoly acc;
    for (const auto& [ell, c] : expansion) {
        HabiroTrunc part = colored_invariant(o, b, ell, level);
        // Align q^{2ell/4}·rep to the cable's own grading q^{2m/4}.
        LaurentPoly shifted = part.rep.shifted(2 * (ell - m));
        shifted *= c;
        acc += reduce_mod(shifted, level);
    }
    if (m % 2 != 0) acc = -acc;
    r.rep = reduce_mod(acc, level);
    return r;
}

namespace {

// Two-variable monomial bookkeeping for the descendant rewriting.
struct ShiftKey {
    std::vector<long> shifts;
    bool operator<(const ShiftKey& rhs) const { return shifts < rhs.shifts; }
};

} // namespace

Decomposition decompose_to_descendants(const KnotOracle& o, long b, long m, long level) {
    if (b != 1 && b != 2) throw Error("decompose_to_descendants: b must be 1 or 2");
    if (m < 0) throw Error("decompose_to_descendants: m must be >= 0");
    Decomposition d;
    d.b = b;
    d.m = m;
    std::map<ShiftKey, LaurentPoly> coeffs;

    for (long j = 0; j <= m; ++j) {
        if (b == 1) {
            // γ^j_m(v,v^{k-j})·q^{(k-j)(k-j+3)/4} = Σ_monomials c·q^{E/4}·q^{k·t}·q^{k(k+3)/4},
            // E = a − 2j·beta + j² − 3j, t = (beta − j)/2; the reindexed sum over
            // k ≥ j differs from the full descendant by explicit boundary terms.
            const TwoVarLaurent gam = gamma_coeff(j, m);
            for (const auto& [key, c] : gam.terms()) {
                const long a = static_cast<long>(key.first);
                const long beta = static_cast<long>(key.second);
                if ((beta - j) % 2 != 0)
                    throw RewriteError("decompose: odd u-parity defect in gamma monomial");
                const long t = (beta - j) / 2;
                const LaurentPoly cmono =
                    LaurentPoly::monomial(c, a - 2 * j * beta + j * (j - 3));
                coeffs[ShiftKey{{t}}] += cmono;
                for (long kp = 0; kp < j; ++kp) {
                    d.constant -=
                        cmono * o.coeff(kp).shifted(kp * (kp + 3) + 4 * kp * t);
                }
            }
        } else {
            // Absorb the divisible factor of γ^j_m into kernel shifts via the
            // first recurrence of the b = 2 kernel, iterated j times:
            //   Π_{t=1}^j (1−q^{k+t})·α_{k,l} = q^{-jk/2-j(j-1)/4-j}·Π_{t=1}^j (1−q^{k+t-l})·α_{k+j,l}.
            TwoVarLaurent beta_poly = gamma_coeff(j, m);
            for (long t = 1; t <= j; ++t) {
                try {
                    beta_poly = beta_poly.exact_div_one_minus_u2qt(t);
                } catch (const NotDivisibleError&) {
                    throw RewriteError("decompose: gamma^" + std::to_string(j) + "_" +
                                       std::to_string(m) + " not divisible by (1-q^" +
                                       std::to_string(t) + " u^2)");
                }
            }
            for (const auto& [key, c] : beta_poly.terms()) {
                const long a = static_cast<long>(key.first);
                const long beta = static_cast<long>(key.second);
                if ((beta - j) % 2 != 0)
                    throw RewriteError("decompose: odd u-parity defect in beta monomial");
                const long base_t = (beta - j) / 2;
                const long base_exp = a - 2 * j * beta + j * (j - 3);
                // Expand Π_{t=1}^j (1 − q^{(k-l) + (t-j)}) over subsets.
                const long nsub = 1L << j;
                for (long mask = 0; mask < nsub; ++mask) {
                    long size = 0;
                    long extra = 0;
                    for (long t = 1; t <= j; ++t) {
                        if (mask & (1L << (t - 1))) {
                            ++size;
                            extra += t - j;
                        }
                    }
                    Int sign = (size % 2 == 0) ? Int(c) : Int(-c);
                    const LaurentPoly cmono =
                        LaurentPoly::monomial(sign, base_exp + 4 * extra);
                    coeffs[ShiftKey{{base_t + size, -size}}] += cmono;
                }
            }
        }
    }

    for (auto& [key, c] : coeffs) {
        if (c.is_zero()) continue;
        DescendantTerm term;
        term.coeff = c;
        term.spec.b = b;
        term.spec.shifts = key.shifts;
        term.spec.level = level;
        d.terms.push_back(std::move(term));
    }
    return d;
}

HabiroTrunc evaluate_decomposition(const KnotOracle& o, const Decomposition& d, long level) {
    LaurentPoly raw = d.constant;
    for (const auto& term : d.terms) {
        DescendantSpec spec = term.spec;
        spec.level = level;
        const HabiroTrunc v = descendant(o, spec);
        raw += term.coeff * v.rep;
    }
    return habiro_make(level, 2 * d.m, raw);
}

CyclotomicNumber wrt_at_root(const KnotOracle& o, long b, long m, long order) {
    if (order < 1 || order % 2 == 0)
        throw EvenOrderError("wrt_at_root: order must be odd and >= 1");
    if (b < 1) throw Error("wrt_at_root: b must be >= 1");
    if (m < 0) throw Error("wrt_at_root: m must be >= 0");
    // The k-th summand carries (q^{k+1};q)_{k+1}/(1-q), which vanishes at a
    // primitive N-th root once 2k+1 >= N, so the sum truncated at (N-1)/2 is
    // exact (every discarded term is zero there).
    const long cutoff = (order - 1) / 2;
    if (o.max_k() >= 0 && cutoff + m > o.max_k())
        throw OracleError("oracle too short for the root-of-unity truncation");
    LaurentPoly total;
    for (long k = 0; k <= cutoff; ++k) {
        LaurentPoly g;
        for (long j = 0; j <= m; ++j) {
            const LaurentPoly ge = gamma_coeff(j, m).eval_at_u_power(k);
            if (!ge.is_zero()) g += ge * o.coeff(k + j);
        }
        if (g.is_zero()) continue;
        // Full kernel sum at this k, unreduced: Σ over k >= l1 >= ... >= 0.
        LaurentPoly s;
        if (b == 1) {
            s = kernel_alpha(1, k, {});
        } else {
            std::vector<long> stack(static_cast<std::size_t>(b - 1), 0);
            auto rec = [&](auto&& self, long depth, long upper) -> void {
                if (depth == b - 1) {
                    s += kernel_alpha(b, k, stack);
                    return;
                }
                for (long v = 0; v <= upper; ++v) {
                    stack[static_cast<std::size_t>(depth)] = v;
                    self(self, depth + 1, v);
                }
            };
            rec(rec, 0, k);
        }
        total += g * s;
    }
    return cyclo_from_laurent(total, order);
}

RecurrenceReport verify_alpha_recurrences(long range_k, long range_l) {
    if (range_k < 1 || range_l < 1) throw Error("verify_alpha_recurrences: ranges must be >= 1");
    RecurrenceReport report;
    report.range_k = range_k;
    report.range_l = range_l;
    auto alpha = [](long k, long l) {
        if (l < 0 || l > k) return LaurentPoly::zero();
        return kernel_alpha(2, k, {l});
    };
    for (long k = 0; k <= range_k; ++k) {
        for (long l = 0; l <= std::min(k, range_l); ++l) {
            const LaurentPoly a = alpha(k, l);
            {
                LaurentPoly lhs = (LaurentPoly::one() - LaurentPoly::q_power(k + 1 - l)) *
                                  alpha(k + 1, l);
                LaurentPoly rhs = LaurentPoly::quarter_power(2 * k + 4) *
                                  (LaurentPoly::one() - LaurentPoly::q_power(k + 1)) * a;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "first recurrence fails at (k,l)=(" << k << "," << l << ")";
                    report.failures.push_back(os.str());
                }
            }
            {
                LaurentPoly lhs = (LaurentPoly::one() - LaurentPoly::q_power(l + 1)) *
                                  alpha(k, l + 1);
                LaurentPoly rhs = LaurentPoly::q_power(2 * l + 2) *
                                  (LaurentPoly::one() - LaurentPoly::q_power(k - l)) * a;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "second recurrence fails at (k,l)=(" << k << "," << l << ")";
                    report.failures.push_back(os.str());
                }
            }
        }
    }
    return report;
}

} // namespace qh
