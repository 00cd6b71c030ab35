#include "qhabiro/ranklab.hpp"

#include <algorithm>
#include <cstdint>

namespace qh {

HabiroTrunc normalize_offset(const HabiroTrunc& x) {
    HabiroTrunc r = x;
    r.offset = 0;
    return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// Deterministic stream of large primes (GMP primality behind mpz_nextprime).
u64 nth_prime(std::size_t i) {
    static std::vector<u64> primes;
    static Int cursor = Int(1) << 60;
    while (primes.size() <= i) {
        Int next;
        mpz_nextprime(next.get_mpz_t(), cursor.get_mpz_t());
        cursor = next;
        primes.push_back(static_cast<u64>(mpz_get_ui(next.get_mpz_t())));
    }
    return primes[i];
}

u64 int_mod_u64(const Int& a, u64 p) {
    Int m = a % Int(static_cast<unsigned long>(p));
    if (m < 0) m += Int(static_cast<unsigned long>(p));
    return static_cast<u64>(mpz_get_ui(m.get_mpz_t()));
}

struct ModKernel {
    std::vector<std::size_t> pivots;          // pivot row-indices of the family matrix
    std::vector<std::size_t> free_cols;       // free row-indices
    std::vector<std::vector<u64>> basis;      // one kernel vector per free col, length R
};

// Null space of the row family {rows} mod p: kernel of transpose(rows)·x = 0.
ModKernel kernel_mod_p(const std::vector<std::vector<Int>>& rows, u64 p) {
    const std::size_t R = rows.size();
    const std::size_t D = rows.empty() ? 0 : rows[0].size();
    // Transpose mod p: D equations in R unknowns.
    std::vector<std::vector<u64>> m(D, std::vector<u64>(R, 0));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < D; ++c) m[c][r] = int_mod_u64(rows[r][c], p);

    ModKernel out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < R; ++col) {
        std::size_t pr = rank;
        while (pr < D && m[pr][col] == 0) ++pr;
        if (rank >= D || pr == D) {
            out.free_cols.push_back(col);
            continue;
        }
        std::swap(m[rank], m[pr]);
        const u64 inv = invmod(m[rank][col], p);
        for (std::size_t c = col; c < R; ++c) m[rank][c] = mulmod(m[rank][c], inv, p);
        for (std::size_t r = 0; r < D; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const u64 f = m[r][col];
            for (std::size_t c = col; c < R; ++c) {
                const u64 sub = mulmod(f, m[rank][c], p);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t f : out.free_cols) {
        std::vector<u64> v(R, 0);
        v[f] = 1;
        for (std::size_t pi = 0; pi < out.pivots.size(); ++pi) {
            const u64 e = m[pi][f];
            if (e) v[out.pivots[pi]] = p - e;
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

// Rational reconstruction: find n/d with n ≡ v·d (mod M), |n|,|d| ≤ sqrt(M/2).
bool rational_reconstruct(const Int& v, const Int& M, Int& num, Int& den) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
    Int r0 = M, r1 = v % M;
    if (r1 < 0) r1 += M;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        // A common factor means the reconstruction is not in lowest terms —
        // only acceptable if it still verifies; reject and ask for more primes.
        return false;
    }
    num = r1;
    den = t1;
    return true;
}

std::vector<std::vector<Int>> build_rows(const std::vector<HabiroTrunc>& family, long degree) {
    const long level = family.front().level;
    const std::size_t D = static_cast<std::size_t>(level * (level + 1) / 2);
    std::vector<std::vector<Int>> rows;
    rows.reserve(family.size() * static_cast<std::size_t>(degree + 1));
    for (const auto& x : family) {
        for (long e = 0; e <= degree; ++e) {
            const LaurentPoly shifted = reduce_mod(x.rep.shifted(4 * e), level);
            std::vector<Int> row(D, Int(0));
            for (const auto& [exp, c] : shifted.terms()) row[static_cast<std::size_t>(exp / 4)] = c;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool verify_integer_relation(const std::vector<std::vector<Int>>& rows,
                             const std::vector<Int>& c) {
    const std::size_t D = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < D; ++col) {
        Int acc = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (c[r] != 0) acc += c[r] * rows[r][col];
        }
        if (acc != 0) return false;
    }
    return true;
}

} // namespace

std::vector<RelationCertificate> relation_search(const std::vector<HabiroTrunc>& family,
                                                 const std::vector<std::string>& names,
                                                 long degree) {
    if (family.empty()) return {};
    if (names.size() != family.size())
        throw Error("relation_search: names/family size mismatch");
    if (degree < 0) throw Error("relation_search: degree must be >= 0");
    const long level = family.front().level;
    const long offset = family.front().offset;
    for (const auto& x : family) {
        if (x.level != level) throw LevelMismatchError("relation_search: members at mixed levels");
        if (x.offset != offset)
            throw OffsetMismatchError("relation_search: members must have aligned offsets");
    }

    const std::vector<std::vector<Int>> rows = build_rows(family, degree);
    const std::size_t R = rows.size();

    // Reference kernel shape from the first prime; unlucky primes can only
    // enlarge the kernel, so a later prime showing a smaller one replaces the
    // reference.
    std::size_t prime_idx = 0;
    ModKernel ref = kernel_mod_p(rows, nth_prime(prime_idx));
    Int modulus(static_cast<unsigned long>(nth_prime(prime_idx)));
    ++prime_idx;
    // The kernel mod any prime contains the reduction of the rational kernel,
    // so an empty modular kernel certifies that there are no relations at all.
    if (ref.basis.empty()) return {};
    std::vector<std::vector<Int>> crt;
    crt.reserve(ref.basis.size());
    for (const auto& v : ref.basis) {
        std::vector<Int> w(R);
        for (std::size_t i = 0; i < R; ++i) w[i] = Int(static_cast<unsigned long>(v[i]));
        crt.push_back(std::move(w));
    }

    std::vector<RelationCertificate> certs;
    const std::size_t max_primes = 64;
    while (true) {
        // Attempt reconstruction + exact verification with current modulus.
        bool all_ok = true;
        std::vector<std::vector<Int>> lifted;
        for (const auto& v : crt) {
            std::vector<Int> nums(R), dens(R);
            bool ok = true;
            for (std::size_t i = 0; i < R && ok; ++i)
                ok = rational_reconstruct(v[i], modulus, nums[i], dens[i]);
            if (!ok) {
                all_ok = false;
                break;
            }
            Int lcm = 1;
            for (std::size_t i = 0; i < R; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), dens[i].get_mpz_t());
            std::vector<Int> c(R);
            for (std::size_t i = 0; i < R; ++i) c[i] = nums[i] * (lcm / dens[i]);
            if (!verify_integer_relation(rows, c)) {
                all_ok = false;
                break;
            }
            lifted.push_back(std::move(c));
        }
        if (all_ok && lifted.size() == ref.basis.size()) {
            // Certified: as many exact independent relations as the modular
            // upper bound allows.
            for (auto& c : lifted) {
                Int content = 0;
                for (const auto& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
                if (content > 1) {
                    for (auto& x : c) x /= content;
                }
                for (const auto& x : c) {
                    if (x == 0) continue;
                    if (x < 0) {
                        for (auto& y : c) y = -y;
                    }
                    break;
                }
                RelationCertificate cert;
                cert.members = names;
                cert.verified_level = level;
                cert.coeffs.resize(family.size());
                for (std::size_t i = 0; i < family.size(); ++i) {
                    LaurentPoly p;
                    for (long e = 0; e <= degree; ++e) {
                        const Int& coeff = c[i * static_cast<std::size_t>(degree + 1) +
                                             static_cast<std::size_t>(e)];
                        if (coeff != 0) p.add_term(4 * e, coeff);
                    }
                    cert.coeffs[i] = std::move(p);
                }
                certs.push_back(std::move(cert));
            }
            return certs;
        }

        if (prime_idx >= max_primes)
            throw Error("relation_search: kernel reconstruction did not converge");
        const u64 p = nth_prime(prime_idx);
        ++prime_idx;
        ModKernel k = kernel_mod_p(rows, p);
        if (k.basis.size() < ref.basis.size() || k.free_cols != ref.free_cols) {
            if (k.basis.size() <= ref.basis.size()) {
                // Previous reference was unlucky; restart accumulation.
                ref = std::move(k);
                modulus = Int(static_cast<unsigned long>(p));
                crt.clear();
                for (const auto& v : ref.basis) {
                    std::vector<Int> w(R);
                    for (std::size_t i = 0; i < R; ++i) w[i] = Int(static_cast<unsigned long>(v[i]));
                    crt.push_back(std::move(w));
                }
            }
            continue; // larger kernel => this prime unlucky, skip it
        }
        // CRT-combine into the accumulators.
        const Int pI(static_cast<unsigned long>(p));
        const u64 minv = invmod(int_mod_u64(modulus, p), p);
        Int newmod = modulus * pI;
        for (std::size_t vi = 0; vi < crt.size(); ++vi) {
            for (std::size_t i = 0; i < R; ++i) {
                // x ≡ crt (mod modulus), x ≡ k.basis (mod p).
                const u64 rp = int_mod_u64(crt[vi][i], p);
                const u64 delta = (k.basis[vi][i] + p - rp) % p;
                if (delta) crt[vi][i] += modulus * Int(static_cast<unsigned long>(mulmod(delta, minv, p)));
            }
        }
        modulus = std::move(newmod);
    }
}

RankReport rank_estimate(const std::vector<HabiroTrunc>& family,
                         const std::vector<std::string>& names, long degree) {
    RankReport report;
    report.family_size = static_cast<long>(family.size());
    report.level = family.empty() ? 0 : family.front().level;
    report.degree = degree;
    report.certificates = relation_search(family, names, degree);
    std::vector<std::vector<LaurentPoly>> m;
    m.reserve(report.certificates.size());
    for (const auto& cert : report.certificates) m.push_back(cert.coeffs);
    report.rank = report.family_size - poly_matrix_rank(std::move(m));
    return report;
}

std::optional<LaurentPoly> relation_residue(
    const RelationCertificate& cert, long level,
    const std::function<HabiroTrunc(const std::string&, long)>& recompute) {
    LaurentPoly acc;
    for (std::size_t i = 0; i < cert.members.size(); ++i) {
        if (cert.coeffs[i].is_zero()) continue;
        const HabiroTrunc x = recompute(cert.members[i], level);
        if (x.level != level) throw LevelMismatchError("relation_residue: recompute level mismatch");
        acc += cert.coeffs[i] * x.rep;
    }
    LaurentPoly residue = reduce_mod(acc, level);
    if (residue.is_zero()) return std::nullopt;
    return residue;
}

bool verify_relation(RelationCertificate& cert, long new_level,
                     const std::function<HabiroTrunc(const std::string&, long)>& recompute) {
    const auto residue = relation_residue(cert, new_level, recompute);
    if (residue) return false;
    cert.verified_level = std::max(cert.verified_level, new_level);
    return true;
}

long poly_matrix_rank(std::vector<std::vector<LaurentPoly>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Deterministic pivot: the surviving row whose entry has fewest terms.
        std::size_t pivot = rows;
        std::size_t best = SIZE_MAX;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero() && m[r][col].term_count() < best) {
                best = m[r][col].term_count();
                pivot = r;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                LaurentPoly num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                m[r][c] = num.is_zero() ? num : exact_div(num, prev);
            }
            m[r][col] = LaurentPoly::zero();
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

bool relation_in_span(const std::vector<RelationCertificate>& certs,
                      const std::vector<LaurentPoly>& target) {
    std::vector<std::vector<LaurentPoly>> base;
    base.reserve(certs.size());
    for (const auto& c : certs) base.push_back(c.coeffs);
    const long r0 = poly_matrix_rank(base);
    base.push_back(target);
    const long r1 = poly_matrix_rank(std::move(base));
    return r0 == r1;
}

} // namespace qh
