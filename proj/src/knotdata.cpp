#include "qhabiro/knotdata.hpp"

#include <filesystem>
#include <mutex>

#include "qhabiro/habiro.hpp"
#include "qhabiro/json_io.hpp"

namespace qh {

struct KnotOracle::Memo {
    std::mutex mu;
    std::map<long, LaurentPoly> values;
};

const LaurentPoly& KnotOracle::coeff(long k) const {
    if (k < 0) throw OracleError("KnotOracle: negative index");
    if (max_k_ >= 0 && k > max_k_)
        throw OracleError("KnotOracle '" + name_ + "': index " + std::to_string(k) +
                          " exceeds max_k " + std::to_string(max_k_));
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->values.find(k);
    if (it == memo_->values.end()) it = memo_->values.emplace(k, fn_(k)).first;
    return it->second;
}

KnotOracle KnotOracle::unknot() {
    KnotOracle o;
    o.name_ = "unknot";
    o.kind_ = Kind::Builtin;
    o.max_k_ = -1;
    o.digest_ = "builtin:unknot";
    o.fn_ = [](long k) { return k == 0 ? LaurentPoly::one() : LaurentPoly::zero(); };
    o.memo_ = std::make_shared<Memo>();
    return o;
}

KnotOracle KnotOracle::figure_eight() {
    KnotOracle o;
    o.name_ = "4_1";
    o.kind_ = Kind::Builtin;
    o.max_k_ = -1;
    o.digest_ = "builtin:4_1";
    // The unique coefficients making the b=2 descendant family reproduce the
    // explicit (1−q)·I^{(m0,m1)} formula for S³_{4_1,−1/2} termwise:
    //   J(P'_k) = (−1)^k q^{−k(k+1)/2} q^{−k(k+3)/4} (q^{k+1};q)_{k+1}/(1−q).
    o.fn_ = [](long k) {
        LaurentPoly p = exact_div(pochhammer(k + 1, k), pochhammer(1, 0));
        p = p.shifted(-2 * k * (k + 1) - k * (k + 3));
        if (k % 2 != 0) p *= Int(-1);
        return p;
    };
    o.memo_ = std::make_shared<Memo>();
    return o;
}

KnotOracle KnotOracle::builtin(const std::string& name) {
    if (name == "unknot") return unknot();
    if (name == "4_1" || name == "fig8" || name == "figure8") return figure_eight();
    throw OracleError("no builtin knot named '" + name + "'");
}

namespace {

std::string values_digest(const std::string& name, const std::vector<LaurentPoly>& values) {
    // FNV-1a over the canonical serialization; cache keying, not cryptography.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    mix(name);
    for (const auto& v : values) mix(laurent_to_json(v).dump());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void check_oracle_invariants(const KnotOracle& o) {
    if (o.coeff(0) != LaurentPoly::one())
        throw OracleError("knot '" + o.name() + "': coeff(0) must be 1");
    const long upto = std::min<long>(o.max_k(), 20);
    for (long k = 1; k <= upto; ++k) {
        if (!integrality_check(o.coeff(k), k))
            throw OracleError("knot '" + o.name() + "': coefficient " + std::to_string(k) +
                              " fails the (q^{k+1};q)_{k+1}/(1-q) integrality test");
    }
}

} // namespace

KnotOracle KnotOracle::from_cyclotomic(const std::string& name, std::vector<LaurentPoly> values) {
    if (values.empty()) throw OracleError("from_cyclotomic: empty value list");
    KnotOracle o;
    o.name_ = name;
    o.kind_ = Kind::File;
    o.max_k_ = static_cast<long>(values.size()) - 1;
    o.digest_ = values_digest("cyclotomic:" + name, values);
    auto data = std::make_shared<std::vector<LaurentPoly>>(std::move(values));
    o.fn_ = [data](long k) { return (*data)[static_cast<std::size_t>(k)]; };
    o.memo_ = std::make_shared<Memo>();
    check_oracle_invariants(o);
    return o;
}

KnotOracle KnotOracle::from_colored_jones(const std::string& name,
                                          std::vector<LaurentPoly> values) {
    if (values.empty()) throw OracleError("from_colored_jones: empty value list");
    if (values[0] != LaurentPoly::one())
        throw OracleError("from_colored_jones: J(V_0) must be 1");
    // J(V_n) = Σ_{i≤n} qbinom(n+i+1,2i+1)·{i}!·c_i with the c_n-coefficient
    // exactly {n}!, so back-substitution needs only exact division.
    std::vector<LaurentPoly> c;
    c.reserve(values.size());
    for (long n = 0; n < static_cast<long>(values.size()); ++n) {
        LaurentPoly rhs = values[static_cast<std::size_t>(n)];
        for (long i = 0; i < n; ++i) {
            rhs -= qbinom(n + i + 1, 2 * i + 1) * qbrace_fact(i) * c[static_cast<std::size_t>(i)];
        }
        try {
            c.push_back(exact_div(rhs, qbrace_fact(n)));
        } catch (const NotDivisibleError&) {
            throw OracleError("from_colored_jones: solved coefficient " + std::to_string(n) +
                              " is not a Laurent polynomial; input data inconsistent");
        }
    }
    KnotOracle o = from_cyclotomic(name, std::move(c));
    o.kind_ = Kind::DerivedFromColoredJones;
    return o;
}

LaurentPoly colored_jones_from_cyclotomic(const KnotOracle& o, long n) {
    LaurentPoly r;
    for (long i = 0; i <= n; ++i) {
        if (o.max_k() >= 0 && i > o.max_k()) break;
        r += qbinom(n + i + 1, 2 * i + 1) * qbrace_fact(i) * o.coeff(i);
    }
    return r;
}

KnotOracle load_knot_file(const std::string& path) {
    const nlohmann::ordered_json j = read_json_file(path);
    const std::string name = j.value("name", std::string("knot"));
    const std::string kind = j.at("kind").get<std::string>();
    const long max_index = j.at("max_index").get<long>();
    std::vector<LaurentPoly> values;
    for (const auto& item : j.at("values")) values.push_back(laurent_from_json(item));
    if (static_cast<long>(values.size()) != max_index + 1)
        throw ParseError("knot file '" + path + "': values length does not match max_index");
    if (kind == "cyclotomic") return KnotOracle::from_cyclotomic(name, std::move(values));
    if (kind == "colored_jones") return KnotOracle::from_colored_jones(name, std::move(values));
    throw ParseError("knot file '" + path + "': unknown kind '" + kind + "'");
}

KnotOracle resolve_knot(const std::string& name_or_path) {
    if (name_or_path == "unknot" || name_or_path == "4_1" || name_or_path == "fig8" ||
        name_or_path == "figure8") {
        return KnotOracle::builtin(name_or_path);
    }
    if (std::filesystem::exists(name_or_path)) return load_knot_file(name_or_path);
    throw OracleError("knot '" + name_or_path + "' is neither a builtin nor a readable file");
}

} // namespace qh
