#include "qhabiro/multi.hpp"

#include "qhabiro/json_io.hpp"

namespace qh {

MultiSurgeryData load_multi_file(const std::string& path) {
    const Json j = read_json_file(path);
    if (j.at("kind").get<std::string>() != "cyclotomic_multi")
        throw ParseError("multi file '" + path + "': kind must be 'cyclotomic_multi'");
    MultiSurgeryData d;
    d.name = j.value("name", std::string("multi"));
    d.arity = j.at("arity").get<long>();
    if (d.arity < 1) throw ParseError("multi file: arity must be >= 1");
    for (const auto& f : j.at("framings")) {
        const int v = f.get<int>();
        if (v != 1 && v != -1) throw ParseError("multi file: framings must be ±1");
        d.framings.push_back(v);
    }
    if (static_cast<long>(d.framings.size()) != d.arity)
        throw ParseError("multi file: framings length must equal arity");
    d.max_index = j.at("max_index").get<long>();
    for (const auto& item : j.at("values")) {
        std::vector<long> idx;
        for (const auto& e : item.at("index")) idx.push_back(e.get<long>());
        if (static_cast<long>(idx.size()) != d.arity)
            throw ParseError("multi file: index length must equal arity");
        for (long v : idx)
            if (v < 0 || v > d.max_index) throw ParseError("multi file: index out of range");
        d.coeffs[idx] = laurent_from_json(item.at("value"));
    }
    const std::vector<long> origin(static_cast<std::size_t>(d.arity), 0);
    auto it = d.coeffs.find(origin);
    if (it == d.coeffs.end() || it->second != LaurentPoly::one())
        throw ParseError("multi file: J(0,...,0) must be 1");
    return d;
}

HabiroTrunc multi_invariant(const MultiSurgeryData& data, const std::vector<long>& shifts,
                            long level) {
    if (static_cast<long>(shifts.size()) != data.arity)
        throw Error("multi_invariant: shifts length must equal arity");
    if (level < 1) throw LevelError("multi_invariant: level must be >= 1");
    const long kmax = std::min(level - 1, data.max_index);
    if (level - 1 > data.max_index)
        throw OracleError("multi data too short for level " + std::to_string(level));
    LaurentPoly acc;
    for (const auto& [idx, c] : data.coeffs) {
        bool in_box = true;
        for (long v : idx) in_box = in_box && v <= kmax;
        if (!in_box || c.is_zero()) continue;
        long quarter = 0;
        bool negate = false;
        for (long i = 0; i < data.arity; ++i) {
            const long k = idx[static_cast<std::size_t>(i)];
            quarter += -data.framings[static_cast<std::size_t>(i)] * k * (k + 3);
            quarter += 4 * k * shifts[static_cast<std::size_t>(i)];
            if (data.framings[static_cast<std::size_t>(i)] == 1 && k % 2 == 1) negate = !negate;
        }
        LaurentPoly term = c.shifted(quarter);
        if (negate) term = -term;
        acc += term;
    }
    return habiro_make(level, 0, acc);
}

} // namespace qh
