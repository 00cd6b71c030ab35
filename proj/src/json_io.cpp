#include "qhabiro/json_io.hpp"

#include <fstream>

namespace qh {

Json laurent_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_decimal(c)}));
    Json j;
    j["unit"] = "q^(1/4)";
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    try {
        if (j.contains("unit") && j.at("unit").get<std::string>() != "q^(1/4)")
            throw ParseError("LaurentPoly: unsupported unit");
        LaurentPoly p;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2) throw ParseError("LaurentPoly: bad term");
            const auto e = t[0].get<std::int64_t>();
            Int c = t[1].is_string() ? int_from_decimal(t[1].get<std::string>())
                                     : Int(t[1].get<long>());
            if (c == 0) throw ParseError("LaurentPoly: zero coefficient stored");
            p.add_term(e, c);
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("LaurentPoly: ") + ex.what());
    }
}

Json pprime_to_json(const PPrimeVector& v) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : v.coeffs) coeffs[std::to_string(k)] = laurent_to_json(c);
    Json j;
    j["basis"] = "Pprime";
    j["coeffs"] = std::move(coeffs);
    return j;
}

PPrimeVector pprime_from_json(const Json& j) {
    try {
        if (j.at("basis").get<std::string>() != "Pprime")
            throw ParseError("PPrimeVector: unsupported basis");
        PPrimeVector v;
        for (const auto& [key, val] : j.at("coeffs").items())
            v.add_term(std::stol(key), laurent_from_json(val));
        return v;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("PPrimeVector: ") + ex.what());
    }
}

Json habiro_to_json(const HabiroTrunc& x) {
    Json j;
    j["level"] = x.level;
    j["offset"] = x.offset;
    j["rep"] = laurent_to_json(x.rep);
    return j;
}

HabiroTrunc habiro_from_json(const Json& j) {
    try {
        const long level = j.at("level").get<long>();
        const long offset = j.at("offset").get<long>();
        const LaurentPoly rep = laurent_from_json(j.at("rep"));
        HabiroTrunc x;
        x.level = level;
        x.offset = offset;
        x.rep = reduce_mod(rep, level);
        if (x.rep != rep) throw ParseError("HabiroTrunc: representative not canonical");
        return x;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("HabiroTrunc: ") + ex.what());
    }
}

Json cyclo_to_json(const CyclotomicNumber& c) {
    Json coords = Json::array();
    for (const auto& x : c.coords()) coords.push_back(to_decimal(x));
    Json j;
    j["order"] = c.order();
    j["coords"] = std::move(coords);
    return j;
}

CyclotomicNumber cyclo_from_json(const Json& j) {
    try {
        const long order = j.at("order").get<long>();
        std::vector<Int> coords;
        for (const auto& x : j.at("coords")) coords.push_back(int_from_decimal(x.get<std::string>()));
        return CyclotomicNumber::from_coords(order, std::move(coords));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("CyclotomicNumber: ") + ex.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        Json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("'" + path + "': " + ex.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace qh
