// qhabiro command-line front end. Everything mathematical happens behind the
// C API in qhabiro.h; this file only parses arguments, manages the result
// cache and formats output.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhabiro.h"

namespace {

using Json = nlohmann::ordered_json;

struct CStr {
    char* p = nullptr;
    ~CStr() { qh_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OracleHandle {
    qh_oracle* p = nullptr;
    ~OracleHandle() { qh_oracle_free(p); }
};

struct ResultHandle {
    qh_result* p = nullptr;
    ~ResultHandle() { qh_result_free(p); }
};

[[noreturn]] void die(const std::string& context) {
    Json err;
    err["error"] = context;
    err["detail"] = qh_last_error();
    std::cerr << err.dump() << "\n";
    std::exit(1);
}

void require_ok(qh_status st, const std::string& context) {
    if (st != QH_OK) die(context);
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

// ---- content-addressed result cache -----------------------------------

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string cache_key(const std::string& canonical_config) {
    const std::uint64_t a = fnv1a(canonical_config, 1469598103934665603ULL);
    const std::uint64_t b = fnv1a(canonical_config, 14695981039346656037ULL);
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b));
    return buf;
}

class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    void store(const std::string& key, const std::string& bytes) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        const std::string final_path = path_for(key);
        const std::string tmp_path = final_path + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp_path, std::ios::binary);
            out << bytes;
        }
        std::filesystem::rename(tmp_path, final_path);
    }

private:
    std::string path_for(const std::string& key) const { return dir_ + "/" + key + ".json"; }
    std::string dir_;
};

std::string cache_dir_from(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("QHABIRO_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

std::string oracle_digest(qh_oracle* o) {
    CStr d;
    require_ok(qh_oracle_digest(o, &d.p), "oracle digest");
    return d.str();
}

void emit(const std::string& line, const std::string& out_path) {
    std::cout << line << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::app);
        out << line << "\n";
    }
}

// Compute-or-reuse a result record. `compute` returns the record JSON string.
template <typename Fn>
void cached_emit(const ResultCache& cache, const std::string& canonical, const std::string& out,
                 Fn&& compute) {
    const std::string key = cache_key(canonical);
    if (auto hit = cache.lookup(key)) {
        emit(*hit, out);
        return;
    }
    const std::string record = compute();
    cache.store(key, record);
    emit(record, out);
}

struct CommonOpts {
    std::string knot = "unknot";
    long b = 1;
    long level = 10;
    std::string out;
    std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--knot", c.knot, "builtin name (unknot, 4_1) or knot file path");
    cmd->add_option("--b", c.b, "surgery parameter: M = S^3_{K,-1/b}")->check(CLI::PositiveNumber);
    cmd->add_option("--level", c.level, "truncation level n (exact mod (q;q)_n)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "append JSON lines to this file");
    cmd->add_option("--cache-dir", c.cache_dir,
                    "result cache directory (default: $QHABIRO_CACHE_DIR)");
}

int cmd_invariant(const CommonOpts& c) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    ResultCache cache(cache_dir_from(c.cache_dir));
    const std::string canonical = "invariant|" + oracle_digest(o.p) + "|b=" + std::to_string(c.b) +
                                  "|level=" + std::to_string(c.level);
    cached_emit(cache, canonical, c.out, [&] {
        ResultHandle r;
        require_ok(qh_invariant(o.p, c.b, c.level, &r.p), "invariant");
        CStr s;
        require_ok(qh_result_json(r.p, &s.p), "serialize");
        return s.str();
    });
    return 0;
}

int cmd_descendants(const CommonOpts& c, const std::string& shifts_csv, long grid) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    ResultCache cache(cache_dir_from(c.cache_dir));
    std::vector<std::vector<long>> shift_sets;
    if (!shifts_csv.empty()) {
        const auto s = parse_long_list(shifts_csv);
        if (static_cast<long>(s.size()) != c.b) {
            std::cerr << "--shifts needs exactly b = " << c.b << " entries\n";
            return 2;
        }
        shift_sets.push_back(s);
    } else {
        std::vector<long> cur(static_cast<std::size_t>(c.b), -grid);
        while (true) {
            shift_sets.push_back(cur);
            long pos = c.b - 1;
            while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == grid) {
                cur[static_cast<std::size_t>(pos)] = -grid;
                --pos;
            }
            if (pos < 0) break;
            ++cur[static_cast<std::size_t>(pos)];
        }
    }
    const std::string digest = oracle_digest(o.p);
    for (const auto& s : shift_sets) {
        std::ostringstream canonical;
        canonical << "descendant|" << digest << "|b=" << c.b << "|shifts=";
        for (std::size_t i = 0; i < s.size(); ++i) canonical << (i ? "," : "") << s[i];
        canonical << "|level=" << c.level;
        cached_emit(cache, canonical.str(), c.out, [&] {
            ResultHandle r;
            require_ok(qh_descendant(o.p, c.b, s.data(), s.size(), c.level, &r.p), "descendant");
            CStr str;
            require_ok(qh_result_json(r.p, &str.p), "serialize");
            return str.str();
        });
    }
    return 0;
}

int cmd_cable(const CommonOpts& c, long m) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    ResultCache cache(cache_dir_from(c.cache_dir));
    const std::string canonical = "cable|" + oracle_digest(o.p) + "|b=" + std::to_string(c.b) +
                                  "|m=" + std::to_string(m) + "|level=" + std::to_string(c.level);
    cached_emit(cache, canonical, c.out, [&] {
        ResultHandle r;
        require_ok(qh_cable(o.p, c.b, m, c.level, &r.p), "cable");
        CStr s;
        require_ok(qh_result_json(r.p, &s.p), "serialize");
        return s.str();
    });
    return 0;
}

int cmd_evaluate(const CommonOpts& c, long m, const std::string& orders_csv, bool csv) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    const auto orders = parse_long_list(orders_csv);
    if (csv) emit("knot,b,m,order,coords", c.out);
    for (long n : orders) {
        CStr s;
        require_ok(qh_wrt_at_root_json(o.p, c.b, m, n, &s.p),
                   "evaluate at order " + std::to_string(n));
        if (csv) {
            const Json j = Json::parse(s.str());
            std::ostringstream line;
            line << c.knot << "," << c.b << "," << m << "," << n << ",\"";
            const auto& coords = j.at("coords");
            for (std::size_t i = 0; i < coords.size(); ++i)
                line << (i ? ";" : "") << coords[i].get<std::string>();
            line << "\"";
            emit(line.str(), c.out);
        } else {
            Json rec;
            rec["knot"] = c.knot;
            rec["b"] = c.b;
            rec["m"] = m;
            rec["order"] = n;
            rec["wrt"] = Json::parse(s.str());
            emit(rec.dump(), c.out);
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, long level, long range, const std::string& orders_csv,
               const std::string& knot, const std::string& out) {
    Json params;
    params["level"] = level;
    params["range"] = range;
    params["knot"] = knot;
    if (!orders_csv.empty()) params["orders"] = parse_long_list(orders_csv);
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = {"basis", "integrality", "recurrences", "imk1", "vanishing", "tower"};
    } else {
        suites.push_back(suite);
    }
    bool all_passed = true;
    for (const auto& s : suites) {
        CStr rep;
        int passed = 0;
        require_ok(qh_verify_suite(s.c_str(), params.dump().c_str(), &rep.p, &passed),
                   "verify suite " + s);
        emit(rep.str(), out);
        all_passed = all_passed && passed;
    }
    return all_passed ? 0 : 1;
}

int cmd_rank(const CommonOpts& c, const std::string& family, long grid, long mmax, long deg,
             const std::string& levels) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    long lo = c.level, hi = c.level;
    if (!levels.empty()) {
        const auto sep = levels.find(':');
        if (sep == std::string::npos) {
            lo = hi = std::stol(levels);
        } else {
            lo = std::stol(levels.substr(0, sep));
            hi = std::stol(levels.substr(sep + 1));
        }
    }
    const long param = family == "cables" ? mmax : grid;
    CStr s;
    require_ok(qh_rank_report_json(o.p, c.b, family.c_str(), param, deg, lo, hi, &s.p), "rank");
    emit(s.str(), c.out);
    const Json j = Json::parse(s.str());
    return j.at("stabilized").get<bool>() ? 0 : 1;
}

int cmd_knot_import(const std::string& in_path, const std::string& out_path) {
    OracleHandle o;
    require_ok(qh_oracle_load(in_path.c_str(), &o.p), "load knot file '" + in_path + "'");
    long max_index = 0;
    require_ok(qh_oracle_max_index(o.p, &max_index), "max index");
    CStr name;
    require_ok(qh_oracle_name(o.p, &name.p), "name");
    Json out;
    out["name"] = name.str();
    out["kind"] = "cyclotomic";
    out["max_index"] = max_index;
    Json values = Json::array();
    for (long k = 0; k <= max_index; ++k) {
        CStr s;
        require_ok(qh_oracle_coeff_json(o.p, k, &s.p), "coefficient " + std::to_string(k));
        values.push_back(Json::parse(s.str()));
    }
    out["values"] = std::move(values);
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return 1;
    }
    f << out.dump(2) << "\n";
    std::cout << "imported '" << in_path << "' -> '" << out_path << "' (max_index " << max_index
              << ")\n";
    return 0;
}

int cmd_decompose(const CommonOpts& c, long m) {
    OracleHandle o;
    require_ok(qh_oracle_resolve(c.knot.c_str(), &o.p), "resolve knot '" + c.knot + "'");
    CStr s;
    require_ok(qh_decompose_json(o.p, c.b, m, c.level, &s.p), "decompose");
    emit(s.str(), c.out);
    return 0;
}

int cmd_multi(const std::string& file, const std::string& shifts_csv, long level,
              const std::string& out) {
    const auto shifts = parse_long_list(shifts_csv);
    CStr s;
    require_ok(qh_multi_invariant_json(file.c_str(), shifts.data(), shifts.size(), level, &s.p),
               "multi invariant");
    emit(s.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Habiro-ring-valued quantum invariants of -1/b surgeries on knots"};
    app.require_subcommand(1);

    CommonOpts inv_opts;
    auto* inv = app.add_subcommand("invariant", "compute I_M mod (q;q)_level");
    add_common(inv, inv_opts);

    CommonOpts desc_opts;
    std::string desc_shifts;
    long desc_grid = 2;
    auto* desc = app.add_subcommand("descendants", "descendant grid or a single shift vector");
    add_common(desc, desc_opts);
    desc->add_option("--shifts", desc_shifts, "comma-separated shifts (m_0,...,m_{b-1})");
    desc->add_option("--grid", desc_grid, "grid radius: all shifts in {-R..R}^b");

    CommonOpts cable_opts;
    long cable_m = 0;
    auto* cab = app.add_subcommand("cable", "phi(K^(m)) of the m-th parallel");
    add_common(cab, cable_opts);
    cab->add_option("--m", cable_m, "number of parallel copies")->check(CLI::NonNegativeNumber);

    CommonOpts eval_opts;
    long eval_m = 0;
    std::string eval_orders = "3,5,7";
    bool eval_csv = false;
    auto* ev = app.add_subcommand("evaluate",
                                  "WRT values at odd-order roots of unity (canonical fourth root)");
    add_common(ev, eval_opts);
    ev->add_option("--m", eval_m, "color of the surgery core")->check(CLI::NonNegativeNumber);
    ev->add_option("--orders", eval_orders, "comma-separated odd orders");
    ev->add_flag("--csv", eval_csv, "emit a CSV table instead of JSON lines");

    std::string verify_suite = "all";
    long verify_level = 25, verify_range = 10;
    std::string verify_orders, verify_knot = "4_1", verify_out;
    auto* ver = app.add_subcommand("verify", "run verification suites; exit 0 iff all pass");
    ver->add_option("--suite", verify_suite,
                    "basis|integrality|recurrences|imk1|vanishing|tower|all");
    ver->add_option("--level", verify_level, "truncation level for identity checks");
    ver->add_option("--range", verify_range, "index range for basis/recurrence checks");
    ver->add_option("--orders", verify_orders, "odd orders for the vanishing suite");
    ver->add_option("--knot", verify_knot, "oracle under test");
    ver->add_option("--out", verify_out, "append reports to this file");

    CommonOpts rank_opts;
    std::string rank_family = "descendants", rank_levels = "30:40";
    long rank_grid = 2, rank_mmax = 10, rank_deg = 10;
    auto* rank = app.add_subcommand("rank", "rank experiments over a level window");
    add_common(rank, rank_opts);
    rank->add_option("--family", rank_family, "descendants|cables");
    rank->add_option("--grid", rank_grid, "descendant shift-grid radius");
    rank->add_option("--mmax", rank_mmax, "largest cable m");
    rank->add_option("--deg", rank_deg, "coefficient degree bound");
    rank->add_option("--levels", rank_levels, "LO:HI truncation-level window");

    CommonOpts dec_opts;
    long dec_m = 1;
    auto* dec = app.add_subcommand("decompose",
                                   "decompose a colored invariant into descendants (b = 1 or 2)");
    add_common(dec, dec_opts);
    dec->add_option("--m", dec_m, "color")->check(CLI::NonNegativeNumber);

    std::string imp_in, imp_out;
    auto* imp = app.add_subcommand("knot-import",
                                   "validate a knot file and write canonical cyclotomic form");
    imp->add_option("--in", imp_in, "input knot file (cyclotomic or colored_jones)")->required();
    imp->add_option("--out", imp_out, "output path")->required();

    std::string multi_file, multi_shifts, multi_out;
    long multi_level = 10;
    auto* mul = app.add_subcommand("multi-invariant",
                                   "experimental: multi-component diagonal surgery data");
    mul->add_option("--file", multi_file, "cyclotomic_multi JSON file")->required();
    mul->add_option("--shifts", multi_shifts, "comma-separated shifts, one per component");
    mul->add_option("--level", multi_level, "truncation level");
    mul->add_option("--out", multi_out, "append output to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariant(inv_opts);
        if (desc->parsed()) return cmd_descendants(desc_opts, desc_shifts, desc_grid);
        if (cab->parsed()) return cmd_cable(cable_opts, cable_m);
        if (ev->parsed()) return cmd_evaluate(eval_opts, eval_m, eval_orders, eval_csv);
        if (ver->parsed())
            return cmd_verify(verify_suite, verify_level, verify_range, verify_orders, verify_knot,
                              verify_out);
        if (rank->parsed())
            return cmd_rank(rank_opts, rank_family, rank_grid, rank_mmax, rank_deg, rank_levels);
        if (dec->parsed()) return cmd_decompose(dec_opts, dec_m);
        if (imp->parsed()) return cmd_knot_import(imp_in, imp_out);
        if (mul->parsed()) return cmd_multi(multi_file, multi_shifts, multi_level, multi_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
