#include "qhabiro.h"

#include <cstring>
#include <string>

#include "qhabiro/experiments.hpp"
#include "qhabiro/json_io.hpp"
#include "qhabiro/knotdata.hpp"
#include "qhabiro/multi.hpp"
#include "qhabiro/surgery.hpp"
#include "qhabiro/verify.hpp"

struct qh_oracle {
    qh::KnotOracle impl;
};

struct qh_result {
    std::string knot;
    long b = 1;
    std::vector<long> shifts; // descendant shifts, empty for colored/cable
    long m = -1;              // color, -1 when not a colored/cable value
    std::string kind;         // invariant | descendant | colored | cable
    qh::HabiroTrunc value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qh_status fail(qh_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
qh_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const qh::NotDivisibleError& e) {
        return fail(QH_ERR_NOT_DIVISIBLE, e.what());
    } catch (const qh::OffsetMismatchError& e) {
        return fail(QH_ERR_OFFSET_MISMATCH, e.what());
    } catch (const qh::LevelMismatchError& e) {
        return fail(QH_ERR_LEVEL, e.what());
    } catch (const qh::LevelError& e) {
        return fail(QH_ERR_LEVEL, e.what());
    } catch (const qh::EvenOrderError& e) {
        return fail(QH_ERR_EVEN_ORDER, e.what());
    } catch (const qh::OracleError& e) {
        return fail(QH_ERR_ORACLE, e.what());
    } catch (const qh::RewriteError& e) {
        return fail(QH_ERR_REWRITE, e.what());
    } catch (const qh::ParseError& e) {
        return fail(QH_ERR_PARSE, e.what());
    } catch (const qh::Error& e) {
        return fail(QH_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(QH_ERR_INTERNAL, e.what());
    }
}

qh::Json result_record(const qh_result& r) {
    qh::Json j;
    j["knot"] = r.knot;
    j["kind"] = r.kind;
    j["b"] = r.b;
    j["shifts"] = r.shifts;
    if (r.m >= 0) j["m"] = r.m;
    j["level"] = r.value.level;
    j["value"] = qh::habiro_to_json(r.value);
    return j;
}

} // namespace

extern "C" {

const char* qh_version(void) { return "qhabiro 1.0.0"; }

const char* qh_last_error(void) { return g_last_error.c_str(); }

void qh_string_free(char* s) { std::free(s); }

qh_status qh_oracle_builtin(const char* name, qh_oracle** out) {
    if (!name || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new qh_oracle{qh::KnotOracle::builtin(name)};
        return QH_OK;
    });
}

qh_status qh_oracle_load(const char* path, qh_oracle** out) {
    if (!path || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new qh_oracle{qh::load_knot_file(path)};
        return QH_OK;
    });
}

qh_status qh_oracle_resolve(const char* name_or_path, qh_oracle** out) {
    if (!name_or_path || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new qh_oracle{qh::resolve_knot(name_or_path)};
        return QH_OK;
    });
}

void qh_oracle_free(qh_oracle* o) { delete o; }

qh_status qh_oracle_name(const qh_oracle* o, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    *out = dup_string(o->impl.name());
    return QH_OK;
}

qh_status qh_oracle_digest(const qh_oracle* o, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    *out = dup_string(o->impl.digest());
    return QH_OK;
}

qh_status qh_oracle_max_index(const qh_oracle* o, long* out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    *out = o->impl.max_k();
    return QH_OK;
}

qh_status qh_oracle_coeff_json(const qh_oracle* o, long k, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(qh::laurent_to_json(o->impl.coeff(k)).dump());
        return QH_OK;
    });
}

qh_status qh_oracle_colored_jones_json(const qh_oracle* o, long n, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(qh::laurent_to_json(qh::colored_jones_from_cyclotomic(o->impl, n)).dump());
        return QH_OK;
    });
}

qh_status qh_invariant(const qh_oracle* o, long b, long level, qh_result** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* r = new qh_result;
        r->knot = o->impl.name();
        r->b = b;
        r->shifts.assign(static_cast<std::size_t>(b), 0);
        r->kind = "invariant";
        r->value = qh::invariant(o->impl, b, level);
        *out = r;
        return QH_OK;
    });
}

qh_status qh_descendant(const qh_oracle* o, long b, const long* shifts, size_t nshifts,
                        long level, qh_result** out) {
    if (!o || !out || (!shifts && nshifts)) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qh::DescendantSpec spec;
        spec.b = b;
        spec.shifts.assign(shifts, shifts + nshifts);
        spec.level = level;
        auto* r = new qh_result;
        r->knot = o->impl.name();
        r->b = b;
        r->shifts = spec.shifts;
        r->kind = "descendant";
        r->value = qh::descendant(o->impl, spec);
        *out = r;
        return QH_OK;
    });
}

qh_status qh_colored_invariant(const qh_oracle* o, long b, long m, long level, qh_result** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* r = new qh_result;
        r->knot = o->impl.name();
        r->b = b;
        r->m = m;
        r->kind = "colored";
        r->value = qh::colored_invariant(o->impl, b, m, level);
        *out = r;
        return QH_OK;
    });
}

qh_status qh_cable(const qh_oracle* o, long b, long m, long level, qh_result** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* r = new qh_result;
        r->knot = o->impl.name();
        r->b = b;
        r->m = m;
        r->kind = "cable";
        r->value = qh::phi_cable(o->impl, b, m, level);
        *out = r;
        return QH_OK;
    });
}

void qh_result_free(qh_result* r) { delete r; }

qh_status qh_result_project(const qh_result* r, long level, qh_result** out) {
    if (!r || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* p = new qh_result(*r);
        p->value = qh::project(r->value, level);
        *out = p;
        return QH_OK;
    });
}

qh_status qh_result_json(const qh_result* r, char** out) {
    if (!r || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(result_record(*r).dump());
        return QH_OK;
    });
}

qh_status qh_result_equal(const qh_result* a, const qh_result* b, int* out) {
    if (!a || !b || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    *out = (a->value == b->value) ? 1 : 0;
    return QH_OK;
}

qh_status qh_result_eval_root_json(const qh_result* r, long order, char** out) {
    if (!r || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(qh::cyclo_to_json(qh::evaluate_at_root(r->value, order)).dump());
        return QH_OK;
    });
}

qh_status qh_wrt_at_root_json(const qh_oracle* o, long b, long m, long order, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(qh::cyclo_to_json(qh::wrt_at_root(o->impl, b, m, order)).dump());
        return QH_OK;
    });
}

qh_status qh_decompose_json(const qh_oracle* o, long b, long m, long level, char** out) {
    if (!o || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const qh::Decomposition d = qh::decompose_to_descendants(o->impl, b, m, level);
        const qh::HabiroTrunc lhs = qh::colored_invariant(o->impl, b, m, level);
        const qh::HabiroTrunc rhs = qh::evaluate_decomposition(o->impl, d, level);
        qh::Json j;
        j["knot"] = o->impl.name();
        j["b"] = b;
        j["m"] = m;
        j["level"] = level;
        qh::Json terms = qh::Json::array();
        for (const auto& t : d.terms) {
            qh::Json jt;
            jt["shifts"] = t.spec.shifts;
            jt["coeff"] = qh::laurent_to_json(t.coeff);
            terms.push_back(std::move(jt));
        }
        j["terms"] = std::move(terms);
        j["constant"] = qh::laurent_to_json(d.constant);
        j["matches_colored_invariant"] = (lhs == rhs);
        *out = dup_string(j.dump());
        if (lhs != rhs)
            return fail(QH_ERR_REWRITE, "decomposition does not reproduce the colored invariant");
        return QH_OK;
    });
}

qh_status qh_verify_suite(const char* suite, const char* params_json, char** report_json,
                          int* passed) {
    if (!suite || !report_json || !passed) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qh::SuiteParams params;
        if (params_json && params_json[0]) {
            const qh::Json j = qh::Json::parse(params_json);
            params.level = j.value("level", params.level);
            params.range = j.value("range", params.range);
            params.knot = j.value("knot", params.knot);
            if (j.contains("orders")) params.orders = j.at("orders").get<std::vector<long>>();
        }
        const qh::SuiteReport rep = qh::run_suite(suite, params);
        qh::Json j;
        j["suite"] = rep.suite;
        j["passed"] = rep.passed;
        j["lines"] = rep.lines;
        *report_json = dup_string(j.dump());
        *passed = rep.passed ? 1 : 0;
        return QH_OK;
    });
}

qh_status qh_rank_report_json(const qh_oracle* o, long b, const char* family, long param,
                              long degree, long level_lo, long level_hi, char** out) {
    if (!o || !family || !out) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string fam(family);
        qh::RankExperimentReport rep;
        if (fam == "descendants") {
            rep = qh::rank_descendant_grid(o->impl, b, param, degree, level_lo, level_hi);
        } else if (fam == "cables") {
            rep = qh::rank_cable_family(o->impl, b, param, degree, level_lo, level_hi);
        } else {
            return fail(QH_ERR_INVALID_ARGUMENT, "family must be 'descendants' or 'cables'");
        }
        *out = dup_string(rep.to_json().dump());
        return QH_OK;
    });
}

qh_status qh_multi_invariant_json(const char* path, const long* shifts, size_t nshifts,
                                  long level, char** out) {
    if (!path || !out || (!shifts && nshifts)) return fail(QH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const qh::MultiSurgeryData data = qh::load_multi_file(path);
        std::vector<long> sh(shifts, shifts + nshifts);
        if (sh.empty()) sh.assign(static_cast<std::size_t>(data.arity), 0);
        const qh::HabiroTrunc v = qh::multi_invariant(data, sh, level);
        qh::Json j;
        j["knot"] = data.name;
        j["kind"] = "multi_invariant";
        j["arity"] = data.arity;
        j["shifts"] = sh;
        j["level"] = level;
        j["value"] = qh::habiro_to_json(v);
        *out = dup_string(j.dump());
        return QH_OK;
    });
}

} // extern "C"
