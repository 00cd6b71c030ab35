// Smoke tests for the shared-library C interface: handles, error codes,
// JSON payloads. The mathematics behind it is covered by the unit suites.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "qhabiro.h"

#define REQUIRE(cond)                                                              \
    do {                                                                           \
        if (!(cond)) {                                                             \
            std::fprintf(stderr, "FAILED %s:%d: %s\nlast error: %s\n", __FILE__,   \
                         __LINE__, #cond, qh_last_error());                        \
            return 1;                                                              \
        }                                                                          \
    } while (0)

int main() {
    REQUIRE(std::strlen(qh_version()) > 0);

    // Error paths set codes and messages.
    qh_oracle* bad = nullptr;
    REQUIRE(qh_oracle_builtin("9_42", &bad) == QH_ERR_ORACLE);
    REQUIRE(std::strlen(qh_last_error()) > 0);
    REQUIRE(qh_oracle_builtin(nullptr, &bad) == QH_ERR_INVALID_ARGUMENT);

    qh_oracle* unknot = nullptr;
    REQUIRE(qh_oracle_builtin("unknot", &unknot) == QH_OK);
    char* name = nullptr;
    REQUIRE(qh_oracle_name(unknot, &name) == QH_OK);
    REQUIRE(std::string(name) == "unknot");
    qh_string_free(name);

    long maxk = 0;
    REQUIRE(qh_oracle_max_index(unknot, &maxk) == QH_OK);
    REQUIRE(maxk == -1);

    char* coeff = nullptr;
    REQUIRE(qh_oracle_coeff_json(unknot, 0, &coeff) == QH_OK);
    REQUIRE(std::string(coeff).find("\"terms\":[[0,\"1\"]]") != std::string::npos);
    qh_string_free(coeff);

    // Unknot invariant is 1 at every level.
    qh_result* inv = nullptr;
    REQUIRE(qh_invariant(unknot, 2, 10, &inv) == QH_OK);
    char* record = nullptr;
    REQUIRE(qh_result_json(inv, &record) == QH_OK);
    REQUIRE(std::string(record).find("\"level\":10") != std::string::npos);
    REQUIRE(std::string(record).find("[[0,\"1\"]]") != std::string::npos);
    qh_string_free(record);

    // Projection and equality through the API.
    qh_result* proj = nullptr;
    REQUIRE(qh_result_project(inv, 5, &proj) == QH_OK);
    qh_result* direct = nullptr;
    REQUIRE(qh_invariant(unknot, 2, 5, &direct) == QH_OK);
    int eq = 0;
    REQUIRE(qh_result_equal(proj, direct, &eq) == QH_OK);
    REQUIRE(eq == 1);
    qh_result_free(proj);
    qh_result_free(direct);

    // Root evaluation: even order is rejected, odd order works.
    char* root = nullptr;
    REQUIRE(qh_result_eval_root_json(inv, 4, &root) == QH_ERR_EVEN_ORDER);
    REQUIRE(qh_result_eval_root_json(inv, 5, &root) == QH_OK);
    REQUIRE(std::string(root).find("\"order\":5") != std::string::npos);
    qh_string_free(root);
    qh_result_free(inv);

    // The 4_1 oracle via resolve; descendants, cables, wrt, decompose.
    qh_oracle* f8 = nullptr;
    REQUIRE(qh_oracle_resolve("4_1", &f8) == QH_OK);

    const long shifts[2] = {0, -1};
    qh_result* desc = nullptr;
    REQUIRE(qh_descendant(f8, 2, shifts, 2, 8, &desc) == QH_OK);
    qh_result_free(desc);

    // Wrong shift count is an invalid argument, not a crash.
    REQUIRE(qh_descendant(f8, 2, shifts, 1, 8, &desc) == QH_ERR_INVALID_ARGUMENT);

    qh_result* cab = nullptr;
    REQUIRE(qh_cable(f8, 2, 2, 8, &cab) == QH_OK);
    qh_result_free(cab);

    char* wrt = nullptr;
    REQUIRE(qh_wrt_at_root_json(f8, 2, 0, 7, &wrt) == QH_OK);
    qh_string_free(wrt);

    char* dec = nullptr;
    REQUIRE(qh_decompose_json(f8, 1, 1, 10, &dec) == QH_OK);
    REQUIRE(std::string(dec).find("\"matches_colored_invariant\":true") != std::string::npos);
    qh_string_free(dec);

    // A small verify suite through the API.
    char* report = nullptr;
    int passed = 0;
    REQUIRE(qh_verify_suite("vanishing", "{\"orders\":[3,5,7]}", &report, &passed) == QH_OK);
    REQUIRE(passed == 1);
    qh_string_free(report);
    REQUIRE(qh_verify_suite("nonsense", "", &report, &passed) == QH_ERR_INVALID_ARGUMENT);

    // A tiny rank window through the API.
    char* rank = nullptr;
    REQUIRE(qh_rank_report_json(f8, 1, "descendants", 1, 3, 8, 9, &rank) == QH_OK);
    REQUIRE(std::string(rank).find("\"levels\":[8,9]") != std::string::npos);
    qh_string_free(rank);

    qh_oracle_free(f8);
    qh_oracle_free(unknot);
    qh_oracle_free(nullptr); // must be a no-op

    std::puts("capi: all checks passed");
    return 0;
}
