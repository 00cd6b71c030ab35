// End-to-end CLI checks: spawns the real binary, captures stdout/exit codes,
// exercises the cache round trip.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QHABIRO_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL " << what << "\n";
    } else {
        std::cout << "ok   " << what << "\n";
    }
}

} // namespace

int main() {
    // Unknot invariant is the constant 1.
    {
        const RunResult r = run("invariant --knot unknot --b 1 --level 10");
        expect(r.exit_code == 0, "invariant exit code");
        expect(r.out.find("\"terms\":[[0,\"1\"]]") != std::string::npos, "invariant value is 1");
    }
    // Descendant single shift and grid.
    {
        const RunResult r = run("descendants --knot 4_1 --b 2 --shifts 0,0 --level 8");
        expect(r.exit_code == 0, "descendants exit code");
        expect(r.out.find("\"shifts\":[0,0]") != std::string::npos, "descendants record shape");
        const RunResult g = run("descendants --knot 4_1 --b 1 --grid 1 --level 6");
        expect(g.exit_code == 0, "descendant grid exit code");
        int lines = 0;
        for (char c : g.out)
            if (c == '\n') ++lines;
        expect(lines == 3, "grid of radius 1 in one variable yields 3 records");
    }
    // Warm cache: second run must produce byte-identical output.
    {
        const std::string dir = "/tmp/qhabiro_cli_cache_test";
        std::filesystem::remove_all(dir);
        const std::string args =
            "invariant --knot 4_1 --b 2 --level 12 --cache-dir " + dir;
        const RunResult first = run(args);
        const RunResult second = run(args);
        expect(first.exit_code == 0 && second.exit_code == 0, "cache run exit codes");
        expect(!first.out.empty() && first.out == second.out, "warm cache is byte-identical");
        expect(std::filesystem::exists(dir), "cache directory populated");
    }
    // Root-of-unity evaluation, CSV form.
    {
        const RunResult r = run("evaluate --knot 4_1 --b 2 --m 0 --orders 1,3,5 --csv");
        expect(r.exit_code == 0, "evaluate exit code");
        expect(r.out.rfind("knot,b,m,order,coords", 0) == 0, "CSV header");
    }
    // Verify suites pass and fail deliberately.
    {
        const RunResult ok = run("verify --suite vanishing --orders 3,5,7,9,11");
        expect(ok.exit_code == 0, "vanishing suite passes");
        const RunResult imk1 = run("verify --suite imk1 --level 15");
        expect(imk1.exit_code == 0, "imk1 suite passes");
        const RunResult bad = run("verify --suite no_such_suite");
        expect(bad.exit_code != 0, "unknown suite fails");
    }
    // Decompose command reports the match flag.
    {
        const RunResult r = run("decompose --knot 4_1 --b 2 --m 1 --level 10");
        expect(r.exit_code == 0, "decompose exit code");
        expect(r.out.find("\"matches_colored_invariant\":true") != std::string::npos,
               "decomposition verified");
    }
    // knot-import round trip through a colored Jones file.
    {
        const std::string in = "/tmp/qhabiro_cli_cj.json";
        const std::string out = "/tmp/qhabiro_cli_cyclo.json";
        std::ofstream f(in);
        // J(V_0), J(V_1) of the unknot: quantum dimensions 1, [2].
        f << R"x({"name":"unknot-cj","kind":"colored_jones","max_index":1,"values":[)x"
          << R"x({"unit":"q^(1/4)","terms":[[0,"1"]]},)x"
          << R"x({"unit":"q^(1/4)","terms":[[-2,"1"],[2,"1"]]}]})x" << "\n";
        f.close();
        const RunResult r = run("knot-import --in " + in + " --out " + out);
        expect(r.exit_code == 0, "knot-import exit code");
        std::ifstream check(out);
        std::string content((std::istreambuf_iterator<char>(check)),
                            std::istreambuf_iterator<char>());
        expect(content.find("\"kind\": \"cyclotomic\"") != std::string::npos,
               "canonical cyclotomic output");
    }
    // Small rank window end to end (exit code reflects stabilization).
    {
        const RunResult r =
            run("rank --knot 4_1 --b 1 --family descendants --grid 1 --deg 3 --levels 8:9");
        expect(r.exit_code == 0, "rank exit code (stabilized)");
        expect(r.out.find("\"ranks\":[") != std::string::npos, "rank report shape");
    }
    // Experimental multi-component data end to end: unlinked trivial data
    // gives the constant 1.
    {
        const std::string multi = "/tmp/qhabiro_cli_multi.json";
        {
            nlohmann::ordered_json m;
            m["name"] = "trivial-multi";
            m["kind"] = "cyclotomic_multi";
            m["arity"] = 2;
            m["framings"] = {-1, 1};
            m["max_index"] = 9;
            nlohmann::ordered_json entry;
            entry["index"] = {0, 0};
            entry["value"] = nlohmann::ordered_json::parse(
                R"x({"unit":"q^(1/4)","terms":[[0,"1"]]})x");
            m["values"] = nlohmann::ordered_json::array({entry});
            std::ofstream f(multi);
            f << m.dump();
        }
        const RunResult r = run("multi-invariant --file " + multi + " --shifts 0,0 --level 10");
        expect(r.exit_code == 0, "multi-invariant exit code");
        const auto rec = nlohmann::ordered_json::parse(r.out);
        expect(rec.at("value").at("rep").at("terms").dump() == "[[0,\"1\"]]",
               "trivial multi data gives the constant 1");
    }

    if (failures == 0) std::cout << "cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
