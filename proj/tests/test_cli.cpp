#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "wg/cache.hpp"
#include "wg/partition.hpp"

using json = nlohmann::json;

#ifndef WG_CLI_PATH
#error "WG_CLI_PATH must point at the wg binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(WG_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("eval closed forms and series") {
    RunResult r = run("eval --group unitary --partition 2 --form rational");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/((N-1) N (N+1))\n");

    r = run("eval --group orthogonal --partition 2 --form rational");
    CHECK(r.out == "-1/((N-1) N (N+2))\n");

    r = run("eval --group orthogonal-shifted --partition 2 --form series --order 5 --format csv");
    CHECK(r.exit_code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "inverse_power,coefficient");
    CHECK(rows[1] == "3,-1");
    CHECK(rows[2] == "4,4");
    CHECK(rows[3] == "5,-13");

    r = run("eval --group unitary --partition 2 --form rational --format json");
    json doc = json::parse(r.out);
    for (const char* key : {"group", "partition", "form", "numerator", "denominator", "display"})
        CHECK(doc.contains(key));
    CHECK(doc["display"] == "-1/((N-1) N (N+1))");
}

TEST_CASE("counts emits tables with convention metadata") {
    RunResult r = run("counts --family palindromic-monotone --partition 2 --kmax 3");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["family"] == "palindromic-monotone");
    CHECK(doc["convention"] == "hat-low-interleaved");
    REQUIRE(doc["entries"].size() == 4);
    CHECK(doc["entries"][1]["count"] == "1");
    CHECK(doc["entries"][2]["count"] == "4");
    CHECK(doc["entries"][3]["count"] == "13");

    r = run("counts --family monotone --partition 2,1 --kmax 5 --format csv");
    auto rows = lines(r.out);
    CHECK(rows[0] == "k,count");
    CHECK(rows.size() == 7);

    r = run("counts --family proper --partition 2 --kmax 3 --dmax 3");
    doc = json::parse(r.out);
    for (const auto& e : doc["entries"]) CHECK(e.contains("d"));
}

TEST_CASE("enumerate census matches the quoted counts") {
    RunResult r = run("enumerate --group u --partition 2 --chi 0 --emit census");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"4\":8,\"3,2\":28,\"2,2,2\":21}\n");

    r = run("enumerate --group u --partition 2 --chi 2 --emit coefficient");
    CHECK(json::parse(r.out)["coefficient"] == "-1");

    r = run("enumerate --group u --partition 2 --chi 2 --emit records");
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        json rec = json::parse(row);
        for (const char* key : {"m", "rho_type", "rho", "Pi", "tau1", "tau2", "chi"})
            CHECK(rec.contains(key));
        CHECK(rec["chi"] == 2);
        CHECK(rec["rho"] == "(3 4)");
    }

    r = run("enumerate --group o --partition 2 --chi 2 --emit records");
    rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        json rec = json::parse(row);
        for (const char* key : {"m", "rho_type", "rho", "Pi", "theta", "f1", "f2", "chi",
                                "chi_literal"})
            CHECK(rec.contains(key));
        CHECK(rec["chi_literal"] == 6);
    }

    r = run("enumerate --group o --partition 2 --chi 1 --emit coefficient");
    CHECK(json::parse(r.out)["coefficient"] == "-2");
}

TEST_CASE("wick moments") {
    RunResult r = run("wick --kind real --factors \"1,1;1,1;1,1;1,1\" --omega 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    r = run("wick --kind complex --factors \"1,1;1,1;1,1;1,1\" --omega 1");
    CHECK(r.out == "2\n");

    r = run("wick --kind real --factors \"1,1;1,1\" --omega 2 --format json");
    json doc = json::parse(r.out);
    CHECK(doc["moment"] == "1/2");
}

TEST_CASE("byte-identical output across runs") {
    for (const std::string& cmd :
         {std::string("enumerate --group u --partition 2 --chi 0 --emit census"),
          std::string("enumerate --group o --partition 2 --chi 1 --emit records"),
          std::string("eval --group unitary --partition 2,1 --form series --order 8 --format json"),
          std::string("counts --family matching-monotone --partition 2 --kmax 5")}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("domain errors exit with code 1") {
    CHECK(run("eval --group unitary --partition nonsense --form rational").exit_code == 1);
    CHECK(run("eval --group martian --partition 2 --form rational").exit_code == 1);
    CHECK(run("counts --family monotone --partition 2 --kmax 40").exit_code == 1);
}

TEST_CASE("cache cold, warm and corrupted runs agree") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "wg-cli-cache";
    std::filesystem::remove_all(dir);
    std::string base = "--cache-dir " + dir.string() +
                       " eval --group orthogonal --partition 2,1 --form rational";
    RunResult cold = run(base);
    CHECK(cold.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "zonal-n3.json"));
    RunResult warm = run(base);
    CHECK(warm.out == cold.out);
    {
        std::ofstream f(dir / "zonal-n3.json");
        f << "garbage{";
    }
    RunResult healed = run(base);
    CHECK(healed.exit_code == 0);
    CHECK(healed.out == cold.out);
}

TEST_CASE("WG_CACHE_DIR environment variable is honored") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "wg-cli-cache-env";
    std::filesystem::remove_all(dir);
    RunResult r = run("eval --group orthogonal --partition 2 --form rational",
                      "WG_CACHE_DIR=" + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "zonal-n2.json"));
}

TEST_CASE("value-corrupt cache with a valid envelope is rebuilt") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "wg-cli-cache-poison";
    std::filesystem::remove_all(dir);
    std::string base = "--cache-dir " + dir.string() +
                       " eval --group orthogonal --partition 2,1 --form rational";
    RunResult clean = run(base);
    CHECK(clean.exit_code == 0);

    // plant a wrong-valued table under the correct generator envelope
    wg::cache::set_dir(dir.string());
    json entries = json::object();
    for (const auto& lam : wg::partitions(3))
        for (const auto& mu : wg::partitions(3)) entries[lam.str() + "|" + mu.str()] = "0";
    wg::cache::store("zonal-n3.json", "wg-zonal-hn-average-v1", entries);

    RunResult healed = run(base);
    CHECK(healed.exit_code == 0);
    CHECK(healed.out == clean.out);
    wg::cache::set_dir("");
}

TEST_CASE("verify small suite") {
    RunResult r = run("verify --suite small");
    CHECK(r.exit_code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 11);  // ten criteria plus the summary
    for (size_t i = 0; i < 10; ++i) CHECK(rows[i].substr(0, 4) == "PASS");

    r = run("verify --suite small --format json");
    json doc = json::parse(r.out);
    REQUIRE(doc.size() == 10);
    for (const auto& e : doc) {
        CHECK(e.contains("id"));
        CHECK(e.contains("passed"));
        CHECK(e["passed"] == true);
    }
}
