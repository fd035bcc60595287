#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = DELTAHALL_CLI_PATH;
const std::string fixtures = DELTAHALL_FIXTURE_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("deltahall_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("catalog export and class counts") {
    TempDir tmp;
    auto out = (tmp.path / "cat.json").string();

    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 --out " +
              out) == 0);
    CHECK(json::parse(slurp(out))["class_count"] == 7);

    CHECK(run("--quiver " + fixtures + "/a1.json --q 2 --max-dim 3 --out " +
              out) == 0);
    CHECK(json::parse(slurp(out))["class_count"] == 4);

    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 0 --out " +
              out) == 0);
    CHECK(json::parse(slurp(out))["class_count"] == 1);
}

TEST_CASE("byte-identical outputs across worker counts") {
    TempDir tmp;
    auto one = (tmp.path / "t1.json").string();
    auto four = (tmp.path / "t4.json").string();
    std::string base =
        "--quiver " + fixtures + "/a2.json --q 2 --max-dim 3 --table delta ";
    REQUIRE(run(base + "--jobs 1 --out " + one) == 0);
    REQUIRE(run(base + "--jobs 4 --out " + four) == 0);
    CHECK(slurp(one) == slurp(four));
    CHECK(!slurp(one).empty());
}

TEST_CASE("table content") {
    TempDir tmp;
    auto out = (tmp.path / "delta.json").string();
    REQUIRE(run("--quiver " + fixtures + "/a1.json --q 2 --max-dim 2 "
                "--table delta --out " + out) == 0);
    json j = json::parse(slurp(out));
    bool found = false;
    for (const auto& row : j["entries"])
        if (row["a"] == 1 && row["b"] == 1 && row["m"] == 2) {
            CHECK(row["coeff"]["b"] == "1/4");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("check suites and exit codes") {
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 "
              "--check green") == 0);
    CHECK(run("--quiver " + fixtures + "/a1.json --q 3 --max-dim 3 "
              "--check assoc") == 0);
    CHECK(run("--quiver " + fixtures + "/a1a1.json --q 2 --max-dim 2 "
              "--check commute") == 0);

    // configuration errors
    CHECK(run("--quiver " + fixtures + "/a2.json --q 4 --max-dim 2") == 2);
    CHECK(run("--quiver " + fixtures + "/loop.json --q 2 --max-dim 2") == 2);
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 "
              "--check rank2") == 2);
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --check nope") == 2);
    CHECK(run("--quiver /nonexistent.json --q 2") == 2);
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --check green "
              "--table delta") == 2);
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 "
              "--cap-matrices 1") == 2);
}

TEST_CASE("twisted table with a twist file") {
    TempDir tmp;
    auto out = (tmp.path / "tw.json").string();
    REQUIRE(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 "
                "--table twisted --twist " + fixtures + "/twist2.json --out " +
                out) == 0);
    json j = json::parse(slurp(out));
    CHECK(j["twist"] == json::array({{1, 0}, {-1, 2}}));
    CHECK(j["entries"].size() > 0);

    // wrong-size twist matrix
    CHECK(run("--quiver " + fixtures + "/a2.json --q 2 --max-dim 2 "
              "--table twisted --twist " + fixtures + "/twist1.json") == 2);
}

TEST_CASE("check report JSON lands in --out") {
    TempDir tmp;
    auto out = (tmp.path / "report.json").string();
    REQUIRE(run("--quiver " + fixtures + "/a2.json --q 3 --max-dim 3 "
                "--check rank2 --out " + out) == 0);
    json j = json::parse(slurp(out));
    CHECK(j["ok"] == true);
    CHECK(j["pairs"].size() == 2);
    for (const auto& p : j["pairs"]) CHECK(p["residual_zero"] == true);
}
