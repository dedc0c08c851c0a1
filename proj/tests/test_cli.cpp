#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

const std::string& bin() {
    static std::string b = HGTRACE_BIN;
    return b;
}

const fs::path& work_dir() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / "hgtrace_cli_test";
        fs::create_directories(p);
        return p;
    }();
    return d;
}

// Runs the CLI through the shell, capturing stdout; stderr goes to a side
// file so diagnostics never pollute the data stream under test.
RunResult run(const std::string& args, const std::string& env = "") {
    fs::path out = work_dir() / "stdout.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + bin() + "\" " + args + " > \"" +
                      out.string() + "\" 2> \"" + (work_dir() / "stderr.txt").string() + "\"";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string fixture(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream(p) << content;
    return p.string();
}

const std::string& e3() {
    static std::string p = fixture("e3.json", R"({"m": 3, "n": 3, "edges": [[0, 1, 2]]})");
    return p;
}

const std::string& k2() {
    static std::string p = fixture("k2.json", R"({"m": 2, "n": 2, "edges": [[0, 1]]})");
    return p;
}

const std::string& c33() {
    static std::string p = fixture(
        "c33.json", R"({"m": 3, "n": 6, "edges": [[0, 1, 3], [1, 2, 4], [0, 2, 5]]})");
    return p;
}

const std::string& s3() {
    static std::string p = fixture(
        "s3.json", R"({"m": 3, "n": 7, "edges": [[0, 1, 2], [0, 3, 4], [0, 5, 6]]})");
    return p;
}

const std::string& p3() {
    static std::string p = fixture(
        "p3.json", R"({"m": 3, "n": 7, "edges": [[0, 1, 3], [1, 2, 4], [2, 5, 6]]})");
    return p;
}

const std::string& theta() {
    static std::string p = fixture(
        "theta.json", R"({"m": 2, "n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]})");
    return p;
}

} // namespace

TEST_CASE("trace subcommand emits exact fractions") {
    RunResult single = run("trace " + e3() + " -d 3");
    CHECK(single.code == 0);
    json j = json::parse(single.out);
    CHECK(j.is_object());
    CHECK(j["d"] == 3);
    CHECK(j["trace"] == "9/1");

    RunResult multi = run("trace " + e3() + " -d 3 -d 6");
    json arr = json::parse(multi.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[1]["trace"] == "9/1");

    RunResult csv = run("trace " + e3() + " -d 3 -d 6 --format csv");
    CHECK(csv.out == "d,trace\n3,9/1\n6,9/1\n");
}

TEST_CASE("trace term breakdown sums to the total") {
    RunResult r = run("trace " + c33() + " -d 3 --terms");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("terms"));
    CHECK(j["trace"] == "216/1");
    for (const auto& t : j["terms"]) {
        CHECK(t.contains("edges"));
        CHECK(t.contains("kind"));
        CHECK(t.contains("value"));
    }
}

TEST_CASE("oracle agrees with the closed form through the CLI") {
    RunResult closed = run("trace " + c33() + " -d 3 --format csv");
    RunResult brute = run("oracle " + c33() + " -d 3 --format csv");
    CHECK(brute.code == 0);
    CHECK(closed.out.substr(closed.out.find('\n') + 1) == "3,216/1\n");
    CHECK(brute.out.find("3,216/1,bruteforce") != std::string::npos);

    RunResult matrix = run("oracle " + k2() + " -d 4 --method matrix --format csv");
    CHECK(matrix.out.find("4,2/1,matrix") != std::string::npos);
}

TEST_CASE("estrada subcommand reports a certified enclosure") {
    RunResult r = run("estrada " + k2());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["D"] == 10);
    CHECK(j["lower"].get<std::string>() <= std::string("3.086161269633"));
    CHECK(j["upper"].get<std::string>() >= std::string("3.086161269633"));
    CHECK(j["exact_lower"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("compare subcommand decides the star against the path") {
    RunResult r = run("compare " + s3() + " " + p3());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "a_greater");
    CHECK(j["a"].contains("lower"));
    CHECK(j["b"].contains("upper"));
}

TEST_CASE("enumerate output feeds back into trace") {
    RunResult r = run("enumerate --family hypertrees -m 3 --edges 3");
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    for (const auto& h : arr) CHECK(h.contains("canonical"));

    std::string member = fixture("member.json", arr[0].dump());
    RunResult t = run("trace " + member + " -d 3");
    CHECK(t.code == 0);
}

TEST_CASE("verify subcommand lists and runs checks") {
    RunResult list = run("verify --list");
    CHECK(list.code == 0);
    json arr = json::parse(list.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() >= 8);
    for (const auto& c : arr) {
        CHECK(c.contains("check"));
        CHECK(c.contains("description"));
    }

    RunResult st = run("verify --check structure");
    CHECK(st.code == 0);
    json rep = json::parse(st.out);
    CHECK(rep["passed"] == true);
    CHECK(!rep["checks"].empty());
}

TEST_CASE("exit codes separate failure classes") {
    std::string bad = fixture("bad.json", "{\"m\": 3, ");
    CHECK(run("trace " + bad + " -d 3").code == 2);
    CHECK(run("trace " + (work_dir() / "missing.json").string() + " -d 3").code == 2);
    CHECK(run("trace " + e3() + " --no-such-flag").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("trace " + theta() + " -d 2").code == 3);
    CHECK(run("oracle " + c33() + " -d 6", "HGTRACE_BUDGET=50").code == 4);
    CHECK(run("oracle " + c33() + " -d 6 --budget 50").code == 4);
}

TEST_CASE("repeated runs are byte-identical") {
    std::string args = "trace " + c33() + " -d 3 -d 6 --terms";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult v1 = run("verify --check tree-root-uniqueness");
    RunResult v2 = run("verify --check tree-root-uniqueness");
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);

    RunResult o1 = run("oracle " + c33() + " -d 6 --threads 1");
    RunResult o2 = run("oracle " + c33() + " -d 6 --threads 4");
    CHECK(o1.code == 0);
    CHECK(o1.out == o2.out);
}
