#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(AKBLOCKS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
        out.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("weight command") {
    auto r = run_cli("weight --e 9 --a 1,1,5,2 \"3,3,2|2,1|1,1,1,1,1,1|2,2,1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run_cli("weight --e 9 --a 1,1,5,2 --conjugate \"3,3,2|2,1|1,1,1,1,1,1|2,2,1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run_cli("weight --e 2 --a 0,1 \"-|-\"");
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("weight command parse failures exit with 2") {
    CHECK(run_cli("weight --e 2 --a 0,1 \"1,2|-\"").code == 2);
    CHECK(run_cli("weight --e 2 --a 0,1 \"1|1|1\"").code == 2);
    CHECK(run_cli("weight --e 1 --a 0,1 \"1|-\"").code == 2);
    CHECK(run_cli("weight --e 2 --a 0,1 --r 3 \"1|-\"").code == 2);
}

TEST_CASE("blocks command") {
    auto r = run_cli("blocks --n 2 --e 3 --a 0,1");
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["params"]["e"] == 3);
    REQUIRE(doc["blocks"].size() == 3);
    std::multiset<int64_t> weights;
    for (const auto& b : doc["blocks"]) weights.insert(b["weight"].get<int64_t>());
    CHECK(weights == std::multiset<int64_t>{0, 0, 1});
    for (const auto& b : doc["blocks"]) {
        if (b["weight"] == 1) {
            CHECK(b["members"] ==
                  Json::array({"2|-", "1|1", "-|1,1"}));  // dominance descending
            CHECK(b["is_chain"] == true);
        }
    }

    // byte-for-byte determinism
    CHECK(run_cli("blocks --n 2 --e 3 --a 0,1").out == r.out);

    auto empty = run_cli("blocks --n 0 --e 2 --a 0,1");
    REQUIRE(empty.code == 0);
    Json edoc = Json::parse(empty.out);
    REQUIRE(edoc["blocks"].size() == 1);
    CHECK(edoc["blocks"][0]["weight"] == 0);
}

TEST_CASE("verify command") {
    auto r = run_cli("verify --p 5 --q 4 --a 0,0 --n 1 --content 1,0");
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["dim_radB"] == 1);
    CHECK(doc["radB_square_dim"] == 0);

    r = run_cli("verify --p 7 --q 2 --a 0,1 --n 2 --content 1,1,0");
    REQUIRE(r.code == 0);
    doc = Json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["dim_radB"] == 4);
    CHECK(doc["radB_cube_dim"] == 0);

    // --q can be derived from --e
    r = run_cli("verify --p 7 --e 3 --a 0,1 --n 2 --content 1,1,0");
    CHECK(r.code == 0);
}

TEST_CASE("verify exit codes") {
    // weight-zero block -> precondition
    CHECK(run_cli("verify --p 5 --q 4 --a 0,1 --n 1 --content 1,0").code == 3);
    // dimension cap -> resource cap
    CHECK(run_cli("verify --p 7 --q 2 --a 0,1 --n 6 --content 0,0,0").code == 4);
    // inconsistent q and e -> precondition
    CHECK(run_cli("verify --p 7 --q 2 --e 2 --a 0,0 --n 1 --content 1,0").code == 3);
    // bad content length -> parse error
    CHECK(run_cli("verify --p 5 --q 4 --a 0,0 --n 1 --content 1").code == 2);
}

TEST_CASE("search command") {
    auto r = run_cli("search --r 2 --n-max 2 --e 2,3");
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    bool found_s3 = false, found_s2 = false;
    for (const auto& hit : doc) {
        CHECK(hit["s"].get<uint32_t>() >= 2);
        if (hit["e"] == 3 && hit["n"] == 2 && hit["a"] == Json::array({0, 1}) && hit["s"] == 3)
            found_s3 = true;
        if (hit["e"] == 2 && hit["n"] == 1 && hit["a"] == Json::array({0, 0}) && hit["s"] == 2)
            found_s2 = true;
    }
    CHECK(found_s3);
    CHECK(found_s2);

    CHECK(Json::parse(run_cli("search --r 2 --n-max 0 --n-min 0 --e 2").out).empty());
}

TEST_CASE("config file with flag override") {
    std::string path = "/tmp/akblocks_test_config.ini";
    {
        std::ofstream f(path);
        f << "[blocks]\ne=3\na=0,1\nn=1\n";
    }
    auto r = run_cli("blocks --config " + path);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["params"]["n"] == 1);

    // explicit flags beat the config file
    r = run_cli("blocks --config " + path + " --n 2");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["params"]["n"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("output path") {
    std::string path = "/tmp/akblocks_test_out.json";
    auto r = run_cli("blocks --n 1 --e 2 --a 0,0 --out " + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    Json doc = Json::parse(f);
    CHECK(doc["blocks"].size() == 1);
    std::remove(path.c_str());
}

TEST_CASE("quick selftest passes") {
    auto r = run_cli("selftest --quick");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("example-weight-reproduction") != std::string::npos);
}

TEST_CASE("injected fault is reported against the gram identity") {
    auto r = run_cli("selftest --quick --inject-fault gram");
    CHECK(r.code == 5);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("gram-dual product identity") != std::string::npos);
}
