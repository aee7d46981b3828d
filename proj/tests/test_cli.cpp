#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + BRICKYARD_CLI + std::string(" ") + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(BRICKYARD_DATA) + "/" + name; }

json load(const std::string& name) {
    std::ifstream in(data(name));
    return json::parse(in);
}

// brick objects compared as a set, so file order does not matter
std::multiset<std::string> bricks_of(const json& arr) {
    std::multiset<std::string> s;
    for (const auto& b : arr) s.insert(b.dump());
    return s;
}

} // namespace

TEST(CliBricks, Counts) {
    for (auto [n, count] : {std::pair{1, 1}, {2, 4}, {3, 11}}) {
        auto r = run("bricks --n " + std::to_string(n));
        ASSERT_EQ(r.code, 0);
        auto j = json::parse(r.out);
        EXPECT_EQ(j.at("count"), count);
        EXPECT_EQ(j.at("bricks").size(), static_cast<std::size_t>(count));
        EXPECT_TRUE(j.at("bricks")[0].contains("green_arc"));
    }
    auto t = run("bricks --n 3 --format table");
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("11 bricks"), std::string::npos);
}

TEST(CliBricks, BadRank) {
    EXPECT_EQ(run("bricks --n 0").code, 2);
    EXPECT_EQ(run("bricks --n 9").code, 2);
    EXPECT_EQ(run("bricks").code, 2);
}

TEST(CliSmc, Permutation) {
    auto r = run("smc --perm 53412");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    auto expect = load("full_arc_pair.json");
    EXPECT_EQ(bricks_of(j.at("D")), bricks_of(expect.at("D")));
    EXPECT_EQ(bricks_of(j.at("U")), bricks_of(expect.at("U")));
    EXPECT_EQ(j.at("permutation"), json::parse("[5,3,4,1,2]"));

    auto id = json::parse(run("smc --perm 123").out);
    EXPECT_TRUE(id.at("D").empty());
    EXPECT_EQ(id.at("U").size(), 2u);
    for (const auto& b : id.at("U")) EXPECT_TRUE(b.at("actions").empty());
}

TEST(CliSmc, All) {
    auto r = run("smc --n 3 --all");
    ASSERT_EQ(r.code, 0);
    std::size_t lines = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) ++lines, ++pos;
    EXPECT_EQ(lines, 24u);
}

TEST(CliSmc, Errors) {
    EXPECT_EQ(run("smc --perm 1134").code, 2);
    EXPECT_EQ(run("smc").code, 2);
    EXPECT_EQ(run("smc --n 7 --all").code, 2);
}

TEST(CliSmc, CharacteristicFromEnvironment) {
    auto j = json::parse(run("smc --perm 2143", "BRICKYARD_CHAR=3").out);
    EXPECT_EQ(j.at("char"), 3);
    EXPECT_EQ(run("smc --perm 2143", "BRICKYARD_CHAR=1").code, 2);
}

TEST(CliCheck, A4Pair) {
    auto r = run("check --input " + data("a4_pair.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("is_semibrick_pair"), true);
    EXPECT_EQ(j.at("is_pairwise_completable"), true);
    EXPECT_EQ(j.at("is_completable"), false);
    EXPECT_EQ(j.at("witness").at("obstruction").at("S"), "2/3");
    EXPECT_EQ(j.at("witness").at("obstruction").at("T"), "3/2/1");
    EXPECT_EQ(run("check --assert completable --input " + data("a4_pair.json")).code, 1);
    EXPECT_EQ(run("check --assert not-completable --input " + data("a4_pair.json")).code, 0);
    EXPECT_EQ(run("check --assert pairwise --input " + data("a4_pair.json")).code, 0);
    auto m = json::parse(run("check --backend matrix --input " + data("a4_pair.json")).out);
    EXPECT_EQ(m.at("is_completable"), false);
    EXPECT_EQ(m.at("is_pairwise_completable"), true);
}

TEST(CliCheck, CompleteExample) {
    auto j = json::parse(run("check --assert completable --input " + data("full_arc_pair.json")).out);
    EXPECT_EQ(j.at("is_semibrick_pair"), true);
    EXPECT_EQ(j.at("is_pairwise_completable"), true);
    EXPECT_EQ(j.at("is_completable"), true);
    EXPECT_EQ(j.at("pass"), true);
}

TEST(CliCheck, ExtensionExample) {
    auto r = run("check --input " + data("ext_pair.json"));
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("is_semibrick_pair"), false);
    EXPECT_NE(j.at("violation").get<std::string>().find("Ext"), std::string::npos);
    EXPECT_EQ(run("check --assert semibrick --input " + data("ext_pair.json")).code, 1);
}

TEST(CliCheck, D4Pair) {
    auto j = json::parse(run("check --input " + data("d4_pair.json")).out);
    EXPECT_EQ(j.at("is_semibrick_pair"), true);
    EXPECT_EQ(j.at("is_completable"), false);
}

TEST(CliCheck, BadInput) {
    EXPECT_EQ(run("check --input " + data("malformed.json")).code, 2);
    EXPECT_EQ(run("check --input " + data("not_brick.json")).code, 2);
    EXPECT_EQ(run("check --input " + data("does_not_exist.json")).code, 2);
    EXPECT_EQ(run("check --input " + data("empty_diagram.json")).code, 2);
}

TEST(CliCheck, SmcOutputRoundTrips) {
    auto smc = run("smc --n 2 --all");
    ASSERT_EQ(smc.code, 0);
    std::size_t start = 0, records = 0;
    while (start < smc.out.size()) {
        auto end = smc.out.find('\n', start);
        auto line = smc.out.substr(start, end - start);
        start = end + 1;
        std::string path = testing::TempDir() + "/smc_record.json";
        std::ofstream(path) << line;
        auto j = json::parse(run("check --assert completable --input " + path).out);
        EXPECT_EQ(j.at("is_semibrick_pair"), true);
        EXPECT_EQ(j.at("is_pairwise_completable"), true);
        EXPECT_EQ(j.at("is_completable"), true);
        ++records;
    }
    EXPECT_EQ(records, 6u);
}

TEST(CliMutate, A4Left) {
    auto r = run("mutate --left 0 --input " + data("a4_pair.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    auto expect = load("a4_mutated.json");
    EXPECT_EQ(bricks_of(j.at("D")), bricks_of(expect.at("D")));
    EXPECT_EQ(bricks_of(j.at("U")), bricks_of(expect.at("U")));

    auto bad = run("mutate --left 0 --input " + data("a4_mutated.json"));
    EXPECT_EQ(bad.code, 1);
    auto b = json::parse(bad.out);
    EXPECT_EQ(b.at("compatibility").at("obstruction"), "3/2/1");
}

TEST(CliMutate, D4Right) {
    auto r = run("mutate --right 1 --input " + data("d4_xprime.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    ASSERT_EQ(j.at("D").size(), 2u);
    ASSERT_EQ(j.at("U").size(), 1u);
    auto dims = j.at("U")[0].at("dims");
    EXPECT_EQ(dims, json::parse(R"({"1":2,"2":1,"3":1,"4":1})"));
    EXPECT_EQ(run("mutate --left 0 --input " + data("d4_xprime.json")).code, 1);
}

TEST(CliMutate, Errors) {
    EXPECT_EQ(run("mutate --left 0 --right 0 --input " + data("a4_pair.json")).code, 2);
    EXPECT_EQ(run("mutate --input " + data("a4_pair.json")).code, 2);
    EXPECT_EQ(run("mutate --left 5 --input " + data("a4_pair.json")).code, 2);
    EXPECT_EQ(run("mutate --left 0 --input " + data("ext_pair.json")).code, 2);
}

TEST(CliComplete, FullRank) {
    auto r = run("complete --input " + data("full_arc_pair.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("method"), "full-rank");
    EXPECT_EQ(j.at("permutation"), json::parse("[5,3,4,1,2]"));
}

TEST(CliComplete, SearchAndOneSide) {
    auto a4 = run("complete --input " + data("a4_pair.json"));
    EXPECT_EQ(a4.code, 1);
    EXPECT_EQ(json::parse(a4.out).at("pass"), false);

    auto u = run("complete --from U --input " + data("simples_u.json"));
    ASSERT_EQ(u.code, 0);
    auto j = json::parse(u.out);
    auto expect = load("full_arc_pair.json");
    EXPECT_EQ(bricks_of(j.at("D")), bricks_of(expect.at("D")));

    auto partial = run("complete --input " + data("simples_u.json"));
    ASSERT_EQ(partial.code, 0);
    EXPECT_TRUE(json::parse(partial.out).contains("permutation"));
    EXPECT_EQ(run("complete --input " + data("ext_pair.json")).code, 2);
}

TEST(CliRender, Ascii) {
    auto empty = run("render --input " + data("empty_diagram.json"));
    ASSERT_EQ(empty.code, 0);
    std::size_t nodes = 0;
    for (std::size_t p = empty.out.find(" o"); p != std::string::npos; p = empty.out.find(" o", p + 1)) ++nodes;
    EXPECT_EQ(nodes, 4u);

    auto single = run("render --input " + data("single_arc.json"));
    ASSERT_EQ(single.code, 0);
    EXPECT_NE(single.out.find("G1-2"), std::string::npos);

    auto full = run("render --input " + data("full_arc_diagram.json"));
    ASSERT_EQ(full.code, 0);
    for (const char* col : {"G1-4", "G3-5", "R1-2", "R3-4"}) EXPECT_NE(full.out.find(col), std::string::npos) << col;
    EXPECT_EQ(run("render --perm 53412").out, full.out);
    EXPECT_EQ(run("render --input " + data("full_arc_pair.json")).out, full.out);
}

TEST(CliRender, TikzAndDeterminism) {
    auto a = run("render --format tikz --input " + data("full_arc_diagram.json"));
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out.rfind("\\documentclass", 0), 0u);
    EXPECT_NE(a.out.find("\\end{document}"), std::string::npos);
    EXPECT_EQ(run("render --format tikz --input " + data("full_arc_diagram.json")).out, a.out);
}

TEST(CliRender, Errors) {
    EXPECT_EQ(run("render --input " + data("crossing_diagram.json")).code, 2);
    EXPECT_EQ(run("render").code, 2);
    EXPECT_EQ(run("render --input " + data("d4_pair.json")).code, 2);
}

TEST(CliVerify, Suites) {
    auto a4 = run("verify --suite a4-counterexample");
    EXPECT_EQ(a4.code, 0);
    EXPECT_EQ(json::parse(a4.out).at("pass"), true);
    EXPECT_EQ(run("verify --suite d4-counterexample").code, 0);
    auto hom = json::parse(run("verify --suite oracle-hom --n 3").out);
    EXPECT_EQ(hom.at("checked"), 121);
    EXPECT_EQ(run("verify --suite a3-pairwise --n 4").code, 1);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --suite oracle-hom --n 9").code, 2);
}

TEST(CliVerify, Deterministic) {
    auto a = run("verify --suite mutation-oracle --n 4 --seed 3 --samples 200");
    auto b = run("verify --suite mutation-oracle --n 4 --seed 3 --samples 200");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
