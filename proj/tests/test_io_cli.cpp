#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "asmlat/cli.hpp"
#include "asmlat/hasse.hpp"
#include "asmlat/io.hpp"
#include "asmlat/statistics.hpp"

namespace asmlat {
namespace {

const Asm kA = Asm::validate({{0, 0, 1, 0}, {0, 1, -1, 1}, {1, -1, 1, 0}, {0, 1, 0, 0}});

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "asmlat");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

ErrorKind parse_kind(const std::string& text) {
    try {
        parse_matrix(text);
    } catch (const AsmError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorKind::NotSquare;
}

TEST(Parse, Permutations) {
    EXPECT_EQ(parse_permutation("3412").to_string(), "3412");
    EXPECT_EQ(parse_permutation("perm:3412"), parse_permutation("3,4,1,2"));
    EXPECT_EQ(parse_permutation("perm:10,1,2,3,4,5,6,7,8,9").size(), 10);
    EXPECT_THROW(parse_permutation("3a12"), AsmError);
    EXPECT_THROW(parse_permutation("1,1"), AsmError);
    EXPECT_THROW(parse_permutation(""), AsmError);
}

TEST(Parse, ThreeMatrixFormats) {
    EXPECT_EQ(parse_matrix("n 4\n0 0 1 0\n0 1 -1 1\n1 -1 1 0\n0 1 0 0\n"), kA);
    EXPECT_EQ(parse_matrix("# comment\n0 0 1 0\n0 1 -1 1\n\n1 -1 1 0\n0 1 0 0"), kA);
    EXPECT_EQ(parse_matrix(R"({"n": 4, "entries": [[0,0,1,0],[0,1,-1,1],[1,-1,1,0],[0,1,0,0]]})"), kA);
    EXPECT_EQ(parse_matrix("perm:3412"), from_permutation(Permutation::from_images({3, 4, 1, 2})));
    EXPECT_EQ(parse_matrix(format_matrix_text(kA)), kA);
    EXPECT_EQ(format_matrix_text(identity(2)), "n 2\n1 0\n0 1\n");
}

TEST(Parse, Errors) {
    EXPECT_EQ(parse_kind(""), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("n 3\n1 0\n0 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("1 x\n0 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("{\"entries\": 3}"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("{\"n\": 3, \"entries\": [[1]]}"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("{broken"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind("1 -1\n0 1\n"), ErrorKind::BadTotalSum);
    EXPECT_EQ(parse_kind("1 0\n0\n"), ErrorKind::NotSquare);
}

TEST(Parse, DataFile) {
    std::ifstream f(std::string(ASMLAT_DATA_DIR) + "/example_a.txt");
    ASSERT_TRUE(f.good());
    EXPECT_EQ(read_matrix(f), kA);
}

TEST(Json, Schemas) {
    EXPECT_EQ(to_json(identity(2)).dump(), R"({"entries":[[1,0],[0,1]],"n":2})");
    EXPECT_EQ(to_json(stat_record(kA)).dump(), R"({"H2":8,"I":5,"Istar":3,"N":2,"beta":7})");
    HalfIntPolynomial p;
    p.add_term(0, 1);
    p.add_term(3, 2);
    EXPECT_EQ(to_json(p).dump(), R"({"half_units":true,"terms":[[0,1],[3,2]],"var":"lambda"})");
    BivariatePolynomial b;
    b.add_term(2, 1, 1);
    EXPECT_EQ(to_json(b).dump(), R"({"half_units":true,"terms":[[2,1,1]],"vars":["lambda","q"]})");
    HalfIntPolynomial big;
    big.add_term(0, mpz_class("123456789012345678901234567890"));
    EXPECT_EQ(to_json(big)["terms"][0][1], "123456789012345678901234567890");
    const auto g = to_json(build_hasse(3));
    EXPECT_EQ(g["nodes"].size(), 7u);
    EXPECT_EQ(g["edges"].size(), 8u);
}

TEST(Hasse, GoldenDot) {
    for (int n : {2, 3}) {
        const auto dot = to_dot(build_hasse(n), true);
        EXPECT_EQ(dot, slurp(std::string(ASMLAT_GOLDEN_DIR) + "/hasse" + std::to_string(n) + ".dot")) << n;
    }
}

TEST(Hasse, EdgeCountsAndJoinIrreducibles) {
    const auto g = build_hasse(4);
    EXPECT_EQ(g.nodes.size(), 42u);
    std::size_t ji = 0;
    for (const auto& node : g.nodes) {
        ji += node.join_irreducible ? 1 : 0;
    }
    EXPECT_EQ(ji, 10u);
    for (const auto& e : g.edges) {
        EXPECT_EQ(g.nodes[e.upper].stats.beta, g.nodes[e.lower].stats.beta + 1);
    }
    EXPECT_EQ(node_label(kA), "0,0,1,0/0,1,-1,1/1,-1,1,0/0,1,0,0");
    EXPECT_EQ(node_label(identity(3)), "123");
}

TEST(Cli, Count) {
    EXPECT_EQ(run({"count", "--size", "5"}).out, "429\n");
    EXPECT_EQ(run({"count", "--size", "6", "--method", "enumerate"}).out, "7436\n");
    EXPECT_EQ(run({"count", "--size", "30"}).code, cli::kOk);
}

TEST(Cli, Enumerate) {
    const auto r = run({"enumerate", "--size", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0,1/1,0\n1,0/0,1\n");
    EXPECT_EQ(run({"enumerate", "--size", "2", "--format", "json"}).out,
              R"([{"entries":[[0,1],[1,0]],"n":2},{"entries":[[1,0],[0,1]],"n":2}])"
              "\n");
}

TEST(Cli, Stats) {
    const std::string text = "I: 5\nI*: 3\nN: 2\nH: 4\nbeta: 7\n";
    EXPECT_EQ(run({"stats", "--matrix", std::string(ASMLAT_DATA_DIR) + "/example_a.txt"}).out, text);
    EXPECT_EQ(run({"stats", "--matrix", "-"}, format_matrix_text(kA)).out, text);
    EXPECT_EQ(run({"stats", "--perm", "3412", "--format", "json"}).out,
              R"({"H2":8,"I":4,"Istar":2,"N":0,"beta":8})"
              "\n");
}

TEST(Cli, Covers) {
    const auto up = run({"covers", "--matrix", "-"}, format_matrix_text(kA));
    EXPECT_EQ(up.code, 0);
    EXPECT_NE(up.out.find("r=2 s=2 type=4 dI=-1 dN2x=-2 dH2x=0 to 3412\n"), std::string::npos);
    const auto down = run({"covers", "--perm", "3412", "--down"});
    EXPECT_NE(down.out.find("type=4 dI=-1 dN2x=-2 dH2x=0 from 0,0,1,0/0,1,-1,1/1,-1,1,0/0,1,0,0"), std::string::npos);
    EXPECT_EQ(run({"covers", "--perm", "21", "--up"}).out, "");
}

TEST(Cli, HasseAndGenfun) {
    EXPECT_EQ(run({"hasse", "--size", "3", "--output", "dot", "--highlight-ji"}).out,
              slurp(std::string(ASMLAT_GOLDEN_DIR) + "/hasse3.dot"));
    EXPECT_EQ(run({"genfun", "--size", "3", "--stat", "H"}).out, "1 + 2*λ + λ^3/2 + 2*λ^2 + λ^3\n");
    EXPECT_EQ(run({"genfun", "--size", "2", "--bivariate", "I:beta"}).out, "1 + λ*q\n");
    EXPECT_EQ(run({"genfun", "--size", "3", "--stat", "I", "--over", "perm"}).out, "1 + 2*λ + 2*λ^2 + λ^3\n");
}

TEST(Cli, Verify) {
    const auto r = run({"verify", "--max", "4"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("Summary: 30/30 suites passed"), std::string::npos);
    EXPECT_NE(r.out.find("Theorem1(beta-equivalence)"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"count"}).code, cli::kUsage);
    EXPECT_EQ(run({"stats"}).code, cli::kUsage);
    EXPECT_EQ(run({"covers", "--perm", "12", "--up", "--down"}).code, cli::kUsage);
    EXPECT_EQ(run({"genfun", "--size", "3"}).code, cli::kUsage);
    EXPECT_EQ(run({"genfun", "--size", "3", "--bivariate", "H:beta", "--over", "perm"}).code, cli::kUsage);
    const auto bad = run({"stats", "--matrix", "-"}, "1 -1\n0 1\n");
    EXPECT_EQ(bad.code, cli::kDomainError);
    EXPECT_NE(bad.err.find("BadTotalSum"), std::string::npos);
    EXPECT_EQ(run({"stats", "--perm", "112"}).code, cli::kDomainError);
    EXPECT_EQ(run({"stats", "--matrix", "/nonexistent/file"}).code, cli::kDomainError);
    EXPECT_EQ(run({"--guard", "100", "enumerate", "--size", "5"}).code, cli::kGuardExceeded);
    EXPECT_EQ(run({"--guard", "100", "verify", "--max", "5"}).code, cli::kGuardExceeded);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, Deterministic) {
    const auto a = run({"hasse", "--size", "4", "--output", "json"});
    const auto b = run({"hasse", "--size", "4", "--output", "json"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"enumerate", "--size", "5"}).out, run({"enumerate", "--size", "5"}).out);
}

}  // namespace
}  // namespace asmlat
