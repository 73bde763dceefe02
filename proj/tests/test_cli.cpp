#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conic/cli.hpp"
#include "conic/suite.hpp"
#include "support.hpp"

using namespace conic;
using namespace fixtures;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  // one directory per test: ctest runs the cases as parallel processes
  auto dir = std::filesystem::temp_directory_path() / "conic-cli-tests" /
             ::testing::UnitTest::GetInstance()->current_test_info()->name();
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << content;
  return path;
}

std::string corpus_file(const std::string& entry) {
  return write_file(entry + ".json", find_entry(builtin_corpus(), entry).source.dump());
}

std::size_t term_count(const std::string& json_text) { return Json::parse(json_text)["terms"].size(); }

}  // namespace

TEST(Io, PolytopeJsonRoundTrip) {
  Json j = polytope_to_json(pyramid());
  Polytope p = polytope_from_json(j);
  EXPECT_EQ(p.vertices(), pyramid().vertices());
  Json h = Json::parse(R"({"dim": 1, "inequalities": [{"normal": [1], "offset": "-3"}, {"normal": [-1], "offset": -5}]})");
  EXPECT_EQ(polytope_from_json(h).vertices().size(), 2u);
}

TEST(Io, RejectsMalformedPolytopes) {
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 1, "vertices": [[0.5], [2]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0], [2]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices": [[0], [2]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 1, "vertices": [["1/0"], ["2"]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0, 0], [1, 1], [2, 2]]})")),
               DegenerateInputError);
}

TEST(Io, FlagParsers) {
  EXPECT_EQ(parse_functional("4,2,0", 3).xi, iv({4, 2, 0}));
  EXPECT_THROW(parse_functional("4,2", 3), InputError);
  EXPECT_THROW(parse_functional("1/2,1", 2), InputError);
  EXPECT_THROW(parse_functional("0,0", 2), InputError);
  HeightMap h = parse_heights({"v0=1,1,0,0", "v3=1/2,2,3"});
  EXPECT_EQ(h.at(0), heights({1, 1, 0, 0}));
  EXPECT_EQ(h.at(3)[0], Rational(1, 2));
  EXPECT_THROW(parse_heights({"0=1,2"}), InputError);
  EXPECT_THROW(parse_heights({"v0=1", "v0=2"}), InputError);
  EXPECT_THROW(parse_heights({"vx=1"}), InputError);
  EXPECT_THROW(parse_box("3", 2), InputError);
  EXPECT_EQ(parse_box("-6,6", 3).hi, pt({6, 6, 6}));
}

TEST(Io, GfJsonKeepsText) {
  Json j = to_json(brion_gf(segment(-3, 5)));
  EXPECT_EQ(j["text"], "x^-3/(1-x) - x^6/(1-x)");
  EXPECT_EQ(j["terms"].size(), 2u);
}

TEST(Corpus, BuiltinIsLargeAndConsistent) {
  auto entries = builtin_corpus();
  EXPECT_GE(entries.size(), 12u);
  std::size_t nonsimple = 0;
  for (const auto& e : entries) {
    EXPECT_EQ(e.expected_count, Integer(static_cast<unsigned long>(lattice_points(e.polytope).size())));
    nonsimple += std::find(e.tags.begin(), e.tags.end(), "non-simple") != e.tags.end();
  }
  EXPECT_GE(nonsimple, 3u);
  EXPECT_EQ(find_entry(entries, "pyramid").expected_count, 10);
  auto again = corpus_from_json(corpus_to_json(entries));
  ASSERT_EQ(again.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(again[i].polytope.vertices(), entries[i].polytope.vertices());
}

TEST(Cli, CountExamples) {
  auto pyr = corpus_file("pyramid"), seg = corpus_file("segment"), cube = corpus_file("cube");
  EXPECT_EQ(run({"count", "--input", pyr, "--method", "brion"}).out, "10\n");
  EXPECT_EQ(run({"count", "--input", seg, "--method", "brute"}).out, "9\n");
  EXPECT_EQ(run({"count", "--input", cube}).out, "8\n");
  CliResult checked = run({"count", "--input", cube, "--check", "--json"});
  EXPECT_EQ(checked.code, 0);
  EXPECT_TRUE(Json::parse(checked.out)["check"]["agree"].get<bool>());
}

TEST(Cli, DecomposeExamples) {
  auto seg = corpus_file("segment"), sq = corpus_file("square"), pyr = corpus_file("pyramid");
  CliResult gram = run({"decompose", "--input", seg, "--method", "gram"});
  ASSERT_EQ(gram.code, 0) << gram.err;
  EXPECT_EQ(term_count(gram.out), 3u);
  CliResult lv = run({"decompose", "--input", sq, "--method", "lv", "--xi", "1,2"});
  ASSERT_EQ(lv.code, 0) << lv.err;
  EXPECT_EQ(term_count(lv.out), 4u);
  CliResult ns = run({"decompose", "--input", pyr, "--method", "nonsimple", "--xi", "4,2,0", "--heights", "v0=1,1,0,0"});
  ASSERT_EQ(ns.code, 0) << ns.err;
  EXPECT_EQ(term_count(ns.out), 6u);
  CliResult gf = run({"decompose", "--input", seg, "--method", "brion-gf"});
  EXPECT_EQ(Json::parse(gf.out)["text"], "x^-3/(1-x) - x^6/(1-x)");
}

TEST(Cli, VerifyExamples) {
  auto pyr = corpus_file("pyramid");
  CliResult delta = run({"verify", "--input", pyr, "--identity", "delta-invariance", "--xi", "4,2,0"});
  EXPECT_EQ(delta.code, 0) << delta.out << delta.err;
  CliResult lv = run({"verify", "--input", pyr, "--identity", "lv"});
  EXPECT_EQ(lv.code, 2);
  EXPECT_NE(lv.err.find("nonsimple"), std::string::npos);
  for (const char* id : {"gram", "brion", "eq6", "nonsimple", "compatible", "positive-conic"}) {
    CliResult r = run({"verify", "--input", pyr, "--identity", id, "--xi", "4,2,0", "--heights", "v0=0,0,1,1"});
    EXPECT_EQ(r.code, 0) << id << "\n" << r.out << r.err;
  }
  auto sq = corpus_file("square");
  for (const char* id : {"lv", "weighted", "rearrange", "partition"}) {
    CliResult r = run({"verify", "--input", sq, "--identity", id, "--xi", "1,2", "--exact-cells"});
    EXPECT_EQ(r.code, 0) << id << "\n" << r.out << r.err;
  }
}

TEST(Cli, VerifyJsonIsDeterministic) {
  auto pyr = corpus_file("pyramid");
  std::vector<std::string> args{"verify", "--input", pyr, "--identity", "nonsimple", "--seed", "5", "--json",
                                "--box", "-2,2", "--step", "1/3", "--samples", "50"};
  CliResult a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["outcome"], "pass");
  EXPECT_EQ(j["parameters"]["step"], "1/3");
  EXPECT_EQ(j["points_checked"], 13u * 13u * 13u + 50u);
}

TEST(Cli, CounterexampleExitsOne) {
  auto pyr = corpus_file("pyramid");
  // a non-generic functional for the given cells is an input error
  CliResult r = run({"verify", "--input", pyr, "--identity", "nonsimple", "--xi", "1,1,2", "--heights", "v0=1,1,0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ray"), std::string::npos);
}

TEST(Cli, CorpusFailuresAndErrors) {
  Json bad = corpus_to_json({find_entry(builtin_corpus(), "square")});
  bad[0]["expected_count"] = "5";
  CliResult r = run({"corpus", "--input", write_file("bad-corpus.json", bad.dump())});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("square"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"corpus", "--input", write_file("empty-corpus.json", "[]")}).code, 2);
  Json good = corpus_to_json({find_entry(builtin_corpus(), "square")});
  EXPECT_EQ(run({"corpus", "--input", write_file("good-corpus.json", good.dump())}).code, 0);
}

TEST(Cli, InputAndUsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "--input", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"count", "--input", write_file("garbage.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"count", "--input", write_file("float.json", R"({"dim":1,"vertices":[[0.5],[1]]})")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto seg = corpus_file("segment");
  EXPECT_EQ(run({"verify", "--input", seg, "--identity", "nope"}).code, 2);
  EXPECT_EQ(run({"decompose", "--input", seg, "--method", "lv", "--xi", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", seg, "--identity", "gram", "--step", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
