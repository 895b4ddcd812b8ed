#include <gtest/gtest.h>

#include <sstream>

#include "cli/commands.hpp"
#include "invforms/errors.hpp"

using namespace invforms;
using namespace invforms::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ClassifyExamples) {
  auto r = run_cli({"classify", "--type", "C", "--rank", "6", "--weight", "0,1,0,0,0,0", "--char", "2"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "verdict: SymplecticOnly"));
  EXPECT_TRUE(has(r.out, "provenance: "));

  r = run_cli({"classify", "--type", "E7", "--rank", "7", "--weight", "1,0,0,0,0,0,0", "--char", "2"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "verdict: SymplecticOnly"));

  r = run_cli({"classify", "--type", "A", "--rank", "3", "--weight", "0,1,0", "--char", "0"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "verdict: Orthogonal"));

  r = run_cli({"classify", "--type", "E7", "--rank", "7", "--weight", "0,0,1,0,0,0,0", "--char", "2"});
  EXPECT_EQ(r.code, exit_code::kUnknown);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"classify", "--type", "C", "--rank", "6", "--weight", "0,1,0", "--char", "2"}).code,
            exit_code::kInputError);
  EXPECT_EQ(run_cli({"classify", "--type", "Q", "--rank", "2", "--weight", "0,1", "--char", "2"}).code,
            exit_code::kInputError);
  EXPECT_EQ(run_cli({"classify", "--type", "C", "--rank", "2", "--weight", "0,1", "--char", "4"}).code,
            exit_code::kInputError);
  EXPECT_EQ(run_cli({"classify", "--type", "C"}).code, exit_code::kInputError);
  EXPECT_EQ(run_cli({"bogus"}).code, exit_code::kInputError);
  EXPECT_THROW(parse_weight("1,-2", 2), InputError);
  EXPECT_THROW(parse_weight("1,x", 2), InputError);
  EXPECT_EQ(parse_weight("3, 0,1", 3), (Weight{3, 0, 1}));
}

TEST(Cli, Restrict) {
  const auto r = run_cli({"restrict", "--family", "C", "--rank", "3", "--r", "2", "--char", "2"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_EQ(r.out, "2:1, 1:2, 0:2\n");
}

TEST(Cli, Factors) {
  const auto r = run_cli({"factors", "--family", "C", "--rank", "3", "--r", "3", "--char", "2"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "3:1"));
  EXPECT_TRUE(has(r.out, "1:1"));
}

TEST(Cli, Verify) {
  const auto r = run_cli({"verify", "--family", "C", "--rank", "2", "--index", "2", "--oracle", "both"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "gram: SymplecticOnly"));
  EXPECT_TRUE(has(r.out, "solver: SymplecticOnly"));
  EXPECT_TRUE(has(r.out, "closed-form: SymplecticOnly"));
  EXPECT_TRUE(has(r.out, "AGREE"));
  EXPECT_FALSE(has(r.out, "DISAGREE"));
}

TEST(Cli, ResourceCap) {
  const auto r = run_cli({"verify", "--family", "C", "--rank", "14", "--index", "7", "--oracle", "solver"});
  EXPECT_EQ(r.code, exit_code::kResource);
  EXPECT_TRUE(has(r.err, "resource"));
}

TEST(Cli, Symgroup) {
  const auto r = run_cli({"symgroup", "--n", "13", "--r", "2"});
  EXPECT_EQ(r.code, exit_code::kDecided);
  EXPECT_TRUE(has(r.out, "verdict: SymplecticOnly"));
}

TEST(Cli, Tables) {
  for (const char* name : {"duality", "typeE", "examplesC"}) {
    const auto r = run_cli({"table", "--name", name});
    EXPECT_EQ(r.code, exit_code::kDecided) << name;
    EXPECT_FALSE(r.out.empty());
  }
  const auto duality = run_cli({"table", "--name", "duality"});
  EXPECT_TRUE(has(duality.out, "E7"));
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run_cli({"--json", "classify", "--type", "C", "--rank", "4", "--weight", "0,1,0,0", "--char", "2"});
  ASSERT_EQ(r.code, exit_code::kDecided);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), kSchemaVersion);
  const auto q = QueryResult::from_json(j);
  EXPECT_EQ(q.command, "classify");
  EXPECT_EQ(q.to_json(), j);
  EXPECT_EQ(q.payload.at("verdict"), "Orthogonal");
  EXPECT_THROW(QueryResult::from_json(nlohmann::json::object()), InputError);
}

TEST(Cli, ExampleFamilies) {
  const auto fams = example_families(16);
  ASSERT_FALSE(fams.empty());
  ASSERT_EQ(fams.front().name, "C_l omega_2");
  EXPECT_EQ(fams.front().non_orthogonal, (std::vector<int>{2, 6, 10, 14}));
}
