#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "rowconvex/json_io.hpp"

using namespace rowconvex;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args)
{
  std::string cmd = std::string(ROWCONVEX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class TempDir {
 public:
  TempDir()
  {
    path_ = std::filesystem::temp_directory_path() /
            ("rowconvex_test_" + std::to_string(::getpid()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const
  {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

const char* kWorkedTableau = R"({
  "shape": {"rows": [{"start": 3, "end": 4}, {"start": 1, "end": 4}, {"start": 3, "end": 3}, {"start": 2, "end": 3}]},
  "rows": [["4-", "5-"], ["1-", "3-", "5-", "7-"], ["2-"], ["3-", "8-"]]
})";

const char* kWeylShape = R"({"rows": [{"start": 1, "end": 3}, {"start": 2, "end": 2}]})";

} // namespace

TEST(Json, ShapeRoundTripAndRowOrder)
{
  auto d = fixtures::worked_shape();
  EXPECT_EQ(io::shape_from_json(io::to_json(d)), d);
  auto s = io::sorted_shape_from_json(json::parse(R"({"rows": [{"start": 1, "end": 2}, {"start": 1, "end": 3}]})"));
  EXPECT_EQ(s.shape.row(0), (Row{1, 3}));
  EXPECT_EQ(s.permutation, (std::vector<int>{1, 0}));
  EXPECT_THROW(io::shape_from_json(json::parse(R"({"rows": [{"start": 1}]})")), Error);
}

TEST(Json, TableauRoundTrip)
{
  auto a = Alphabet::parse("a+,b-,c+");
  for (const auto& d : enumerate_shapes(3))
    for (const auto& t : enumerate_straight(d, a)) EXPECT_EQ(io::tableau_from_json(io::to_json(t, a), a), t);
}

TEST(Json, TableauRowsFollowShapePermutation)
{
  auto a = Alphabet::parse("a+,b+");
  auto j = json::parse(R"({"shape": {"rows": [{"start": 2, "end": 2}, {"start": 1, "end": 3}]},
                           "rows": [["b+"], ["a+", "a+", "a+"]]})");
  EXPECT_EQ(io::tableau_from_json(j, a), fixtures::tableau(fixtures::weyl31(), a, {{"a+", "a+", "a+"}, {"b+"}}));
  auto bad = json::parse(R"({"shape": {"rows": [{"start": 1, "end": 2}]}, "rows": [["a+"]]})");
  try {
    io::tableau_from_json(bad, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Json, AlphabetInference)
{
  auto a = io::infer_alphabet({"10-", "2-", "3-"});
  EXPECT_EQ(a.letter("2-").rank, 2);
  EXPECT_EQ(a.letter("10-").rank, 10);
  auto s = io::infer_alphabet({"b+", "a+"});
  EXPECT_LT(s.letter("a+").rank, s.letter("b+").rank);
  EXPECT_THROW(io::infer_alphabet({"a+", "a-"}), Error);
}

TEST(Json, PolynomialAndSumRoundTrip)
{
  auto a = Alphabet::parse("a+,b-");
  auto d = fixtures::shape({{1, 2}, {1, 1}});
  for (const auto& t : enumerate_row_standard(d, a)) {
    Polynomial p = tableau_to_polynomial(t);
    EXPECT_EQ(io::polynomial_from_json(io::to_json(p, a), a), p);
    auto s = straighten_tableau(t);
    if (s.empty()) continue;
    EXPECT_EQ(io::sum_from_json(io::to_json(s, a), a), s);
  }
}

TEST(Json, FlagsAndCharacterRoundTrip)
{
  auto a = Alphabet::parse("a+,b+");
  Flags f{{a.letter("a+"), a.letter("a+"), a.letter("b+")}, {a.letter("a+"), a.letter("b+"), a.letter("b+")}};
  auto back = io::flags_from_json(io::to_json(f, a), a);
  EXPECT_EQ(back.lower, f.lower);
  EXPECT_EQ(back.upper, f.upper);
  auto ch = character(fixtures::weyl31(), a);
  EXPECT_EQ(io::character_from_json(io::to_json(ch, a), a), ch);
}

TEST(Json, ErrorPayload)
{
  auto j = io::error_json(Error(ErrorCode::UnknownLetter, "no such letter", "z+"));
  EXPECT_EQ(j["error"]["code"], "UnknownLetter");
  EXPECT_EQ(j["error"]["witness"], "z+");
}

TEST(Cli, StraightenWorkedExample)
{
  TempDir dir;
  auto path = dir.write("t.json", kWorkedTableau);
  auto r = run_cli("straighten --tableau " + path);
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 9u);
  auto a = io::infer_alphabet({"1-", "2-", "3-", "4-", "5-", "7-", "8-"});
  auto s = io::sum_from_json(j, a);
  for (const auto& e : fixtures::worked_expansion())
    EXPECT_EQ(s.coefficient(fixtures::minus_tableau(fixtures::worked_shape(), e.rows)), e.coeff);
}

TEST(Cli, EnumerateWeylShape)
{
  TempDir dir;
  auto path = dir.write("d.json", kWeylShape);
  auto r = run_cli("enumerate --shape " + path + " --alphabet a+,b+");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out).size(), 3u);
  auto rs = run_cli("enumerate --row-standard --shape " + path + " --alphabet a+,b+");
  EXPECT_EQ(json::parse(rs.out).size(), 8u);
}

TEST(Cli, CharacterBranchAndRelations)
{
  TempDir dir;
  auto path = dir.write("d.json", kWeylShape);
  auto ch = run_cli("character --shape " + path + " --alphabet a+,b+");
  ASSERT_EQ(ch.status, 0);
  EXPECT_EQ(json::parse(ch.out).size(), 3u);
  auto br = run_cli("branch --shape " + path + " --alphabet a+,b+");
  ASSERT_EQ(br.status, 0);
  auto j = json::parse(br.out);
  EXPECT_TRUE(j["holds_with_factor"].get<bool>());
  EXPECT_TRUE(j["filtration"]["telescopes"].get<bool>());
  auto rel = run_cli("relations --shape " + path + " --alphabet a+,b+");
  ASSERT_EQ(rel.status, 0);
  EXPECT_TRUE(json::parse(rel.out).is_array());
}

TEST(Cli, Subduct)
{
  TempDir dir;
  auto shape = dir.write("d.json", R"({"rows": [{"start": 1, "end": 2}]})");
  auto tab = dir.write("t.json", R"({"shape": {"rows": [{"start": 1, "end": 2}]}, "rows": [["a-", "b-"]]})");
  auto r = run_cli("subduct --shape " + shape + " --alphabet a-,b- --polynomial " + tab);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["member"].get<bool>());
}

TEST(Cli, VerifySmallBudget)
{
  auto r = run_cli("verify --suite echelon --suite branching --max-cells 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS  echelon"), std::string::npos);
  auto j = run_cli("verify --suite filtration --max-cells 2 --json");
  ASSERT_EQ(j.status, 0);
  EXPECT_TRUE(json::parse(j.out)[0]["passed"].get<bool>());
}

TEST(Cli, ExitCodes)
{
  TempDir dir;
  auto broken = dir.write("bad.json", "{ not json");
  EXPECT_EQ(run_cli("straighten --tableau " + broken).status, 2);
  EXPECT_EQ(run_cli("straighten").status, 2);
  EXPECT_EQ(run_cli("no-such-command").status, 2);
  EXPECT_EQ(run_cli("verify --suite nonsense --max-cells 1").status, 2);

  auto shape = dir.write("d.json", kWeylShape);
  auto r = run_cli("branch --shape " + shape + " --alphabet a+,b+ --remove z+");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["error"]["code"], "UnknownLetter");

  auto mismatch = dir.write("m.json", R"({"shape": {"rows": [{"start": 1, "end": 2}]}, "rows": [["a+"]]})");
  auto m = run_cli("straighten --tableau " + mismatch);
  EXPECT_EQ(m.status, 1);
  EXPECT_EQ(json::parse(m.out)["error"]["code"], "LengthMismatch");
}

TEST(Cli, OutputFile)
{
  TempDir dir;
  auto shape = dir.write("d.json", kWeylShape);
  auto out = dir.write("out.json", "");
  auto r = run_cli("-o " + out + " enumerate --shape " + shape + " --alphabet a+,b+");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  EXPECT_EQ(json::parse(in).size(), 3u);
}
