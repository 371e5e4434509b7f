#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "locus/cli.hpp"
#include "locus/scene.hpp"

using namespace locus;

namespace {

const char* kRightScene =
    "# right triangle\n"
    "vertex = 0 0\n"
    "vertex = 0 3\n"
    "vertex = 4 0\n"
    "leg_sum = 3.16743\n"
    "squares_sum = 5\n";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "locus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("scene parsing") {
  std::istringstream in(std::string(kRightScene) + "ellipse = 4 2\nsize = 320\nmargin = 0.2\ndecorate = true\n");
  const auto s = parse_scene(in);
  REQUIRE(s.vertices.size() == 3);
  CHECK(s.vertices[1] == Point2{0, 3});
  CHECK(*s.leg_sum == 3.16743);
  CHECK(*s.squares_sum == 5);
  CHECK(s.ellipse->alpha2 == 4);
  CHECK(s.render.size == 320);
  CHECK(s.render.margin == 0.2);
  CHECK(s.render.decorate);

  for (const char* bad : {"vertex = 1\n", "vertex = 1 2 3\n", "leg_sum = abc\n", "colour = red\n", "no equals\n",
                          "leg_sum = 1x\n", "size = 3\n", "decorate = maybe\n", "leg_sum = nan\n"}) {
    std::istringstream b(bad);
    CHECK_THROWS_AS(parse_scene(b), InvalidScene);
  }
}

TEST_CASE("habitat command") {
  const auto r = run_cli({"habitat", "--scene", "-"}, kRightScene);
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "habitat: segment"));
  CHECK(has_line(r.out, "endpoint: 1.918575 0"));
  CHECK(has_line(r.out, "endpoint: 0.66972 2.49771"));
  CHECK(has_line(r.out, "value_range: 2.4 4"));

  const auto eq = run_cli({"habitat", "--scene", "-"},
                          "vertex = 0 0\nvertex = 4 0\nvertex = 2 3.4641016151377544\nleg_sum = 3.4641016151377544\n");
  CHECK(has_line(eq.out, "habitat: everywhere"));

  const auto none = run_cli({"habitat", "--scene", "-"}, "vertex = 0 0\nvertex = 0 3\nvertex = 4 0\nleg_sum = 10\n");
  CHECK(none.code == cli::kExitOk);
  CHECK(has_line(none.out, "habitat: empty"));

  const auto levels = run_cli({"habitat", "--scene", "-", "--levels", "4"}, kRightScene);
  CHECK(std::count(levels.out.begin(), levels.out.end(), '\n') - std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("locus command") {
  const auto r = run_cli({"locus", "--scene", "-"}, kRightScene);
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "class: ellipse"));
  CHECK(has_line(r.out, "center: 0.72 0.96"));
  CHECK(has_line(r.out, "meeting_points: 2"));
  // (34, 24, 41, -72, -96, 19) / 75
  CHECK(has_line(r.out, "conic: 0.453333333333 0.32 0.546666666667 -0.96 -1.28 0.253333333333"));

  const auto circle = run_cli({"locus", "--scene", "-"},
                              "vertex = 0 0\nvertex = 4 0\nvertex = 2 3.4641016151377544\nsquares_sum = 9\n");
  CHECK(has_line(circle.out, "class: circle"));
}

TEST_CASE("inverse command") {
  const auto r = run_cli({"inverse", "--scene", "-"}, "ellipse = 13 2\n");
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "k: 5.81538461538"));
  CHECK(has_line(r.out, "a: 1"));
  CHECK(has_line(r.out, "b: 2"));
  const auto c = run_cli({"inverse", "--scene", "-"}, "ellipse = 6 6\n");
  CHECK(has_line(c.out, "k: 10"));
  CHECK(has_line(c.out, "class: circle"));
  CHECK(run_cli({"inverse", "--scene", "-"}, "ellipse = 2 4\n").code == cli::kExitInputError);
  CHECK(run_cli({"inverse", "--scene", "-"}, "ellipse = -1 -1\n").code == cli::kExitInputError);
}

TEST_CASE("verify command") {
  const auto ok = run_cli({"verify", "--scene", "-", "--resolution", "512"}, kRightScene);
  CHECK(ok.code == cli::kExitOk);
  CHECK(has_line(ok.out, "verify: pass"));

  const auto bad = run_cli({"verify", "--scene", "-", "--perturb", "0.01"}, kRightScene);
  CHECK(bad.code == cli::kExitVerifyFailed);
  CHECK(has_line(bad.out, "verify: fail"));

  const auto viviani =
      run_cli({"verify", "--scene", "-"}, "vertex = 0 0\nvertex = 4 0\nvertex = 2 3.4641016151377544\n");
  CHECK(viviani.code == cli::kExitOk);

  CHECK(run_cli({"verify", "--scene", "-"}, "size = 100\n").code == cli::kExitInputError);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run_cli({"habitat", "--scene", "-"}, "vertex = 0 0\nvertex = 1 1\nvertex = 2 2\nleg_sum = 1\n").code ==
        cli::kExitInputError);
  CHECK(run_cli({"habitat", "--scene", "-"}, "vertex = 0 0\nvertex = 0 3\nvertex = 4 0\n").code ==
        cli::kExitInputError);
  CHECK(run_cli({"locus", "--scene", "-"}, "vertex = 0 0\nvertex = 1 0\nvertex = 1 1\nvertex = 0 1\nsquares_sum = 1\n")
            .code == cli::kExitInputError);
  CHECK(run_cli({"habitat", "--scene", "/nonexistent/scene"}).code == cli::kExitInputError);
  CHECK(run_cli({"habitat"}).code == cli::kExitInputError);
  CHECK(run_cli({}).code == cli::kExitInputError);
  CHECK(run_cli({"verify", "--scene", "-", "--resolution", "2"}, kRightScene).code == cli::kExitInputError);
}

TEST_CASE("svg output is deterministic") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "locus_test_a.svg", b = dir / "locus_test_b.svg";
  const auto r1 = run_cli({"locus", "--scene", "-", "--svg", a.string(), "--decorate"}, kRightScene);
  const auto r2 = run_cli({"locus", "--scene", "-", "--svg", b.string(), "--decorate"}, kRightScene);
  CHECK(r1.out == r2.out);
  const auto svg = slurp(a);
  CHECK(svg == slurp(b));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
