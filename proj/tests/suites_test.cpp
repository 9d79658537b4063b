#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "riesz/suites.hpp"
#include "riesz/svg.hpp"

using namespace riesz;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

SuiteConfig small_circle(const std::string& dir) {
  SuiteConfig c;
  c.suite = "circle-core";
  c.n = {2, 5};
  c.seed = 11;
  c.output_dir = dir;
  return c;
}

}  // namespace

TEST_CASE("suite config JSON") {
  const auto j = nlohmann::ordered_json::parse(
      R"({"suite":"sampling","manifold":"sphere2","seed":3,"n":[4,8],"p":[1,"inf"],"omega":[2.5],"output_dir":"o"})");
  const SuiteConfig c = SuiteConfig::from_json(j);
  CHECK(c.suite == "sampling");
  REQUIRE(c.manifold.has_value());
  CHECK(c.manifold->is_sphere());
  CHECK(c.seed == 3);
  CHECK(c.n == std::vector<int>{4, 8});
  CHECK(c.p.size() == 2);
  CHECK(c.p[1] == std::numeric_limits<double>::infinity());
  CHECK(c.output_dir == "o");
  const SuiteConfig back = SuiteConfig::from_json(nlohmann::ordered_json::parse(c.to_json().dump()));
  CHECK(back.to_json().dump() == c.to_json().dump());

  CHECK_THROWS(SuiteConfig::from_json(nlohmann::ordered_json::parse(R"({"suite":"x","colour":1})")));
  CHECK_THROWS(SuiteConfig::from_json(nlohmann::ordered_json::parse(R"({"suite":"x","n":[]})")));
  CHECK_THROWS(SuiteConfig::from_json(nlohmann::ordered_json::parse(R"({"p":[0.5]})")));
  CHECK_THROWS(SuiteConfig::from_json(nlohmann::ordered_json::parse("[1,2]")));
}

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 4);
  for (const std::string& s : suite_names()) CHECK(is_suite(s));
  CHECK_FALSE(is_suite("everything"));
  SuiteConfig c;
  c.suite = "everything";
  CHECK_THROWS_AS(run_checks(c), std::invalid_argument);
}

TEST_CASE("exit status ignores records") {
  std::vector<CheckReport> rs = {make_inequality("a", {}, 1, 2, 0), make_record("b", {}, 9, 1)};
  CHECK(exit_status(rs) == 0);
  rs.push_back(make_inequality("c", {}, 3, 2, 0));
  CHECK(exit_status(rs) == 1);
  CHECK(exit_status({}) == 0);
}

TEST_CASE("run_suite writes its artifacts") {
  const fs::path dir = fs::temp_directory_path() / "riesz_suite_test";
  fs::remove_all(dir);
  const SuiteConfig cfg = small_circle(dir.string());
  std::ostringstream log;
  CHECK(run_suite(cfg, log) == 0);
  CHECK(log.str().find("circle-core") != std::string::npos);
  for (const char* f : {"report.jsonl", "report.csv", "config.json", "bernstein.svg"}) CHECK(fs::exists(dir / f));
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".tmp");

  const auto in_memory = run_checks(cfg);
  std::ifstream jl(dir / "report.jsonl");
  const auto from_jsonl = read_jsonl(jl);
  std::ifstream cs(dir / "report.csv");
  const auto from_csv = read_csv(cs);
  REQUIRE(from_jsonl.size() == in_memory.size());
  REQUIRE(from_csv.size() == in_memory.size());
  for (std::size_t i = 0; i < in_memory.size(); ++i) {
    CHECK(same_report(from_jsonl[i], in_memory[i]));
    CHECK(same_report(from_csv[i], in_memory[i]));
  }
  const auto saved = SuiteConfig::from_json(nlohmann::ordered_json::parse(slurp(dir / "config.json")));
  CHECK(saved.to_json().dump() == cfg.to_json().dump());
  const std::string svg = slurp(dir / "bernstein.svg");
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::string first = slurp(dir / "report.jsonl");
  std::ostringstream again;
  run_suite(cfg, again);
  CHECK(slurp(dir / "report.jsonl") == first);
  fs::remove_all(dir);
}

TEST_CASE("seed reaches random reports") {
  SuiteConfig a = small_circle("unused");
  SuiteConfig b = a;
  b.seed = 12;
  const auto ra = run_checks(a), rb = run_checks(b);
  REQUIRE(ra.size() == rb.size());
  bool differs = false;
  for (std::size_t i = 0; i < ra.size(); ++i) differs = differs || !same_report(ra[i], rb[i]);
  CHECK(differs);
}

TEST_CASE("plot axis") {
  std::vector<CheckReport> rs = {make_record("x", {{"p", 2}, {"omega", 4}}, 1, 2),
                                 make_record("x", {{"p", 2}, {"omega", 8}}, 1, 3)};
  CHECK(plot_axis(rs) == "omega");
  rs[0].params["n"] = 3;
  rs[1].params["n"] = 3;
  CHECK(plot_axis(rs) == "n");
  const std::string svg = ratio_plot_svg("t", rs);
  CHECK(svg.find("polyline") != std::string::npos);
}
