#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "islands/cli.hpp"
#include "support/fixtures.hpp"

using namespace islands;
using namespace islands::io;
using fixtures::by_names;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "islands-io-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = (temp_dir() / name).string();
  write_file(path, text);
  return path;
}

int run_cli(std::initializer_list<const char*> args) {
  std::vector<char*> argv;
  static const char* prog = "islandctl";
  argv.push_back(const_cast<char*>(prog));
  for (const char* a : args) argv.push_back(const_cast<char*>(a));
  return islands::cli::run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("explicit domains round-trip through json", "[io]") {
  IslandDomain d = fixtures::not_std_domain();
  json j = domain_json_explicit(d);
  LoadedDomain back = parse_domain(j);
  REQUIRE_FALSE(back.is_eta());
  CHECK(back.island().C == d.C);
  CHECK(back.island().K.family() == d.K.family());
  CHECK(back.ground().name(0) == "a");

  // serialization is deterministic: members sorted by size then names
  CHECK(domain_json_explicit(d).dump() == j.dump());
}

TEST_CASE("grid and box domains round-trip with implicit backends", "[io]") {
  GridSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  IslandDomain d = grid_domain(spec);
  json j = domain_json_grid(d, spec);
  LoadedDomain back = parse_domain(j);
  REQUIRE(back.grid.has_value());
  CHECK(back.island().C == d.C);
  for (const Subset& c : d.C.members())
    CHECK(covers(back.island(), c) == covers(d, c));

  ContextSpec ctx;
  ctx.factors = {{"g1", "g2"}, {"m1", "m2"}};
  ctx.relation = {{0, 0}, {0, 1}, {1, 0}};
  auto [bd, bh] = box_domain(ctx);
  json bj = domain_json_boxes(bd, ctx);
  LoadedDomain bback = parse_domain(bj);
  CHECK(bback.island().C == bd.C);
  CHECK(covers(bback.island(), by_names(bd.ground, {"g1,m1"})) ==
        covers(bd, by_names(bd.ground, {"g1,m1"})));
}

TEST_CASE("height and family payloads round-trip", "[io]") {
  IslandDomain d = fixtures::seg3_domain();
  HeightFunction h({1, 0, 2});
  json hj = heights_json(d.ground, h);
  CHECK(parse_heights(hj, d.ground) == h);

  SetFamily f(3);
  f.add(Subset::of(3, {0}));
  f.add(Subset::of(3, {1, 2}));
  json fj = family_json(d.ground, f);
  CHECK(parse_family(fj, d.ground) == f);
  CHECK(fj.is_array());
  CHECK(fj.at(0).at(0) == "c1");  // singleton listed before the pair
}

TEST_CASE("malformed files are rejected", "[io]") {
  IslandDomain d = fixtures::seg3_domain();

  CHECK_THROWS_AS(parse_text("{ not json"), island_error);
  CHECK_THROWS_AS(parse_domain(parse_text(R"({"universe": ["a"]})")), island_error);

  // unknown point name inside a set
  CHECK_THROWS_AS(parse_family(parse_text(R"([["zz"]])"), d.ground), island_error);

  // heights must cover every point exactly once
  CHECK_THROWS_AS(parse_heights(parse_text(R"({"c1": 0})"), d.ground), island_error);
  CHECK_THROWS_AS(
      parse_heights(parse_text(R"({"c1": 0, "c2": 1, "c3": 2, "zz": 3})"), d.ground),
      island_error);
  CHECK_THROWS_AS(parse_heights(parse_text(R"({"c1": 0, "c2": "x", "c3": 2})"), d.ground),
                  island_error);

  // duplicate members are errors in strict (domain-file) mode only
  json dup = parse_text(R"([["c1"], ["c1"]])");
  CHECK(parse_family(dup, d.ground).size() == 1);
  CHECK_THROWS_AS(parse_family(dup, d.ground, true), island_error);

  // a domain whose C strays outside K
  json bad = parse_text(R"({
    "universe": ["a", "b"],
    "C": [["a"], ["a", "b"]],
    "K": {"explicit": [["a", "b"]]}
  })");
  CHECK_THROWS_AS(parse_domain(bad), island_error);

  // eta index out of range
  json bad_eta = parse_text(R"({
    "universe": ["a", "b"],
    "C": [["a", "b"]],
    "K": {"eta": {"table": [[7, "a"]]}}
  })");
  CHECK_THROWS_AS(parse_domain(bad_eta), island_error);
}

TEST_CASE("eta tables parse on top of the membership baseline", "[io]") {
  json j = parse_text(R"({
    "universe": ["a", "b", "c", "d"],
    "C": [["a"], ["b", "c"], ["a", "b", "c", "d"]],
    "K": {"eta": {"table": [[0, "c"]]}}
  })");
  LoadedDomain d = parse_domain(j);
  REQUIRE(d.is_eta());
  const EtaDomain& ed = d.eta();
  CHECK(boundary(ed, by_names(ed.ground(), {"a"})) == by_names(ed.ground(), {"c"}));
  CHECK(boundary(ed, by_names(ed.ground(), {"b", "c"})).is_empty());
}

TEST_CASE("the command line drives the whole pipeline", "[io]") {
  IslandDomain d = fixtures::seg3_domain();
  GridSpec spec;
  spec.rows = 1;
  spec.cols = 3;
  std::string dom = write_temp("seg3.json", domain_json_grid(d, spec).dump(2));
  std::string hts = write_temp("seg3-heights.json",
                               heights_json(d.ground, HeightFunction({1, 0, 2})).dump(2));

  CHECK(run_cli({"validate", "--domain", dom.c_str()}) == 0);
  CHECK(run_cli({"islands", "--domain", dom.c_str(), "--heights", hts.c_str()}) == 0);

  std::string fam = write_temp("seg3-family.json",
                               R"([["c1"], ["c3"], ["c1", "c2", "c3"]])");
  CHECK(run_cli({"admissible", "--domain", dom.c_str(), "--family", fam.c_str()}) == 0);

  std::string bad_fam = write_temp("seg3-bad-family.json",
                                   R"([["c1"], ["c2"], ["c3"], ["c1", "c2", "c3"]])");
  CHECK(run_cli({"admissible", "--domain", dom.c_str(), "--family", bad_fam.c_str()}) == 1);

  CHECK(run_cli({"analyze", "--domain", dom.c_str()}) == 0);  // proximity domain
  CHECK(run_cli({"render", "--domain", dom.c_str(), "--heights", hts.c_str()}) == 0);

  std::string out = (temp_dir() / "gen-grid.json").string();
  CHECK(run_cli({"gen", "grid", "--rows", "2", "--cols", "2", "--out", out.c_str()}) == 0);
  LoadedDomain gen = parse_domain(parse_text(read_file(out)));
  CHECK(gen.island().C == fixtures::grid22_domain().C);

  std::string bool_out = (temp_dir() / "gen-majority.json").string();
  std::string bool_heights = (temp_dir() / "gen-majority-heights.json").string();
  CHECK(run_cli({"gen", "boolean", "e8", "--vars", "3", "--out", bool_out.c_str(),
                 "--heights-out", bool_heights.c_str()}) == 0);
  LoadedDomain bj = parse_domain(parse_text(read_file(bool_out)));
  HeightFunction bh = parse_heights(parse_text(read_file(bool_heights)), bj.ground());
  auto [md, mh] = box_domain(boolean_context(
      3, {false, false, false, true, false, true, true, true}));
  CHECK(bj.island().C == md.C);
  CHECK(bh == mh);

  // unknown flags and missing files map to exit 2, inadmissible search to 1
  CHECK(run_cli({"islands", "--domain", "/nonexistent.json", "--heights", hts.c_str()}) == 2);
  std::string canon = write_temp("canon-family.json", R"([["c1"], ["c1", "c2", "c3"]])");
  CHECK(run_cli({"canonical-height", "--domain", dom.c_str(), "--family", canon.c_str()}) == 0);
  std::string bad_canon = write_temp("bad-canon-family.json",
                                     R"([["c1"], ["c2"], ["c3"], ["c1", "c2", "c3"]])");
  CHECK(run_cli({"canonical-height", "--domain", dom.c_str(), "--family",
                 bad_canon.c_str()}) == 1);
}

TEST_CASE("context csv files become box domains", "[io]") {
  std::string csv = write_temp("ctx.csv",
                               ",m1,m2\n"
                               "g1,1,1\n"
                               "g2,x,\n");
  std::string out = (temp_dir() / "ctx.json").string();
  std::string hout = (temp_dir() / "ctx-heights.json").string();
  CHECK(run_cli({"gen", "context", csv.c_str(), "--out", out.c_str(),
                 "--heights-out", hout.c_str()}) == 0);

  LoadedDomain d = parse_domain(parse_text(read_file(out)));
  ContextSpec want;
  want.factors = {{"g1", "g2"}, {"m1", "m2"}};
  want.relation = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(d.island().C == box_domain(want).first.C);
}
