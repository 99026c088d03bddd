#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "finrest/json_io.hpp"

using namespace finrest;
namespace fs = std::filesystem;

namespace {

const std::string kCli = FINREST_CLI_PATH;

fs::path work_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "finrest_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = kCli + " " + args;
  cmd += stdout_file.empty() ? " > /dev/null" : " > " + stdout_file;
  cmd += " 2> /dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("generate and check over files") {
  auto pt2 = work_dir() / "pt2.json";
  REQUIRE(run("generate 'pt(2)' --out " + pt2.string()) == 0);
  CHECK(run("check --kind lrm " + pt2.string()) == 0);
  CHECK(run("check --boolean " + pt2.string()) == 0);

  SECTION("generated documents are byte-stable across runs") {
    auto again = work_dir() / "pt2_again.json";
    REQUIRE(run("generate 'pt(2)' --out " + again.string()) == 0);
    CHECK(slurp(pt2) == slurp(again));
  }
  SECTION("kind mismatch is a usage error") {
    CHECK(run("check --kind monoid " + pt2.string()) == 2);
  }
  SECTION("missing file is a structural error") {
    CHECK(run("check " + (work_dir() / "nope.json").string()) == 2);
  }
}

TEST_CASE("exit code 1 separates axiom failures from structural errors") {
  auto bad = work_dir() / "bad_monoid.json";
  write(bad, R"({"kind":"monoid","name":"bad","size":3,"identity":1,)"
             R"("mult":[[0,1,0],[0,1,2],[0,0,0]]})");
  CHECK(run("check " + bad.string()) == 1);

  auto ragged = work_dir() / "ragged.json";
  write(ragged, R"({"kind":"monoid","name":"bad","size":2,"identity":0,"mult":[[0,1],[1]]})");
  CHECK(run("check " + ragged.string()) == 2);

  // Boolean checks forced on a non-Boolean monoid: a mathematical failure.
  CHECK(run("check --boolean --fixtures 'sym_inv(2)'") == 1);
}

TEST_CASE("extract, build, and roundtrip pipeline") {
  auto pt2 = work_dir() / "p_pt2.json";
  auto pair = work_dir() / "p_pair.json";
  auto built = work_dir() / "p_built.json";
  REQUIRE(run("generate 'pt(2)' --out " + pt2.string()) == 0);
  REQUIRE(run("extract " + pt2.string() + " --out " + pair.string()) == 0);
  CHECK(run("check --kind matched_pair " + pair.string()) == 0);
  REQUIRE(run("build " + pair.string() + " --out " + built.string()) == 0);
  CHECK(run("check --boolean " + built.string()) == 0);
  CHECK(run("roundtrip " + pt2.string()) == 0);

  auto doc = parse_document(slurp(built));
  CHECK(std::get<LeftRestrictionMonoid>(doc.payload).size() == 9);
}

TEST_CASE("action pipeline: product, exp, hom, unact, act, curry, roundtrip") {
  auto pt2 = work_dir() / "a_pt2.json";
  REQUIRE(run("generate 'pt(2)' --out " + pt2.string()) == 0);

  // Materialize the terminal action through the library, then drive the CLI.
  auto s = std::make_shared<const LeftRestrictionMonoid>(pt(2).lrm);
  StructureDocument term;
  term.kind = "action";
  term.meta.name = "pt2_proj";
  term.payload = projection_action(s, true);
  auto term_path = work_dir() / "a_term.json";
  write(term_path, serialize(term));

  StructureDocument reg;
  reg.kind = "action";
  reg.meta.name = "pt2_regular";
  reg.payload = principal_action(s, s->identity(), true).action;
  auto reg_path = work_dir() / "a_reg.json";
  write(reg_path, serialize(reg));

  CHECK(run("check " + term_path.string()) == 0);
  CHECK(run("check " + reg_path.string()) == 0);

  auto box_path = work_dir() / "a_box.json";
  REQUIRE(run("product " + reg_path.string() + " " + term_path.string() + " --out " + box_path.string()) == 0);
  CHECK(run("check " + box_path.string()) == 0);

  auto exp_path = work_dir() / "a_exp.json";
  REQUIRE(run("exp " + reg_path.string() + " " + term_path.string() + " --out " + exp_path.string()) == 0);
  CHECK(run("check " + exp_path.string()) == 0);

  auto hom_path = work_dir() / "a_homs.json";
  REQUIRE(run("hom " + reg_path.string() + " " + term_path.string(), hom_path.string()) == 0);
  auto homs = json::parse(slurp(hom_path));
  CHECK(homs["count"] == 1);

  auto em_path = work_dir() / "a_em.json";
  REQUIRE(run("unact " + reg_path.string() + " --out " + em_path.string()) == 0);
  CHECK(run("check " + em_path.string()) == 0);
  auto act_path = work_dir() / "a_act.json";
  REQUIRE(run("act " + em_path.string() + " --lrm " + pt2.string() + " --out " + act_path.string()) == 0);
  CHECK(run("check " + act_path.string()) == 0);
  CHECK(run("roundtrip " + reg_path.string()) == 0);

  CHECK(run("curry " + term_path.string() + " " + reg_path.string() + " " + term_path.string()) == 0);
}

TEST_CASE("etale pipeline over the CLI") {
  auto pt2 = work_dir() / "e_pt2.json";
  REQUIRE(run("generate 'pt(2)' --out " + pt2.string()) == 0);
  CHECK(run("etale " + pt2.string()) == 0);

  auto inv_path = work_dir() / "e_inv.json";
  REQUIRE(run("inv " + pt2.string(), inv_path.string()) == 0);
  auto inv = json::parse(slurp(inv_path));
  CHECK(inv["count"] == 7);

  // Restrict the terminal action to Inv(pt(2)) and extend it back.
  auto s = std::make_shared<const LeftRestrictionMonoid>(pt(2).lrm);
  auto units = partial_units(*s);
  auto invm = inv_monoid(*s, units);
  StructureDocument restricted;
  restricted.kind = "action";
  restricted.meta.name = "proj_over_inv";
  restricted.payload = restrict_action(invm, projection_action(s, true));
  auto r_path = work_dir() / "e_restricted.json";
  write(r_path, serialize(restricted));

  auto ext_path = work_dir() / "e_extended.json";
  REQUIRE(run("extend " + r_path.string() + " --lrm " + pt2.string() + " --out " + ext_path.string()) == 0);
  auto ext = parse_document(slurp(ext_path));
  const auto& ext_action = std::get<SupportedAction>(ext.payload);
  CHECK(ext_action.act == projection_action(s, true).act);

  CHECK(run("catiso " + pt2.string()) == 0);
}

TEST_CASE("fixture inputs work in place of files") {
  CHECK(run("check --fixtures 'powerset_lrm(2)' --boolean") == 0);
  CHECK(run("check 'fixture:pt(2)'") == 0);
  CHECK(run("roundtrip --fixtures 'trivial_plus(rz3)'") == 0);
  CHECK(run("report --fixtures 'pt(2)'") == 0);
}
