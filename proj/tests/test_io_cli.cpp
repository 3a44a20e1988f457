#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gradex/cli.hpp"
#include "gradex/errors.hpp"
#include "gradex/io.hpp"
#include "gradex/samples.hpp"
#include "support.hpp"

using namespace gradex;
using io::json;
using testing::el;
using testing::Z;

namespace {

const Field F2 = Field::prime(2);

struct Outcome {
  int code = 0;
  std::string out, err;
  json data() const { return json::parse(out); }
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = gradex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string doc(const json& j) { return j.dump(); }

std::string expect_violation(json j) {
  try {
    io::algebra_from_json(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

// Exit status of the installed binary, run through the shell.
int binary_status(const std::string& args) {
  const char* path = std::getenv("GRADEX_CLI");
  REQUIRE(path != nullptr);
  std::string cmd = std::string(path) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("algebras, modules and homomorphisms survive a round trip") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    CAPTURE(name);
    CHECK(*io::algebra_from_json(io::to_json(*R)) == *R);
  }
  for (const auto& [name, M] : samples::finite_field_modules()) {
    CAPTURE(name);
    CHECK(io::module_from_json(io::to_json(M)) == M);
  }
  GroupHom h(FGAbelianGroup(1, {Integer(4)}), FGAbelianGroup::cyclic(2), testing::imat({{1, 1}}));
  CHECK(io::hom_from_json(io::to_json(h)) == h);
  json lj = io::to_json(samples::laurent());
  CHECK(io::to_json(io::monoid_algebra_from_json(lj)) == lj);
  for (const auto& P : samples::principal_corpus()) {
    json pj = io::to_json(P);
    CHECK(io::to_json(io::principal_from_json(pj)) == pj);
  }
}

TEST_CASE("scalars serialize as integers or fractions") {
  CHECK(io::to_json(Rational(3)) == json(3));
  CHECK(io::to_json(Rational(-1, 2)) == json("-1/2"));
  CHECK(io::scalar_from_json(json("2/4"), "x") == Rational(1, 2));
  CHECK_THROWS_AS(io::scalar_from_json(json("1/0"), "x"), ValidationError);
}

TEST_CASE("document kinds are recognised") {
  CHECK(io::kind_of(io::to_json(*samples::dual_numbers())) == io::DocKind::ring);
  CHECK(io::kind_of(io::to_json(samples::residue_module(samples::dual_numbers()))) == io::DocKind::module);
  CHECK(io::kind_of(io::to_json(samples::laurent())) == io::DocKind::monoid_algebra);
  CHECK(io::kind_of(io::to_json(samples::principal_corpus()[0])) == io::DocKind::principal);
  CHECK(io::kind_of(io::to_json(samples::reduction(2))) == io::DocKind::hom);
  CHECK(io::kind_of(io::to_json(Z)) == io::DocKind::group);
  CHECK(io::kind_of(json{{"x", 1}}) == io::DocKind::unknown);
}

TEST_CASE("schema violations name the offending path and rule") {
  json R = io::to_json(*samples::dual_numbers());
  json bad_group = R;
  bad_group["group"]["torsion"] = json::array({1});
  CHECK(expect_violation(bad_group).find("group.torsion[0]") != std::string::npos);
  auto v = io::schema_validate(bad_group);
  REQUIRE(v.size() >= 1);
  CHECK(v[0].path == "group.torsion[0]");

  json bad_grading = R;
  bad_grading["mul"].push_back(json::array({1, 1, json::array({json::array({0, 1})})}));
  auto g = io::schema_validate(bad_grading);
  REQUIRE(g.size() == 1);
  CHECK(g[0].path == "mul[2]");
  CHECK(g[0].rule == "grading (1,1,0)");

  json bad_field = R;
  bad_field["field"] = json{{"p", 4}};
  CHECK(expect_violation(bad_field).find("field") != std::string::npos);

  json module = io::to_json(samples::residue_module(samples::dual_numbers()));
  module["ring"]["group"]["torsion"] = json::array({0});
  auto m = io::schema_validate(module);
  REQUIRE_FALSE(m.empty());
  CHECK(m[0].path == "ring.group.torsion[0]");
  CHECK(io::schema_validate(R).empty());
}

TEST_CASE("load reads inline documents and files") {
  CHECK(io::load(" {\"a\": 1}")["a"] == 1);
  const std::string path = "io_cli_doc.json";
  {
    std::ofstream f(path);
    f << io::to_json(*samples::dual_numbers()).dump();
  }
  CHECK(io::kind_of(io::load(path)) == io::DocKind::ring);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::load("no-such-file.json"), ValidationError);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"classify"}).code == 2);
  CHECK(run_cli({"classify", "{\"basis\":"}).code == 2);
  CHECK(run_cli({"resolve", "--cutoff", "40", "{}"}).code == 2);
  CHECK(run_cli({"classify", "--json", "--text", "{}"}).code == 2);
  CHECK(run_cli({"classify", "--field", "Fp:9", doc(io::to_json(*samples::dual_numbers()))}).code == 2);
  CHECK(run_cli({"restrict", doc(io::to_json(*samples::dual_numbers()))}).code == 2);

  json big = io::to_json(*samples::product_field(F2, 21, Z));
  Outcome guarded = run_cli({"classify", doc(big), "--oracle"});
  CHECK(guarded.code == 3);
  CHECK(guarded.err.find("size guard") != std::string::npos);
}

TEST_CASE("classify and oracle agreement through the cli") {
  Outcome o = run_cli({"classify", doc(io::to_json(*samples::dual_numbers()))});
  REQUIRE(o.code == 0);
  CHECK(o.data() == json{{"simple", false}, {"entire", false}, {"reduced", false}});
  Outcome f = run_cli({"classify", "--field", "Fp:2", "--oracle", doc(io::to_json(*samples::dual_numbers()))});
  REQUIRE(f.code == 0);
  CHECK(f.data()["oracle"]["agree"] == true);
  // Keys come out sorted.
  CHECK(o.out.find("\"entire\"") < o.out.find("\"reduced\""));
}

TEST_CASE("functor subcommands") {
  json laurent = io::to_json(samples::laurent());
  json phi = io::to_json(samples::from_trivial(Z));
  Outcome c = run_cli({"corestrict", doc(laurent), "--phi", doc(phi)});
  REQUIRE(c.code == 0);
  CHECK(c.data() == json{{"corestriction", "zero ring"}});

  Outcome d = run_cli({"corestrict", doc(io::to_json(*samples::dual_numbers())), "--phi",
                   doc(io::to_json(samples::multiplication(2)))});
  REQUIRE(d.code == 0);
  CHECK(d.data()["equals_restriction"] == true);

  Outcome a = run_cli({"adjoint-check", doc(laurent), "--phi", doc(phi)});
  REQUIRE(a.code == 0);
  CHECK(a.data()["tensor_witness"][0]["mismatch"] == true);
  CHECK(a.data()["ok"] == true);

  Outcome k = run_cli({"coarsen", doc(io::to_json(*samples::group_algebra(F2, FGAbelianGroup::cyclic(2))))});
  REQUIRE(k.code == 0);
  CHECK(k.data()["basis"][1]["degree"] == json::array());
}

TEST_CASE("module and homological subcommands") {
  json k = io::to_json(samples::residue_module(samples::dual_numbers()));
  Outcome r = run_cli({"resolve", doc(k), "--cutoff", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.data()["3"] == json{{"(3)", 1}});
  Outcome t = run_cli({"resolve", doc(k), "--cutoff", "2", "--text"});
  CHECK(t.out.find("degree") != std::string::npos);

  Outcome pd = run_cli({"pd", doc(k), "--cutoff", "6"});
  CHECK(pd.data()["value"] == "≥6");

  Outcome s = run_cli({"schanuel", doc(k), "--length", "1", "--pad", "[1]"});
  REQUIRE(s.code == 0);
  CHECK(s.data()["verified"] == true);

  Outcome p = run_cli({"module", doc(io::to_json(samples::principal_corpus()[0]))});
  REQUIRE(p.code == 0);
  CHECK(p.data()["superfluous"]["witness"] == "X + 1");

  Outcome cc = run_cli({"coarsen-compare", doc(k), "--cutoff", "4"});
  REQUIRE(cc.code == 0);
  CHECK(cc.data()["ok"] == true);

  Outcome sp = run_cli({"spec", "--oracle", doc(io::to_json(*samples::truncated_polynomial(F2, 4, Z, el(Z, {1}))))});
  REQUIRE(sp.code == 0);
  CHECK(sp.data()["nilradical_is_intersection"] == true);
  CHECK(sp.data()["oracle"]["primes"] == true);

  Outcome od = run_cli({"oracle-diff", doc(io::to_json(samples::split_idempotent_module()))});
  REQUIRE(od.code == 0);
  CHECK(od.data()["agree"] == true);
}

TEST_CASE("output is deterministic and seeds come from the flag before the environment") {
  json M = io::to_json(samples::split_idempotent_module());
  Outcome a = run_cli({"module", doc(M)}), b = run_cli({"module", doc(M), "--seed", "24301"});
  CHECK(a.out == b.out);
  CHECK(run_cli({"module", doc(M)}).out == a.out);

  setenv("GRADEX_SEED", "not-a-number", 1);
  CHECK(run_cli({"module", doc(M)}).code == 2);
  CHECK(run_cli({"module", doc(M), "--seed", "3"}).code == 0);
  setenv("GRADEX_SEED", "99", 1);
  CHECK(run_cli({"module", doc(M)}).out == a.out);
  unsetenv("GRADEX_SEED");
}

TEST_CASE("the binary reports the same exit codes") {
  CHECK(binary_status("") == 1);
  CHECK(binary_status("frobnicate") == 1);
  CHECK(binary_status("--help") == 0);
  CHECK(binary_status("classify '{\"basis\":'") == 2);
  json k = io::to_json(samples::residue_module(samples::dual_numbers()));
  CHECK(binary_status("resolve '" + k.dump() + "'") == 0);
}
