#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "omega/algebra_file.hpp"
#include "omega/catalog.hpp"
#include "omega/cli.hpp"

using namespace omega;
namespace fs = std::filesystem;

namespace {

const char* const kAAlpha = R"(# A_alpha
kind = lie
field = Q(alpha)
dim = 3
basis = x, y, z

[brackets]
x,y = x
x,z = x + y
y,z = z + alpha*x

[omega]
y,z = -1
)";

const char* const kAbelian = "kind = lie\ndim = 2\nbasis = a, b\n[brackets]\n[omega]\n";

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("omegalsa-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string parse_error_of(std::string_view text) {
  try {
    parse_algebra_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("A_alpha file") {
  const LoadResult r = load_algebra(kAAlpha);
  REQUIRE(r.ok());
  const auto& l = std::get<OmegaLieAlgebra>(*r.algebra);
  CHECK(l.field == Field::QAlpha);
  CHECK(l == instantiate_lie("A_alpha", {}, Field::QAlpha));
}

TEST_CASE("abelian file") {
  const LoadResult r = load_algebra(kAbelian);
  REQUIRE(r.ok());
  const auto& l = std::get<OmegaLieAlgebra>(*r.algebra);
  CHECK(l.dim() == 2);
  CHECK(l.bracket == StructureTensor(2));
  CHECK(l.field == Field::Q);
}

TEST_CASE("syntax errors") {
  CHECK(parse_error_of("kind = lie\ndim = 2\nbasis = x, y\n[brackets]\nx,y = x\ny,x = -x\n").find("both") !=
        std::string::npos);
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 2\nbasis = x, y\n[brackets]\nx,x = x\n").empty());
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 3\nbasis = x, y\n").empty());
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 2\nbasis = x, alpha\n").empty());
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 2\nbasis = x, y\n[products]\n").empty());
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 2\nbasis = x, y\n[omega]\nx,x = 1\n").empty());
  CHECK_FALSE(parse_error_of("kind = lie\ndim = 2\nbasis = x, y\n[omega]\nx,y = 1\ny,x = -1\n").empty());
  CHECK_FALSE(parse_error_of("kind = group\ndim = 1\nbasis = x\n").empty());

  const LoadResult r = load_algebra("kind = lie\ndim = 2\nbasis = x, y\n[brackets]\nx,y = w\n");
  REQUIRE(r.error);
  CHECK(r.error->kind == LoadError::Kind::Syntax);
  CHECK(r.error->line == 5);
  CHECK(r.error->column > 0);
  CHECK(r.error->message.find("w") != std::string::npos);
}

TEST_CASE("axiom failures become load errors") {
  std::string flipped = kAAlpha;
  flipped.replace(flipped.find("y,z = -1"), 8, "y,z = 1");
  const LoadResult r = load_algebra(flipped);
  REQUIRE(r.error);
  CHECK(r.error->kind == LoadError::Kind::Axiom);
  REQUIRE(r.error->report);
  CHECK_FALSE(r.error->report->passed());
}

TEST_CASE("omega accepts either order") {
  const LoadResult r = load_algebra("kind = lie\ndim = 2\nbasis = x, y\n[omega]\ny,x = 3\n");
  REQUIRE(r.ok());
  CHECK(std::get<OmegaLieAlgebra>(*r.algebra).omega(0, 1) == Scalar(-3));
}

TEST_CASE("round trip for every catalog instance") {
  for (const auto& e : list_entries()) {
    CAPTURE(e.name);
    const Field f = has_alpha(e.name) ? Field::QAlpha : Field::Q;
    const AnyAlgebra a = instantiate(e.name, {}, f);
    CHECK(parse_algebra_text(emit_algebra(a, e.name)) == a);
  }
  const AnyAlgebra lsa = instantiate("LSA3-1", {{"a1", "1/3"}, {"a2", "-2"}, {"a3", "5/7"}});
  CHECK(parse_algebra_text(emit_algebra(lsa)) == lsa);
  const AnyAlgebra p1 = instantiate("P1", {{"dimH", "3"}, {"a", "2"}, {"h1", "h0 + f2 - f3"}, {"h2", "f1 + 2*f3"}});
  CHECK(parse_algebra_text(emit_algebra(p1)) == p1);
}

TEST_CASE("cli: catalog emit then perfect") {
  TempDir dir;
  const std::string b = dir.file("B.alg");
  const Run emit = run({"catalog", "emit", "--family", "B", "-o", b});
  CHECK(emit.code == kExitOk);
  const Run p = run({"perfect", b});
  CHECK(p.code == kExitOk);
  const Json j = p.json();
  CHECK(j["verdict"] == "PERFECT");
  CHECK(j["input"]["sha256"].get<std::string>().size() == 64);
  CHECK(j["schema_version"] == kReportSchemaVersion);

  const Run stdout_emit = run({"catalog", "emit", "--family", "C_alpha", "--field", "Q(alpha)"});
  CHECK(stdout_emit.code == kExitOk);
  CHECK(load_algebra(stdout_emit.out).ok());
}

TEST_CASE("cli: admissible") {
  TempDir dir;
  const Run ab = run({"admissible", dir.write("ab.alg", kAbelian)});
  CHECK(ab.code == kExitOk);
  CHECK(ab.json()["verdict"] == "ADMISSIBLE");

  const std::string a = dir.write("a.alg", kAAlpha);
  const Run r = run({"admissible", a, "--sample", "alpha=2", "--sample", "alpha=1/2"});
  CHECK(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["verdict"] == "INADMISSIBLE");
  CHECK(j["result"]["samples"].size() == 2);
  CHECK(j["result"]["decision"]["termination"] == "linear-infeasible");

  const Run m = run({"admissible", a, "--mode", "module-only"});
  CHECK(m.code == kExitOk);
  const Json mj = m.json();
  const Json& cert = mj["result"]["decision"]["certificate"];
  CHECK(cert.back()["dimension"] == 0);
  CHECK(cert.back()["pinned"]["l_z"][0][0] == "-1");

  const Run bad = run({"admissible", a, "--sample", "beta=2"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.json()["verdict"] == "INPUT_ERROR");
}

TEST_CASE("cli: unknown on a tight degree cap") {
  TempDir dir;
  const std::string lsa = dir.write("lsa.alg", emit_algebra(instantiate("LSA3-1")));
  const Run c = run({"commutator", lsa, "-o", dir.file("comm.alg")});
  CHECK(c.code == kExitOk);
  CHECK(run({"admissible", dir.file("comm.alg"), "--degree-cap", "2"}).code == kExitUnknown);
  CHECK(run({"admissible", dir.file("comm.alg")}).code == kExitOk);
  CHECK(run({"perfect", dir.file("comm.alg")}).json()["verdict"] == "NOT_PERFECT");
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  std::string flipped = kAAlpha;
  flipped.replace(flipped.find("y,z = -1"), 8, "y,z = 1");
  const std::string f = dir.write("flipped.alg", flipped);
  const Run chk = run({"check", f});
  CHECK(chk.code == kExitViolation);
  CHECK(chk.json()["verdict"] == "FAIL");
  CHECK(run({"check", dir.write("a.alg", kAAlpha)}).code == kExitOk);

  const Run adm = run({"admissible", f});
  CHECK(adm.code == kExitInputError);
  CHECK_FALSE(adm.err.empty());

  const Run missing = run({"check", dir.file("nope.alg")});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.json()["verdict"] == "INPUT_ERROR");

  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"catalog", "emit", "--family", "C_alpha", "--param", "alpha=-1"}).code == kExitInputError);
  CHECK(run({"commutator", dir.write("ab.alg", kAbelian)}).code == kExitInputError);
  CHECK(run({"admissible", dir.file("ab.alg"), "--sample", "alpha=2"}).code == kExitInputError);
  CHECK(run({"catalog", "list"}).json()["result"]["entries"].size() == 12);
}

TEST_CASE("cli: text format") {
  const Run r = run({"catalog", "list", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("omegalsa catalog list: OK") == 0);
  CHECK(r.out.find("P1 (lie, dim 5+)") != std::string::npos);
}

TEST_CASE("cli: reports are deterministic") {
  TempDir dir;
  const std::string a = dir.write("a.alg", kAAlpha);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"admissible", a, "--sample", "alpha=-2"}, {"check", a}, {"perfect", a}}) {
    const Run x = run(args);
    const Run y = run(args);
    CHECK(canonical_report(x.json()) == canonical_report(y.json()));
    CHECK(x.json().contains("timing"));
  }
}

TEST_CASE("report key order") {
  const Json j = run({"catalog", "list"}).json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "schema_version", "command", "input", "verdict", "result",
                                         "timing"});
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
