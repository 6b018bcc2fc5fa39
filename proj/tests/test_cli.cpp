#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

const std::string kBin = QBR_BIN;
const std::string kData = QBR_DATA;

struct Run {
  int code;
  json report;
  std::string raw;
};

Run run(const std::string& args) {
  static int counter = 0;
  const auto out = std::filesystem::temp_directory_path() /
                   ("qbr_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
  const std::string cmd = kBin + " --out " + out.string() + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, json(), ""};
  std::ifstream in(out);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    r.raw = ss.str();
    if (!r.raw.empty()) r.report = json::parse(r.raw);
  }
  std::filesystem::remove(out);
  return r;
}

std::string spec(const char* name) { return kData + "/" + name; }

const json& first_check(const Run& r) { return r.report.at("checks").at(0); }

}  // namespace

TEST_CASE("check") {
  const Run qb = run("check " + spec("zn6.json") + " --property qb");
  CHECK(qb.code == 0);
  CHECK(first_check(qb)["status"] == "pass");

  CHECK(run("check " + spec("m2f2.json") + " --property prime").code == 0);

  const Run sp = run("check " + spec("zn4.json") + " --property semiprime");
  CHECK(sp.code == 1);
  CHECK(first_check(sp)["status"] == "fail");
  CHECK(first_check(sp)["witness"]["x"] == 2);

  CHECK(run("check " + spec("f4xt2.json") + " --property exchange").code == 0);
  CHECK(run("check " + spec("two_z4.json") + " --property qb-nonunital").code == 0);
  CHECK(run("check " + spec("two_z4.json") + " --property qb").code == 2);
}

TEST_CASE("sets") {
  const Run q = run("sets " + spec("zn6.json") + " --set qinv");
  CHECK(q.code == 0);
  CHECK(first_check(q)["witness"]["set"] == json{1, 5});
  CHECK(first_check(run("sets " + spec("zn4.json") + " --set radical"))["witness"]["set"] == json{0, 2});
  const Run u = run("sets " + spec("two_z4.json") + " --set units");
  CHECK(u.code == 2);
  CHECK(first_check(u)["status"] == "skipped");
  CHECK(first_check(run("sets " + spec("zn6.json") + " --set idempotents"))["witness"]["set"] ==
        json{0, 1, 3, 4});
  CHECK(first_check(run("sets " + spec("m2f2.json") + " --set maxreg"))["witness"]["set"].size() == 6);
}

TEST_CASE("verify") {
  const Run all = run("verify " + spec("zn6.json") + " --suite all");
  CHECK(all.code == 0);
  CHECK(all.report["summary"]["fail"] == 0);
  CHECK(all.report["summary"]["pass"].get<int>() > 30);

  const Run m = run("verify " + spec("m2f2.json") + " --suite thm6.4");
  CHECK(m.code == 0);
  for (const auto& c : m.report["checks"]) CHECK(c["status"] != "fail");

  for (const char* s : {"t2f3.json", "zn4.json", "two_z4.json", "f4xt2.json"}) {
    const Run r = run("verify " + spec(s) + " --suite all");
    CHECK_MESSAGE(r.report["summary"]["fail"] == 0, s);
  }
}

TEST_CASE("reports are deterministic") {
  const std::string args = " --no-timing verify " + spec("t2f3.json") + " --suite all --seed 9";
  const Run a = run("--jobs 1" + args), b = run("--jobs 4" + args), c = run("--jobs 2" + args);
  CHECK(a.raw == b.raw);
  CHECK(a.raw == c.raw);
  CHECK(a.raw.find("seconds") == std::string::npos);
  CHECK(a.report["spec"]["kind"] == "upper_triangular");
  CHECK(a.report["schema"] == 1);
}

TEST_CASE("demo jacobson") {
  const Run d = run("demo jacobson --p 2");
  CHECK(d.code == 0);
  CHECK(d.report["checks"].size() == 12);
  const Run e = run("demo jacobson --p 3 --eval \"y^2 x + x\"");
  CHECK(e.code == 0);
  CHECK(e.report["checks"].back()["witness"]["laurent"] == "t^-1 + t");
  CHECK(run("demo jacobson --p 4").code == 3);
  CHECK(run("demo jacobson --eval \"x + q\"").code == 3);
}

TEST_CASE("reduce-row") {
  const Run r = run("reduce-row " + spec("row_f2.json"));
  CHECK(r.code == 0);
  const json& w = first_check(r)["witness"];
  CHECK(w["trace"].size() == 7);
  CHECK(w["trace"][0]["stage"] == "diagonal-11");
  const Run z = run("reduce-row " + spec("row_z6.json"));
  CHECK((z.code == 0 || z.code == 1));
}

TEST_CASE("errors and exit codes") {
  CHECK(run("check " + spec("bad.json") + " --property qb").code == 3);
  CHECK(run("check " + spec("missing.json") + " --property qb").code == 3);
  CHECK(run("check " + spec("zn6.json") + " --property nonsense").code == 3);
  CHECK(run("verify " + spec("zn6.json") + " --suite nope").code == 3);
  CHECK(run("check " + spec("too_big.json") + " --property qb").code == 2);
  CHECK(run("").code == 3);
}

TEST_CASE("list suites") {
  const std::string cmd = kBin + " --list-suites";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) text += buf;
  CHECK(::pclose(p) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  for (const char* s : {"thm2.3", "prop2.5", "lemma3.2", "lemma3.5", "thm3.6", "sec4", "sec5", "thm6.4", "sec7",
                        "sec8"})
    CHECK(text.find(s) != std::string::npos);
}
