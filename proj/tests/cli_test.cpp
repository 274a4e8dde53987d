#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "commands.hpp"

using jfl::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jfl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }
std::string last_line(const std::string& s) {
  const std::string t = s.substr(0, s.size() - 1);
  return t.substr(t.rfind('\n') + 1);
}

std::string reparsed(const std::string& json) { return nlohmann::ordered_json::parse(json).dump(2) + "\n"; }

}  // namespace

TEST_CASE("expand") {
  CHECK(run({"expand", "--gen", "b4", "--qmax", "1"}).out == "y^-1 + 4 + y\n");
  CHECK(run({"expand", "--gen", "a", "--qmax", "1"}).out == "-y^(-1/2) + y^(1/2)\n");
  CHECK(run({"expand", "--gen", "b8", "--qmax", "1"}).out == "y^-1 + 1 + y\n");
  CHECK(run({"expand", "--gen", "b2", "--qmax", "1"}).out == "y^-1 + 10 + y\n");
  const Run bad = run({"expand", "--gen", "b5", "--qmax", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown generator") != std::string::npos);
  CHECK(run({"expand", "--gen", "b4", "--qmax", "0"}).code == 2);
}

TEST_CASE("verify") {
  for (const char* which : {"relation", "mf-embed", "all"}) {
    CAPTURE(which);
    const Run r = run({"verify", "--which", which, "--qmax", "8"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "ok");
  }
  CHECK(run({"verify", "--which", "all", "--qmax", "1"}).code == 0);
  CHECK(run({"verify", "--which", "other", "--qmax", "1"}).code == 2);
}

TEST_CASE("genus") {
  const Run k3 = run({"genus", "--dim", "4", "--chern", "c2=24"});
  CHECK(k3.code == 0);
  CHECK(k3.out == "2*b2\neuler characteristic: 24\n");
  CHECK(first_line(run({"genus", "--dim", "6", "--chern", "c3=0"}).out) == "0");
  const Run sextic = run({"genus", "--dim", "8", "--chern", "c2sq=1350,c4=2610"});
  CHECK(sextic.out == "387*b4 + 2*b2^2\neuler characteristic: 2610\n");
  const Run bad = run({"genus", "--dim", "4", "--chern", "c2=6"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("1/2") != std::string::npos);
  const Run json = run({"genus", "--dim", "4", "--chern", "c2=6", "--json"});
  CHECK(json.code == 2);
  CHECK(nlohmann::ordered_json::parse(json.out)["status"] == "error");
  CHECK(run({"genus", "--dim", "5", "--chern", "c2=6"}).code == 2);
  CHECK(run({"genus", "--dim", "4", "--chern", "c1sq=6"}).code == 2);
}

TEST_CASE("homotopy, surjectivity and image") {
  const Run msu = run({"homotopy", "--target", "msu", "--max-degree", "16"});
  CHECK(msu.code == 0);
  CHECK(last_line(msu.out) == "ok");
  CHECK(msu.out.find("16  Z^7") != std::string::npos);
  CHECK(run({"homotopy", "--target", "tjf", "--max-degree", "24"}).code == 0);
  CHECK(run({"homotopy", "--target", "msu", "--max-degree", "33"}).code == 2);
  const Run s = run({"surjectivity", "--n-param", "0", "--max-degree", "32"});
  CHECK(s.code == 0);
  CHECK(last_line(s.out) == "ok");
  CHECK(run({"surjectivity", "--n-param", "-1", "--max-degree", "16"}).code == 0);
  const Run img = run({"image", "--degree", "20"});
  CHECK(img.code == 0);
  CHECK(img.out.find("cokernel: (Z/2)^2") != std::string::npos);
  CHECK(img.out.find("classes: b2^5, b2*b8") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte") {
  const std::vector<std::vector<std::string>> commands = {
      {"expand", "--gen", "b3", "--qmax", "3", "--json"},
      {"verify", "--which", "all", "--qmax", "3", "--format", "json"},
      {"genus", "--dim", "8", "--chern", "c2sq=1350,c4=2610", "--json"},
      {"homotopy", "--target", "msu", "--max-degree", "12", "--json"},
      {"surjectivity", "--n-param", "1", "--max-degree", "12", "--json"},
      {"image", "--degree", "36", "--json"},
  };
  for (const auto& c : commands) {
    CAPTURE(c[0]);
    const Run r = run(c);
    CHECK(r.code == 0);
    CHECK(reparsed(r.out) == r.out);
    CHECK(run(c).out == r.out);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["command"] == c[0]);
  }
}

TEST_CASE("JSON payloads") {
  const auto e = nlohmann::ordered_json::parse(run({"expand", "--gen", "b4", "--qmax", "1", "--json"}).out);
  CHECK(e["payload"]["series"]["terms"].size() == 3);
  const auto g = nlohmann::ordered_json::parse(run({"genus", "--dim", "4", "--chern", "c2=24", "--json"}).out);
  CHECK(g["payload"]["text"] == "2*b2");
  CHECK(g["payload"]["euler_characteristic"] == "24");
  const auto h = nlohmann::ordered_json::parse(run({"homotopy", "--target", "tjf", "--max-degree", "8", "--json"}).out);
  CHECK(h["payload"]["degrees"].size() == 9);
  CHECK(h["deviations"].size() >= 1);
}

TEST_CASE("degree guard") {
  setenv("JFL_MAX_DEGREE_GUARD", "10", 1);
  CHECK(run({"image", "--degree", "20"}).code == 2);
  CHECK(run({"image", "--degree", "8"}).code == 0);
  setenv("JFL_MAX_DEGREE_GUARD", "zero", 1);
  CHECK(run({"image", "--degree", "8"}).code == 2);
  unsetenv("JFL_MAX_DEGREE_GUARD");
  CHECK(jfl::cli::degree_guard() == 64);
  CHECK(run({"image", "--degree", "66"}).code == 2);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"expand", "--qmax", "1"}).code != 0);
  CHECK(run({"expand", "--gen", "b4", "--qmax", "1", "--format", "xml"}).code != 0);
  CHECK(run({"surjectivity", "--max-degree", "8"}).code != 0);
  CHECK(run({"surjectivity", "--n-param", "x", "--max-degree", "8"}).code == 2);
}

TEST_CASE("verify-all") {
  const Run r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("AC1 PASS") == 0);
  CHECK(r.out.find("AC9 PASS") != std::string::npos);
  CHECK(r.out.find("passed 9/9") != std::string::npos);
}
