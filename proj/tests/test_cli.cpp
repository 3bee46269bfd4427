#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hnnembed::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HNNEMBED_DATA_DIR) + "/" + name; }

fs::path scratch(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "hnnembed_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Re-parse then re-serialize must give back the same bytes.
void check_round_trip(const std::string& text) { CHECK(json::parse(text).dump(2) + "\n" == text); }

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pieces"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"pieces", "/nonexistent.pres"}).code == 2);
}

TEST_CASE("cli: parse errors carry line and column") {
  const auto bad = scratch("bad.pres");
  write(bad, "gens: a b\nrel: a q\n");
  const auto r = run({"parse", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":2:8:") != std::string::npos);
}

TEST_CASE("cli: parse") {
  auto r = run({"parse", data("intro_h.pres")});
  CHECK(r.code == 0);
  CHECK(r.out.find("hnn: t; ascending: a b; free: c") != std::string::npos);
  r = run({"parse", "--json", data("x1.pres")});
  CHECK(r.code == 0);
  check_round_trip(r.out);
}

TEST_CASE("cli: pieces and small cancellation") {
  auto r = run({"pieces", data("x2.pres")});
  REQUIRE(r.code == 0);
  check_round_trip(r.out);
  const auto j = json::parse(r.out);
  bool found = false;
  for (const auto& p : j["relators"][0]["pieces"])
    if (p["word"] == "a b c") found = true;
  CHECK(found);
  CHECK(j["symmetrized"] == true);
  CHECK(json::parse(run({"pieces", "--no-inverse-symmetrization", data("x2.pres")}).out)["symmetrized"] == false);

  r = run({"check-smallcancel", data("x2.pres")});
  CHECK(r.code == 1);
  check_round_trip(r.out);
  r = run({"check-smallcancel", data("x2.pres"), "--p", "2", "--lambda", "1/2"});
  CHECK(r.code == 1);  // abc is itself a piece of abc
  CHECK(run({"check-smallcancel", data("x2.pres"), "--lambda", "1/1"}).code == 2);
  CHECK(run({"check-smallcancel", data("x2.pres"), "--p", "1"}).code == 2);
  CHECK(run({"check-smallcancel", data("x1.pres"), "--lambda", "x"}).code == 2);
}

TEST_CASE("cli: quotient and check-rel") {
  auto r = run({"quotient", data("x1.pres"), "--kill", "a"});
  CHECK(r.code == 0);
  CHECK(r.out == "gens: b c\nrel R: b c b c b c\n");
  r = run({"quotient", data("x2.pres"), "--kill", "c", "--json"});
  CHECK(r.code == 0);
  check_round_trip(r.out);

  r = run({"check-rel", data("x1.pres"), "--kill", "a"});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["noExtraPowers"] == false);
  CHECK(j["violations"][0]["word"] == "b c a b c b c");
  CHECK(j["violations"][0]["exponentBefore"] == 1);
  CHECK(j["violations"][0]["exponentAfter"] == 3);
  check_round_trip(r.out);

  CHECK(run({"check-rel", data("x1.pres"), "--kill", "c"}).code == 0);
  r = run({"check-rel", data("x2.pres"), "--kill", "c"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["noDuplicates"] == false);
  CHECK(run({"check-rel", data("x2.pres"), "--kill", "a"}).code == 0);
  CHECK(run({"check-rel", data("x2.pres"), "--kill", "z"}).code == 2);
}

TEST_CASE("cli: fold") {
  auto r = run({"fold", "--gens", data("subgroup.pres"), "--member", "a b b a'", "--member", "a"});
  REQUIRE(r.code == 0);
  check_round_trip(r.out);
  const auto j = json::parse(r.out);
  CHECK(j["rank"] == 2);
  CHECK(j["basepointDegree"] == 3);
  CHECK(j["membership"][0]["member"] == true);
  CHECK(j["membership"][1]["member"] == false);
  const auto last = run({"fold", "--gens", data("subgroup.pres"), "--order", "last"});
  CHECK(json::parse(last.out)["rank"] == 2);
}

TEST_CASE("cli: embed then certify") {
  for (bool irreducible : {false, true}) {
    const auto g = scratch(irreducible ? "g_irr.pres" : "g.pres");
    const auto cert = scratch(irreducible ? "cert_irr.json" : "cert.json");
    std::vector<std::string> args{"embed", "--in", data("intro_h.pres"), "--out", g.string(), "--cert", cert.string()};
    if (irreducible) args.push_back("--irreducible");
    auto r = run(args);
    REQUIRE(r.code == 0);
    const std::string text = slurp(cert);
    check_round_trip(text);
    CHECK(json::parse(text)["allTrue"] == true);

    r = run({"certify", "--in", data("intro_h.pres"), "--out", g.string(), "--cert", cert.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "certificate verified\n");

    // A flipped verdict is detected.
    auto j = json::parse(text);
    j["liftable"] = false;
    const auto forged = scratch("forged.json");
    write(forged, j.dump(2));
    r = run({"certify", "--in", data("intro_h.pres"), "--out", g.string(), "--cert", forged.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("liftable") != std::string::npos);
  }
  // Embedding is deterministic per seed.
  const auto g1 = scratch("s1.pres"), g2 = scratch("s2.pres"), c = scratch("c.json");
  run({"embed", "--in", data("intro_h.pres"), "--out", g1.string(), "--cert", c.string(), "--seed", "5"});
  run({"embed", "--in", data("intro_h.pres"), "--out", g2.string(), "--cert", c.string(), "--seed", "5"});
  CHECK(slurp(g1) == slurp(g2));
  CHECK(run({"embed", "--in", data("x1.pres"), "--out", g1.string(), "--cert", c.string()}).code == 2);
}

TEST_CASE("cli: word-solve and isoperimetry") {
  const auto g = scratch("w_g.pres"), cert = scratch("w_cert.json");
  REQUIRE(run({"embed", "--in", data("intro_h.pres"), "--out", g.string(), "--cert", cert.string()}).code == 0);
  const auto j = json::parse(slurp(cert));
  std::string pres = "gens: c1 c2\n";
  for (const auto& rel : j["w"]["relators"]) pres += "rel " + rel["source"].get<std::string>() + ": " + rel["word"].get<std::string>() + "\n";
  const auto w = scratch("w.pres");
  write(w, pres);

  const std::string r0 = j["w"]["relators"][0]["word"];
  auto r = run({"word-solve", "--pres", w.string(), "--word", r0});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  auto out = json::parse(r.out);
  CHECK(out["trivial"] == true);
  CHECK(out["area"] == 1);
  CHECK(out["replayVerified"] == true);

  r = run({"word-solve", "--pres", w.string(), "--word", "c1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["trivial"] == false);

  r = run({"word-solve", "--pres", data("x1.pres"), "--word", "a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("presentation not metric small cancellation") != std::string::npos);

  r = run({"isoperimetry", "--pres", w.string(), "--samples", "20", "--max-conj", "4", "--seed", "0"});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  out = json::parse(r.out);
  CHECK(out["table"].size() == 20);
  CHECK(out["areaMeasure"] == "dehn-steps");
  CHECK(run({"isoperimetry", "--pres", w.string(), "--samples", "20", "--seed", "0"}).out == r.out);
}
