#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lozenge/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lozenge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lozenge_cli_" + name);
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--engine", "brute"}).out == "2\n");
  CHECK(run({"count", "--family", "S", "--a", "1", "--b", "1", "--c", "3", "--engine", "dp"}).out == "20\n");
  CHECK(run({"count", "--family", "Sprime", "--a", "1", "--b", "1", "--c", "1", "--engine", "formula"}).out ==
        "15/4\n");
  CHECK(run({"count", "--family", "Sprime", "--a", "1", "--b", "1", "--c", "1", "--engine", "brute"}).out ==
        "15/4\n");
  const Result j = run({"count", "--family", "P", "--a", "2", "--b", "3", "--c", "1", "--output", "json"});
  CHECK(j.code == 0);
  for (const char* key : {"\"family\":\"P\"", "\"params\"", "\"engine\":\"dp\"", "\"value\"", "\"elapsed_ms\""})
    CHECK(j.out.find(key) != std::string::npos);
}

TEST_CASE("count errors map to exit codes") {
  CHECK(run({"count", "--family", "S", "--a", "5", "--b", "1"}).code == 2);
  CHECK(run({"count", "--family", "nope"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--family", "S", "--engine", "quantum"}).code == 2);
  CHECK(run({}).code == 2);
  const Result big = run({"count", "--family", "hexagon", "--a", "5", "--b", "5", "--c", "5", "--engine", "brute"});
  CHECK(big.code == 3);
  CHECK(big.err.find("brute-force limit") != std::string::npos);
}

TEST_CASE("exported regions count like the named family") {
  const auto path = temp_file("s.json");
  REQUIRE(run({"export", "--family", "Sprime", "--a", "2", "--b", "3", "--c", "1", "--out", path.string()}).code == 0);
  const Result named = run({"count", "--family", "Sprime", "--a", "2", "--b", "3", "--c", "1"});
  const Result custom = run({"count", "--region", path.string()});
  CHECK(custom.code == 0);
  CHECK(custom.out == named.out);
  CHECK(run({"count", "--region", path.string(), "--engine", "formula"}).code == 2);
  CHECK(run({"count", "--region", (temp_file("missing.json")).string()}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const Result mac = run({"verify", "--identity", "macmahon", "--range", "a=0..3,b=0..3,c=0..3", "--mode", "both"});
  CHECK(mac.code == 0);
  CHECK(count_of(mac.out, "\n") == 64);
  CHECK(count_of(mac.out, "\"pass\":true") == 64);

  const Result big = run({"verify", "--identity", "bigrec", "--range", "a=1..8,b=2..8,c=0..8"});
  CHECK(big.code == 0);
  CHECK(count_of(big.out, "\"pass\":false") == 0);

  const Result split = run({"verify", "--identity", "splitting"});
  CHECK(split.code == 0);
  const Result broken = run({"verify", "--identity", "splitting", "--corrupt-fixture"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("Separating condition") != std::string::npos);

  CHECK(run({"verify", "--identity", "kuo", "--range", "a=1..2,b=2..3,c=0..1"}).code == 0);
  CHECK(run({"verify", "--identity", "kuo", "--range", "a=1..2,b=2..3,c=0..1", "--mode", "formula"}).code == 2);
  CHECK(run({"verify", "--identity", "recurrence", "--range", "a=1..2,b=2..3,c=0..2", "--mode", "engine"}).code == 0);
  CHECK(run({"verify", "--identity", "base-cases"}).code == 0);
  CHECK(run({"verify", "--identity", "nonsense", "--range", "a=0,b=0,c=0"}).code == 2);
  CHECK(run({"verify", "--identity", "proctor", "--range", "a=3..1,b=0,c=0"}).code == 2);
  CHECK(run({"verify", "--identity", "proctor", "--range", "a=0..1,b=0"}).code == 2);
}

TEST_CASE("verify output is identical across thread counts") {
  const std::vector<std::string> base{"verify", "--identity", "theorem-weighted", "--range", "a=0..4,b=0..4,c=0..3"};
  auto one = base, many = base;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "8"});
  CHECK(run(one).out == run(many).out);
}

TEST_CASE("render") {
  const Result p = run({"render", "--family", "Pprime", "--a", "6", "--b", "9", "--c", "4"});
  CHECK(p.code == 0);
  CHECK(count_of(p.out, "<ellipse") == 6);
  CHECK(p.out == run({"render", "--family", "Pprime", "--a", "6", "--b", "9", "--c", "4"}).out);

  const Result t0 = run({"render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling", "0"});
  const Result t1 = run({"render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling", "1"});
  CHECK(t0.code == 0);
  CHECK(t1.code == 0);
  CHECK(t0.out != t1.out);
  CHECK(count_of(t0.out, "class=\"tiling\"") == 1);
  CHECK(run({"render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling", "2"}).code == 2);
  CHECK(run({"render", "--family", "hexagon", "--a", "3", "--b", "3", "--c", "3", "--tiling", "0", "--max-tilings",
             "10"})
            .code == 3);

  const Result stdh = run({"render", "--family", "STDH", "--a", "3", "--b", "8", "--c", "3"});
  CHECK(stdh.code == 0);
  CHECK(count_of(stdh.out, "<ellipse") == 0);
  CHECK(stdh.out.rfind("<svg", 0) == 0);
}
