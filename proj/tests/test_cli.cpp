#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "symnet/cli.hpp"
#include "symnet/container.hpp"

namespace fs = std::filesystem;
using namespace symnet;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "symnet");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path TempDir() {
  const fs::path dir = fs::temp_directory_path() / ("symnet_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

const char* kFixture = "1 3\n2 4\n3 5\n4 5\n";

}  // namespace

TEST_CASE("stats on the fixture") {
  const fs::path dir = TempDir();
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const Run r = Cli({"stats", in});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n_G"] == 5);
  CHECK(doc["m_G"] == 4);
  CHECK(doc["sm"] == 1);
  CHECK(doc["order"] == "2");
  CHECK(doc["bsm"].get<double>() == doctest::Approx(100));
  CHECK(doc["mv"].get<double>() == doctest::Approx(80));
  CHECK(doc["n_Q"].get<double>() == doctest::Approx(60));
  CHECK(doc["c_full"].get<double>() == doctest::Approx(36));
  CHECK(r.err.find("t1=") != std::string::npos);
  CHECK(Cli({"stats", in}).out == r.out);
  const Run text = Cli({"stats", in, "--format", "text"});
  CHECK(text.out.find("n_Q%") != std::string::npos);
}

TEST_CASE("stats on an asymmetric graph") {
  const fs::path dir = TempDir();
  const Run r = Cli({"stats", WriteFile(dir / "asym.txt", "1 2\n2 3\n3 1\n1 4\n4 5\n2 6\n")});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["mv"].get<double>() == 0.0);
  CHECK(doc["n_Q"].get<double>() == 100.0);
}

TEST_CASE("decompose, eig and generators") {
  const fs::path dir = TempDir();
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const Run d = Cli({"decompose", in});
  REQUIRE(d.code == 0);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc["motifs"].size() == 1);
  CHECK(doc["motifs"][0]["type"] == 2);

  const Run e = Cli({"eig", in, "--tags"});
  REQUIRE(e.code == 0);
  std::istringstream lines(e.out);
  std::string line;
  int rows = -1, redundant = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find("REDUNDANT") != std::string::npos) ++redundant;
  }
  CHECK(rows == 5);
  CHECK(redundant == 2);

  const std::string vec = (dir / "vectors.bin").string();
  CHECK(Cli({"eig", in, "--measure", "laplacian", "--vectors", vec}).code == 0);
  std::ifstream vf(vec, std::ios::binary);
  std::getline(vf, line);
  CHECK(nlohmann::json::parse(line)["rows"] == 5);

  const Run g = Cli({"generators", in});
  CHECK(g.out == "(1 2)(3 4)\n");
  const std::string gen = WriteFile(dir / "gens.txt", g.out);
  const Run s = Cli({"stats", in, "--use-generators", gen});
  CHECK(nlohmann::json::parse(s.out)["order"] == "2");
}

TEST_CASE("compress and decompress the exponential measure") {
  const fs::path dir = TempDir();
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const std::string box = (dir / "exp.json").string();
  REQUIRE(Cli({"compress", in, "--measure", "exp", "-o", box}).code == 0);
  const Run dense = Cli({"measure", "exp", in, "--format", "csv"});
  const Run back = Cli({"decompress", box});
  REQUIRE(back.code == 0);
  std::istringstream a(dense.out), b(back.out);
  std::string la, lb;
  double worst = 0.0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    std::istringstream ra(la), rb(lb);
    std::string x, y;
    while (std::getline(ra, x, ',') && std::getline(rb, y, ',')) {
      worst = std::max(worst, std::abs(std::stod(x) - std::stod(y)));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("quotient and measures") {
  const fs::path dir = TempDir();
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const Run q = Cli({"quotient", in});
  REQUIRE(q.code == 0);
  CHECK(nlohmann::json::parse(q.out)["n"] == 3);
  const std::string prefix = (dir / "q").string();
  CHECK(Cli({"quotient", in, "-o", prefix}).code == 0);
  CHECK(fs::exists(prefix + ".edges"));
  CHECK(fs::exists(prefix + ".json"));

  const Run c = Cli({"measure", "closeness", in});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("5,1.2\n") != std::string::npos);
  CHECK(Cli({"measure", "degree", in}).out.find("3,2\n") != std::string::npos);
  CHECK(Cli({"measure", "eccentricity", in, "--format", "json"}).out.find("\"diameter\":4") != std::string::npos);
  for (const char* name : {"laplacian", "distance", "resistance", "resolvent:0.1", "eigencentrality",
                           "closeness:approx"}) {
    CHECK(Cli({"measure", name, in}).code == 0);
  }
}

TEST_CASE("generate is deterministic") {
  const Run a = Cli({"generate", "--seed", "5"});
  const Run b = Cli({"generate", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != Cli({"generate", "--seed", "6"}).out);
}

TEST_CASE("error classes and exit codes") {
  const fs::path dir = TempDir();
  const Run missing = Cli({"stats", (dir / "nope.txt").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: parse_error: ", 0) == 0);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
  const Run bad = Cli({"stats", WriteFile(dir / "bad.txt", "1 2 3 4\n")});
  CHECK(bad.code == 2);
  const Run flag = Cli({"stats"});
  CHECK(flag.code == 2);
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const Run resolvent = Cli({"measure", "resolvent:5", in});
  CHECK(resolvent.code == 3);
  CHECK(resolvent.err.find("\nerror: contract_violation: ") != std::string::npos);
  const Run disconnected = Cli({"measure", "distance", WriteFile(dir / "two.txt", "1 2\n3 4\n")});
  CHECK(disconnected.code == 3);
  const Run unknown = Cli({"measure", "betweenness", in});
  CHECK(unknown.code == 2);
}

TEST_CASE("installed binary") {
  const char* exe = std::getenv("SYMNET_CLI");
  if (!exe) return;
  const fs::path dir = TempDir();
  const std::string in = WriteFile(dir / "g5.txt", kFixture);
  const std::string cmd = std::string(exe) + " stats " + in + " > " + (dir / "out.json").string() + " 2>/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string fail = std::string(exe) + " stats " + (dir / "nope").string() + " 2>/dev/null";
  const int status = std::system(fail.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
