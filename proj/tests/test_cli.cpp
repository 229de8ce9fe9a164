#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "steiner/cli.hpp"
#include "steiner/format.hpp"

using namespace steiner;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(part);
  return out;
}

}  // namespace

TEST_CASE("map prints the image triple in shortest round-trip form") {
  const CliResult r = run({"map", "-t", "1,2,4", "-x", "2"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == "1.4384471871911697,4,5.561552812808831\n");

  // Every printed token parses back to the exact double that was printed.
  for (const std::string& tok : fields(lines(r.out)[0])) {
    const double v = std::stod(tok);
    CHECK(format_double(v) == tok);
  }
}

TEST_CASE("map emits json on request") {
  const CliResult r = run({"map", "-t", "1,2,4", "-x", "2", "--format",
                           "json"});
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "map");
  CHECK(doc["mode"] == "real");
  REQUIRE(doc["lambda"].size() == 3);
  CHECK(doc["lambda"][1].get<double>() == 4.0);
  CHECK(doc["lambda"][0].get<double>() == 1.4384471871911697);
  CHECK(doc["lambda"][2].get<double>() == 5.561552812808831);
}

TEST_CASE("map folds distance and mass into the shift parameter") {
  const CliResult direct = run({"map", "-t", "1,2,4", "-x", "2"});
  const CliResult geom = run({"map", "-t", "1,2,4", "--distance", "1",
                              "--mass", "2"});
  CHECK(geom.code == 0);
  CHECK(geom.out == direct.out);

  const CliResult both = run({"map", "-t", "1,2,4", "-x", "1", "--distance",
                              "1"});
  CHECK(both.code == 1);
  CHECK(both.err.rfind("INVALID_ARGUMENT", 0) == 0);

  const CliResult mass_only = run({"map", "-t", "1,2,4", "-x", "1", "--mass",
                                   "2"});
  CHECK(mass_only.code == 1);

  const CliResult neither = run({"map", "-t", "1,2,4"});
  CHECK(neither.code == 1);
  CHECK(neither.err.rfind("INVALID_ARGUMENT", 0) == 0);
}

TEST_CASE("map reports domain violations by error code") {
  CHECK(run({"map", "-t", "2,2,4", "-x", "1"}).err.rfind("DEGENERATE", 0) ==
        0);
  CHECK(run({"map", "-t", "1,4,2", "-x", "1"}).err.rfind("DISORDERED", 0) ==
        0);
  CHECK(run({"map", "-t", "0,2,4", "-x", "1"}).err.rfind("NONPOSITIVE", 0) ==
        0);
  const CliResult neg = run({"map", "-t", "1,2,4", "-x", "-1"});
  CHECK(neg.code == 1);
  CHECK(neg.err.rfind("NEGATIVE_PARAMETER", 0) == 0);
}

TEST_CASE("map accepts complex parameters and the --complex flag") {
  // Negative shifts are fine for the two-valued map; this one lands on the
  // boundary where the two lowest moments meet zero.
  const CliResult r = run({"map", "-t", "1,2,4", "-x", "-2", "--complex"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,0,3\n");

  const CliResult c = run({"map", "-t", "1,2,4", "-x", "1+1i", "--format",
                           "json"});
  CHECK(c.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(c.out);
  CHECK(doc["mode"] == "complex");
  REQUIRE(doc["lambda"][1].is_array());
  CHECK(doc["lambda"][1][0].get<double>() == 3.0);
  CHECK(doc["lambda"][1][1].get<double>() == 1.0);
}

TEST_CASE("orbit tabulates evenly spaced shifts") {
  const CliResult r = run({"orbit", "-t", "1,2,4", "-x", "5", "-n", "5"});
  CHECK(r.code == 0);
  const std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "x,lambda1,lambda2,lambda3");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const std::vector<std::string> f = fields(rows[k]);
    REQUIRE(f.size() == 4);
    const double xk = std::stod(f[0]);
    CHECK(xk == static_cast<double>(k - 1));
    // The middle moment moves exactly linearly.
    CHECK(std::stod(f[2]) == 2.0 + xk);
  }

  const CliResult bad = run({"orbit", "-t", "1,2,4", "-x", "5", "-n", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("INVALID_ARGUMENT", 0) == 0);
}

TEST_CASE("axes prints both circular-section directions with flat sections") {
  const CliResult r = run({"axes", "-t", "1,2,4"});
  CHECK(r.code == 0);
  const std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "n1,n2,n3,residual");
  const std::vector<std::string> top = fields(rows[1]);
  const std::vector<std::string> bottom = fields(rows[2]);
  CHECK(std::stod(top[0]) > 0);
  CHECK(std::stod(top[2]) > 0);
  CHECK(std::stod(bottom[2]) < 0);
  CHECK(std::stod(top[3]) < 1e-12);
  CHECK(std::stod(bottom[3]) < 1e-12);
}

TEST_CASE("extended composes, inverts and applies elements") {
  const CliResult mul = run({"extended", "--mul", "2,3", "5,7"});
  CHECK(mul.code == 0);
  CHECK(mul.out == "10,17\n");

  const CliResult inv = run({"extended", "--inv", "2,3"});
  CHECK(inv.code == 0);
  CHECK(inv.out == "0.5,-1.5\n");

  const CliResult scale_inv =
      run({"extended", "--inv", "2,0", "--context", "real"});
  CHECK(scale_inv.code == 0);
  CHECK(scale_inv.out == "0.5,0\n");

  const CliResult no_inv =
      run({"extended", "--inv", "2,3", "--context", "real"});
  CHECK(no_inv.code == 1);
  CHECK(no_inv.err.rfind("NO_INVERSE_IN_SEMIGROUP", 0) == 0);

  const CliResult applied = run({"extended", "--apply", "2,3", "-t", "1,2,4",
                                 "--context", "real"});
  CHECK(applied.code == 0);
  const std::vector<std::string> f = fields(lines(applied.out)[0]);
  REQUIRE(f.size() == 3);
  CHECK(f[1] == "7");

  const CliResult no_triple = run({"extended", "--apply", "2,3"});
  CHECK(no_triple.code == 1);
  const CliResult two_ops =
      run({"extended", "--inv", "2,3", "--apply", "1,0", "-t", "1,2,4"});
  CHECK(two_ops.code == 1);
  CHECK(two_ops.err.rfind("INVALID_ARGUMENT", 0) == 0);
}

TEST_CASE("verify reports every property and is reproducible") {
  const CliResult a = run({"verify", "-n", "50", "--seed", "3"});
  CHECK(a.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["samples"] == 50);
  CHECK(doc["properties"].size() >= 25);

  const CliResult b = run({"verify", "-n", "50", "--seed", "3"});
  CHECK(b.out == a.out);

  const CliResult csv =
      run({"verify", "-n", "50", "--seed", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  const std::vector<std::string> rows = lines(csv.out);
  CHECK(rows[0] == "property,samples,worst,threshold,pass");
  CHECK(rows.size() == doc["properties"].size() + 1);
}

TEST_CASE("falsify is byte-stable across runs and thread counts") {
  const std::vector<std::string> base = {"falsify", "-n", "60", "--seed",
                                         "7"};
  const CliResult a = run(base);
  CHECK(a.code == 0);
  const CliResult b = run(base);
  CHECK(b.out == a.out);

  std::vector<std::string> serial = base;
  serial.insert(serial.end(), {"--threads", "1"});
  std::vector<std::string> pooled = base;
  pooled.insert(pooled.end(), {"--threads", "4"});
  CHECK(run(serial).out == a.out);
  CHECK(run(pooled).out == a.out);

  std::vector<std::string> csv = base;
  csv.insert(csv.end(), {"--format", "csv", "--rule", "galois+", "--rule",
                         "principal1", "--rule", "fixed:1,1,1"});
  const CliResult c = run(csv);
  CHECK(c.code == 0);
  const std::vector<std::string> rows = lines(c.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "rule,samples,failures,max_residual,median_residual,"
        "worst_a,worst_b,worst_c,worst_x,worst_y");
  CHECK(fields(rows[1])[0] == "galois+");
  CHECK(fields(rows[2])[0] == "principal1");
  CHECK(fields(rows[3])[0].rfind("fixed(", 0) == 0);

  const CliResult bad_rule = run({"falsify", "--rule", "sideways"});
  CHECK(bad_rule.code == 1);
  CHECK(bad_rule.err.rfind("INVALID_ARGUMENT", 0) == 0);
}

TEST_CASE("usage errors exit with status 1 and a USAGE line") {
  const CliResult none = run({});
  CHECK(none.code == 1);
  CHECK(none.err.rfind("USAGE", 0) == 0);

  const CliResult unknown = run({"transmogrify"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("USAGE", 0) == 0);

  const CliResult bad_format =
      run({"map", "-t", "1,2,4", "-x", "1", "--format", "xml"});
  CHECK(bad_format.code == 1);
  CHECK(bad_format.err.rfind("USAGE", 0) == 0);

  const CliResult missing = run({"map", "-x", "1"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("USAGE", 0) == 0);
}

TEST_CASE("help exits cleanly and names the commands") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd :
       {"map", "orbit", "axes", "verify", "extended", "falsify"}) {
    CHECK(r.out.find(cmd) != std::string::npos);
  }
}

TEST_CASE("-o writes the same bytes to a file") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "steiner_cli_test.csv";
  const CliResult direct = run({"axes", "-t", "1,2,4"});
  const CliResult filed =
      run({"axes", "-t", "1,2,4", "-o", path.string()});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  in.close();
  std::filesystem::remove(path);
}
