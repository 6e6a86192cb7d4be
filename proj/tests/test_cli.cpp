#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wordorder/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wordorder::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("wordorder_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("costs subcommand") {
  const Result table = run({"costs", "--n", "2", "--g", "linear"});
  CHECK(table.code == 0);
  CHECK(table.out == "n,l,g_kind,cost\n2,1,linear,3\n2,2,linear,2\n2,3,linear,3\n");

  const Result words = run({"costs", "--n", "2", "--g", "linear", "--sizes", "3,1,1", "--order", "SVO"});
  CHECK(words.code == 0);
  CHECK(words.out == "n,l,g_kind,cost,word_cost\n2,2,linear,2,4\n");

  const Result invalid = run({"costs", "--n", "0", "--g", "linear"});
  CHECK(invalid.code == 1);
  CHECK(invalid.out.empty());
  CHECK(invalid.err.find("n >= 1") != std::string::npos);

  // Constituents listed in linear order; the root moves with l.
  const Result sequence = run({"costs", "--n", "2", "--sizes", "1,2,1"});
  CHECK(sequence.out ==
        "n,l,g_kind,cost,word_cost\n2,1,linear,3,4\n2,2,linear,2,3\n2,3,linear,3,5\n");

  const Result json = run({"costs", "--n", "1", "--g", "power", "--exponent", "2", "--format", "json"});
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.size() == 2);
  CHECK(parsed[0]["g_kind"] == "power");
  CHECK(parsed[1]["cost"] == 1.0);

  CHECK(run({"costs", "--n", "3", "--order", "SVO"}).code == 1);
  CHECK(run({"costs", "--n", "2", "--g", "cubic"}).code == 1);
  CHECK(run({"costs"}).code == 1);
}

TEST_CASE("pareto subcommand") {
  const Result atomic = run({"pareto"});
  CHECK(atomic.code == 0);
  CHECK(atomic.out ==
        "order,memory,memory_normalized,head_pred,dep_pred,on_front,energy\n"
        "SOV,3,1,1,0,true,0.25\n"
        "SVO,2,0,0.5,0.5,true,-0.25\n"
        "VSO,3,1,0,1,true,0.25\n"
        "VOS,3,1,0,1,true,0.25\n"
        "OVS,2,0,0.5,0.5,true,-0.25\n"
        "OSV,3,1,1,0,true,0.25\n");

  const auto rows = nlohmann::json::parse(run({"pareto", "--lambda", "1", "--format", "json"}).out);
  double lowest = 1e9;
  for (const auto& row : rows) lowest = std::min(lowest, row["energy"].get<double>());
  std::vector<std::string> best;
  for (const auto& row : rows) {
    if (row["energy"].get<double>() == lowest) best.push_back(row["order"]);
  }
  CHECK(best == std::vector<std::string>{"SVO", "OVS"});

  CHECK(run({"pareto", "--sizes", "3,x,1"}).code == 1);
  CHECK(run({"pareto", "--sizes", "3,1"}).code == 1);
  CHECK(run({"pareto", "--lambda", "2"}).code == 1);
  CHECK(run({"pareto", "--format", "xml"}).code == 1);
}

TEST_CASE("dynamics subcommand") {
  const fs::path dir = scratch("dynamics");

  const Result cold = run({"dynamics", "--lambda", "1", "--beta", "50", "--steps", "1000",
                           "--out", (dir / "cold").string()});
  REQUIRE(cold.code == 0);
  const auto summary = nlohmann::json::parse(slurp(dir / "cold" / "summary.json"));
  CHECK(summary["pi"]["SVO"].get<double>() + summary["pi"]["OVS"].get<double>() > 0.99);
  CHECK(summary["local_minima"] == 2);
  CHECK(cold.out == slurp(dir / "cold" / "summary.json"));

  const Result hot = run({"dynamics", "--beta", "0", "--steps", "10", "--out", (dir / "hot").string()});
  REQUIRE(hot.code == 0);
  for (const auto& [order, p] : nlohmann::json::parse(hot.out)["pi"].items()) {
    CHECK(p.get<double>() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  }

  const std::vector<std::string> args = {"dynamics", "--steps", "5000", "--seed", "9", "--out"};
  auto first = args, second = args;
  first.push_back((dir / "a").string());
  second.push_back((dir / "b").string());
  REQUIRE(run(first).code == 0);
  REQUIRE(run(second).code == 0);
  for (const char* name : {"landscape.csv", "stationary.csv", "trajectory.csv", "summary.json"}) {
    CAPTURE(name);
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
    CHECK_FALSE(slurp(dir / "a" / name).empty());
  }
  const std::string trajectory = slurp(dir / "a" / "trajectory.csv");
  CHECK(trajectory.starts_with("step,order\n0,SOV\n"));
  CHECK(slurp(dir / "a" / "landscape.csv").starts_with("order,energy,pi\nSOV,"));

  // A regular file where the output directory should go.
  std::ofstream(dir / "blocker") << "x";
  const Result blocked = run({"dynamics", "--steps", "5", "--out", (dir / "blocker" / "sub").string()});
  CHECK(blocked.code == 2);
  CHECK_FALSE(blocked.err.empty());

  CHECK(run({"dynamics", "--theta", "0.4", "--out", (dir / "t").string()}).code == 1);
  CHECK(run({"dynamics", "--steps", "0", "--out", (dir / "s").string()}).code == 1);
}

TEST_CASE("ingest subcommand") {
  const Result fixture = run({"ingest", "--input", WORDORDER_FIXTURE});
  CHECK(fixture.code == 0);
  CHECK(fixture.out == "n1,n2,n3,none_count,total\n120,499,569,189,1377\n");

  const auto json = nlohmann::json::parse(run({"ingest", "--input", WORDORDER_FIXTURE, "--format", "json"}).out);
  CHECK(json["n1"] == 120);
  CHECK(json["total"] == 1377);

  const fs::path dir = scratch("ingest");
  std::ofstream(dir / "empty.csv");
  const Result empty = run({"ingest", "--input", (dir / "empty.csv").string()});
  CHECK(empty.code == 0);
  CHECK(empty.out == "n1,n2,n3,none_count,total\n0,0,0,0,0\n");

  std::ofstream(dir / "bad_header.csv") << "lang,order\nL1,SOV\n";
  const Result bad = run({"ingest", "--input", (dir / "bad_header.csv").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1") != std::string::npos);

  std::ofstream(dir / "bad_token.csv") << "language_id,dominant_order\nL1,SOV\nL2,XYZ\n";
  const Result token = run({"ingest", "--input", (dir / "bad_token.csv").string()});
  CHECK(token.code == 2);
  CHECK(token.err.find("line 3") != std::string::npos);

  CHECK(run({"ingest", "--input", (dir / "missing.csv").string()}).code == 2);
}

TEST_CASE("verify subcommand") {
  const Result reduced = run({"verify", "--max-n", "4"});
  CHECK(reduced.code == 0);
  CHECK(reduced.out.find("FAIL") == std::string::npos);
  CHECK(reduced.out.find("PASS center_minimality") != std::string::npos);

  const Result broken = run({"verify", "--max-n", "4", "--g-table", "3,2,1,0.5,0.25,0.1"});
  CHECK(broken.code != 0);
  CHECK(broken.out.find("FAIL center_minimality") != std::string::npos);
}

TEST_CASE("config files supply defaults that flags override") {
  const fs::path dir = scratch("config");
  std::ofstream(dir / "run.cfg") << "# pareto weights\nlambda = 1\nmu=0.5\n";
  const auto from_file = nlohmann::json::parse(
      run({"pareto", "--config", (dir / "run.cfg").string(), "--format", "json"}).out);
  CHECK(from_file[1]["energy"] == 0.0);  // SVO at lambda=1

  const auto overridden = nlohmann::json::parse(
      run({"pareto", "--config", (dir / "run.cfg").string(), "--lambda", "0", "--format", "json"}).out);
  CHECK(overridden[1]["energy"] == -0.5);

  std::ofstream(dir / "bad.cfg") << "lambda\n";
  CHECK(run({"pareto", "--config", (dir / "bad.cfg").string()}).code == 1);
  std::ofstream(dir / "unknown.cfg") << "colour=blue\n";
  CHECK(run({"pareto", "--config", (dir / "unknown.cfg").string()}).code == 1);
  CHECK(run({"pareto", "--config", (dir / "nope.cfg").string()}).code == 2);
}

TEST_CASE("help and unknown subcommands") {
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("dynamics") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}
