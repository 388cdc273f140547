#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "groupdist/cli.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = GROUPDIST_TEST_DATA;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = groupdist::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "groupdist_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("perm-dist and perm-info") {
  CHECK(run({"perm-dist", "462531", "236514", "--metric", "kendall"}).out == "8\n");
  CHECK(run({"perm-dist", "462531", "236514", "--metric", "cayley"}).out == "4\n");
  CHECK(run({"perm-dist", "123", "123", "--metric", "cayley"}).out == "0\n");
  CHECK(run({"perm-dist", "2143", "3412", "--metric", "kendall"}).out == "6\n");

  const auto bad = run({"perm-dist", "1223", "1234"});
  CHECK(bad.status == 2);
  CHECK(bad.err.rfind("error: InvalidPermutation:", 0) == 0);
  CHECK(run({"perm-dist", "123", "1234"}).status == 4);

  const auto info = run({"perm-info", "426135"});
  CHECK(info.out.find("cycles (1 4)(2)(3 6 5)") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"embed", "--builtin", "sym3", "--bogus"}).status == 2);
  CHECK(run({"perm-dist", "123", "123", "--metric", "hamming"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  const auto help = run({"embed", "--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("--variant") != std::string::npos);
}

TEST_CASE("graph") {
  const auto edges = run({"graph", "--L", "3"});
  CHECK(edges.status == 0);
  CHECK(std::count(edges.out.begin(), edges.out.end(), '\n') == 6);
  CHECK(run({"graph", "--L", "4", "--format", "dot"}).out.find("graph") != std::string::npos);
  CHECK(run({"graph", "--L", "9"}).status == 2);
}

TEST_CASE("group subcommands") {
  const auto klein = run({"group", "show", kData + "/klein.gtab"});
  CHECK(klein.status == 0);
  CHECK(klein.out.rfind("order 4, abelian, identity e\n", 0) == 0);

  const auto loop = run({"group", "validate", kData + "/loop5.gtab"});
  CHECK(loop.status == 3);
  CHECK(loop.err.find("NotAssociative") != std::string::npos);
  CHECK(loop.err.find("witness triple") != std::string::npos);

  const auto exported = run({"group", "export", "--builtin", "sym3"});
  const auto path = scratch("sym3.gtab");
  write_file(path, exported.out);
  CHECK(run({"group", "validate", path.string()}).out == "order 6, nonabelian, identity 123\n");

  CHECK(run({"group", "show", kData + "/klein.gtab", "--builtin", "klein"}).status == 2);
}

TEST_CASE("embed") {
  const auto m = run({"embed", "--builtin", "sym3", "--variant", "left", "--metric", "kendall"});
  CHECK(m.status == 0);
  CHECK(m.out.find("231,10,15,5,0,10,5\n") != std::string::npos);
  CHECK(run({"embed", "--builtin", "sym3", "--variant", "left", "--metric", "cayley", "--admissible"}).out ==
        "0 3 4\n");

  const auto adj = run({"embed", "--builtin", "klein", "--variant", "adjoint"});
  CHECK(adj.status == 3);
  CHECK(adj.err.find("AdjointNotInjective") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"embed", kData + "/klein.gtab", "--out", "json"}).out);
  CHECK(j["order"] == 4);
  CHECK(j["values"][0][3] == 6);
}

TEST_CASE("wordmetric") {
  const auto t = run({"wordmetric", "--builtin", "cyclic:4", "--gens", "θ1", "--table"});
  CHECK(t.status == 0);
  CHECK(t.out.rfind("word,θ0,θ1,θ2,θ3\n", 0) == 0);
  CHECK(run({"wordmetric", "--builtin", "cyclic:4", "--gens", "θ1", "θ2", "θ2"}).out == "0\n");
  CHECK(run({"wordmetric", kData + "/z4.gtab", "--gens", "θ1", "θ0", "θ2"}).out == "2\n");

  const auto ng = run({"wordmetric", "--builtin", "klein", "--gens", "a", "--table"});
  CHECK(ng.status == 3);
  CHECK(ng.err.find("DoesNotGenerate") != std::string::npos);
  CHECK(run({"wordmetric", "--builtin", "klein", "--gens", "a,b"}).status == 2);
}

TEST_CASE("ordinal encode") {
  const auto series = scratch("four.csv");
  write_file(series, "2.1\n0.3\n1.5\n2.4\n");
  CHECK(run({"ordinal", "encode", series.string(), "--L", "4"}).out == "2 3 1 4\n");

  const auto ramp = scratch("ramp.csv");
  write_file(ramp, "1\n2\n3\n4\n5\n");
  CHECK(run({"ordinal", "encode", ramp.string(), "--L", "3"}).out == "1 2 3\n1 2 3\n1 2 3\n");

  const auto short_run = run({"ordinal", "encode", series.string(), "--L", "5"});
  CHECK(short_run.status == 4);
  CHECK(short_run.err.find("SeriesTooShort") != std::string::npos);

  CHECK(run({"ordinal", "encode", series.string(), "--L", "3", "--ties", "jitter", "--amplitude", "0.1"}).status ==
        2);
  CHECK(run({"ordinal", "encode", series.string(), "--L", "3", "--ties", "jitter", "--amplitude", "0.1", "--seed",
             "4"})
            .status == 0);
}

TEST_CASE("series-dist") {
  const auto a = scratch("a.pat");
  const auto b = scratch("b.pat");
  write_file(a, "1 2 3\n2 1 3\n1 2 3\n1 2 3\n");
  write_file(b, "3 2 1\n2 3 1\n2 3 1\n1 2 3\n");

  const auto d = run({"series-dist", a.string(), b.string(), "--sym", "3", "--metric", "kendall"});
  CHECK(d.status == 0);
  CHECK(d.out.find("\n3\n1\n2\n0\n") != std::string::npos);

  CHECK(run({"series-dist", a.string(), a.string(), "--sym", "3"}).out.find("\n0\n0\n0\n0\n") != std::string::npos);

  const auto w = run({"series-dist", a.string(), b.string(), "--sym", "3", "--W", "4", "--p", "inf"});
  CHECK(w.out.find("\n3\n") != std::string::npos);

  const auto h = run({"series-dist", a.string(), b.string(), "--sym", "3", "--embedded", "--hist", "--format", "json"});
  CHECK(h.status == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j["support"] == nlohmann::json::array({0, 5, 10, 15}));

  const auto short_b = scratch("short.pat");
  write_file(short_b, "1 2 3\n");
  const auto mismatch = run({"series-dist", a.string(), short_b.string(), "--sym", "3"});
  CHECK(mismatch.status == 4);
  CHECK(mismatch.err.find("LengthMismatch") != std::string::npos);

  const auto ka = scratch("ka.txt");
  const auto kb = scratch("kb.txt");
  write_file(ka, "a\nb\ne\n");
  write_file(kb, "c\nb\na\n");
  CHECK(run({"series-dist", ka.string(), kb.string(), "--builtin", "klein", "--embedded"}).out.find("\n4\n0\n2\n") !=
        std::string::npos);
  CHECK(run({"series-dist", ka.string(), kb.string(), "--builtin", "klein"}).status == 2);
}

TEST_CASE("simulate and experiment") {
  const auto dir = scratch("henon");
  const auto first = run({"simulate", "henon", "--C", "0.30", "--N", "10", "--out-dir", dir.string()});
  CHECK(first.status == 0);
  const auto driver = read_file(dir / "driver.csv");
  const auto responder = read_file(dir / "responder.csv");
  CHECK(std::count(driver.begin(), driver.end(), '\n') == 10);
  CHECK(std::count(responder.begin(), responder.end(), '\n') == 10);
  run({"simulate", "henon", "--C", "0.30", "--N", "10", "--out-dir", dir.string()});
  CHECK(read_file(dir / "driver.csv") == driver);
  CHECK(read_file(dir / "responder.csv") == responder);

  CHECK(run({"simulate", "henon", "--C", "-1", "--out-dir", dir.string()}).status == 2);
  const auto diverged = run({"simulate", "henon", "--seed-x", "5,0", "--out-dir", dir.string()});
  CHECK(diverged.status == 4);
  CHECK(diverged.err.find("Diverged") != std::string::npos);

  const auto full = nlohmann::json::parse(run({"experiment", "--C", "0.30", "--L", "4", "--W", "1"}).out);
  int realized = 0;
  for (const auto& c : full["counts"]) realized += c.get<int>() > 0;
  CHECK(realized == 7);
  CHECK(full["config"]["transient"] == 1000);

  const auto strong = nlohmann::json::parse(run({"experiment", "--C", "1.10", "--L", "4"}).out);
  CHECK(strong["counts"][6] == 0);
  CHECK(strong["counts"][0].get<int>() > 0);

  const auto cfg = scratch("experiment.json");
  write_file(cfg, R"({"C": 0.55, "L": 4, "W": 1, "metric": "kendall"})");
  const auto weak = nlohmann::json::parse(run({"experiment", "--config", cfg.string()}).out);
  CHECK(weak["counts"][1] == 0);
  CHECK(weak["config"]["C"] == 0.55);

  write_file(cfg, R"({"C": 0.55, "colour": "red"})");
  CHECK(run({"experiment", "--config", cfg.string()}).status == 2);
}
