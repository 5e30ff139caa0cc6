#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("planarlim_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(PLANARLIM_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST(Cli, PackTetrahedron) {
  const fs::path dir = scratch("pack");
  ASSERT_EQ(run("pack --family tetrahedron --out " + dir.string()), 0);
  const auto rows = data_lines(dir / "packing.csv");
  ASSERT_EQ(rows.size(), 5u);  // header plus 4 disks
  EXPECT_EQ(rows[0], "vertex,cx,cy,r");
  EXPECT_EQ(rows[4], "3,0,0,1");  // the interior disk is the normalized root
  const json j = load(dir / "pack.json");
  EXPECT_EQ(j["packing"]["root"], 3);
  EXPECT_LT(j["packing"]["residual"].get<double>(), 1e-10);
  EXPECT_EQ(j["config"]["command"], "pack");
  EXPECT_EQ(slurp(dir / "packing.csv").rfind("# config: {", 0), 0u);
}

TEST(Cli, SupportedOnGridCenters) {
  const fs::path dir = scratch("supported");
  ASSERT_EQ(run("supported --family grid_points --size 12 --delta 0.5 --s 4 --seed 3 --out " + dir.string()), 0);
  const json j = load(dir / "supported.json");
  EXPECT_EQ(j["points"], 144);
  EXPECT_TRUE(j.contains("N"));
  EXPECT_TRUE(j["tiling"]["bound_ok"].get<bool>());
  EXPECT_TRUE(j["tiling"]["level_a_flow_exact"].get<bool>());
  EXPECT_EQ(j["cities"]["supported_city_square_not_s_supported"], 0);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("codes");
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("supported --family grid_points --size 5 --delta 1.5 --out " + dir.string()), 2);
  EXPECT_EQ(run("pack --family grid --size 4 --out " + dir.string()), 2);
  EXPECT_EQ(run("pack --graph /nonexistent/graph.txt --out " + dir.string()), 2);
  EXPECT_EQ(run("pack --family random_triangulation --size 30 --seed 3 --tol 1e-300 --out " + dir.string()), 3);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, GenerateIsDeterministicAndReadable) {
  const fs::path dir = scratch("generate");
  const std::string args = "generate --family random_triangulation --size 200 --max-degree 8 --seed 9 --out " + dir.string();
  ASSERT_EQ(run(args), 0);
  const std::string first = slurp(dir / "graph.txt");
  const std::string first_json = slurp(dir / "generate.json");
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(slurp(dir / "graph.txt"), first);
  EXPECT_EQ(slurp(dir / "generate.json"), first_json);
  // The written map feeds the packer.
  const fs::path packed = scratch("generate_pack");
  ASSERT_EQ(run("pack --graph " + (dir / "graph.txt").string() + " --out " + packed.string()), 0);
  EXPECT_LT(load(packed / "pack.json")["packing"]["overlap"].get<double>(), 1e-8);
}

TEST(Cli, TriangulateReportsRatios) {
  const fs::path dir = scratch("triangulate");
  ASSERT_EQ(run("generate --family random_planar --size 100 --max-degree 6 --seed 2 --triangulate --out " +
                dir.string()),
            0);
  const json j = load(dir / "generate.json");
  EXPECT_TRUE(j["graph"]["is_triangulation"].get<bool>());
  EXPECT_TRUE(j["triangulation"]["contains_input"].get<bool>());
  EXPECT_LE(j["triangulation"]["vertex_ratio"].get<double>(), 7.0);
}

TEST(Cli, ConfigFileFillsOptions) {
  const fs::path dir = scratch("config");
  {
    std::ofstream cfg(dir / "cfg.json");
    cfg << R"({"command": "walk", "family": "cycle", "size": 4, "horizon": 2, "out": ")" << dir.string()
        << "\"}";
  }
  ASSERT_EQ(run("--config " + (dir / "cfg.json").string()), 0);
  const auto rows = data_lines(dir / "phi.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows.back(), "2,0.5,0");
  // Command-line flags win over the file.
  ASSERT_EQ(run("walk --config " + (dir / "cfg.json").string() + " --horizon 3"), 0);
  EXPECT_EQ(data_lines(dir / "phi.csv").size(), 5u);
}

TEST(Cli, MonteCarloIndependentOfJobs) {
  const fs::path a = scratch("jobs_a"), b = scratch("jobs_b");
  const std::string base = "walk --family grid --size 10 --horizon 50 --mode mc --samples 4000 --seed 5 ";
  ASSERT_EQ(run(base + "--jobs 1 --out " + a.string()), 0);
  ASSERT_EQ(run(base + "--jobs 3 --out " + b.string()), 0);
  EXPECT_EQ(data_lines(a / "phi.csv"), data_lines(b / "phi.csv"));
}

TEST(Cli, WalkGrowth) {
  const fs::path dir = scratch("growth");
  ASSERT_EQ(run("walk --family path --size 201 --horizon 4 --radius 100 --out " + dir.string()), 0);
  const json j = load(dir / "walk.json");
  EXPECT_NEAR(j["growth"]["alpha"].get<double>(), 1.0, 0.05);
  EXPECT_EQ(data_lines(dir / "growth.csv").size(), 102u);
}

TEST(Cli, CensusAndConvergence) {
  const fs::path dir = scratch("census");
  ASSERT_EQ(run("census --family grid --size 3 --radius 1 --out " + dir.string()), 0);
  const json j = load(dir / "census.json");
  std::vector<std::string> masses;
  for (const auto& e : j["entries"]) masses.push_back(e["mass"]);
  std::sort(masses.begin(), masses.end());
  EXPECT_EQ(masses, (std::vector<std::string>{"1/9", "4/9", "4/9"}));
  ASSERT_EQ(run("census --family hex --sizes 2,4,8 --radius 1 --out " + dir.string()), 0);
  const json c = load(dir / "census.json");
  EXPECT_EQ(c["convergence"][0]["tv"].size(), 2u);
  ASSERT_EQ(run("census --family icosahedron --radius 1 --out " + dir.string()), 0);
  EXPECT_EQ(load(dir / "census.json")["degree_deficiency"], 12);
}

TEST(Cli, ImtpBiasedCounterexample) {
  const fs::path dir = scratch("imtp");
  ASSERT_EQ(run("imtp --family path --size 3 --root 1 --transport leaf_neighbor --out " + dir.string()), 0);
  const json j = load(dir / "imtp.json");
  EXPECT_EQ(j["overall"][0]["lhs"], "2");
  EXPECT_EQ(j["overall"][0]["rhs"], "0");
  EXPECT_FALSE(j["all_equal"].get<bool>());
  ASSERT_EQ(run("imtp --k 1,5/2,10 --out " + dir.string()), 0);
  const json u = load(dir / "imtp.json");
  EXPECT_TRUE(u["all_equal"].get<bool>());
  for (const auto& t : u["truncation"]) EXPECT_TRUE(t["all_equal"].get<bool>());
}

TEST(Cli, Pipeline) {
  const fs::path dir = scratch("pipeline");
  ASSERT_EQ(run("pipeline --family geodesic --size 3 --seed 1 --delta 0.5 --s 2 --out " + dir.string()), 0);
  const json j = load(dir / "pipeline.json");
  EXPECT_EQ(j["supported"]["points"], 642);
  EXPECT_TRUE(j["supported"]["tiling"]["bound_ok"].get<bool>());
  EXPECT_EQ(data_lines(dir / "points.csv").size(), 643u);
  // Degree 8 packings of this size have centers closer than double precision resolves.
  EXPECT_EQ(run("pipeline --size 300 --max-degree 8 --seed 4 --delta 0.5 --s 2 --out " + dir.string()), 2);
}
