#define CATCH_CONFIG_RUNNER
#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

int run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p);
  out << s;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

std::string path_of(const char* name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("gen writes edge lists and rejects bad parameters") {
  REQUIRE(run_cli("gen --kind path --n 5 -o " + path_of("p5.el")) == 0);
  std::string p5 = slurp(g_dir / "p5.el");
  REQUIRE(p5.rfind("p 5 4\n", 0) == 0);

  REQUIRE(run_cli("gen --kind grid --rows 3 --cols 3 -o " + path_of("g33.el")) == 0);
  REQUIRE(slurp(g_dir / "g33.el").rfind("p 9 12\n", 0) == 0);

  REQUIRE(run_cli("gen --kind grid --rows 0 --cols 3 -o " + path_of("bad.el")) == 2);
  REQUIRE(run_cli("gen --kind bogus --n 3 -o " + path_of("bad.el")) == 2);
  REQUIRE(run_cli("gen --kind path --n 5") == 2);  // missing -o
}

TEST_CASE("partition end to end") {
  REQUIRE(run_cli("gen --kind grid --rows 20 --cols 20 -o " + path_of("g.el")) == 0);

  SECTION("labels, report, exit 0 on success") {
    REQUIRE(run_cli("partition -i " + path_of("g.el") + " --beta 0.2 --seed 7 -o " +
                    path_of("labels.txt") + " --report " + path_of("report.txt")) == 0);
    std::string labels = slurp(g_dir / "labels.txt");
    REQUIRE(count_occurrences(labels, "\n") == 400);
    std::string report = slurp(g_dir / "report.txt");
    REQUIRE(report.find("n 400\n") != std::string::npos);
    REQUIRE(report.find("m 760\n") != std::string::npos);
    REQUIRE(report.find("thresholds_met 1\n") != std::string::npos);
    REQUIRE(report.find("cut_fraction ") != std::string::npos);
  }
  SECTION("identical command lines and thread counts give identical bytes") {
    std::string base = "partition -i " + path_of("g.el") + " --beta 0.2 --seed 7 -o ";
    REQUIRE(run_cli(base + path_of("a.txt") + " --report " + path_of("a.rep") +
                    " --threads 1") == 0);
    REQUIRE(run_cli(base + path_of("b.txt") + " --report " + path_of("b.rep") +
                    " --threads 2") == 0);
    REQUIRE(run_cli(base + path_of("c.txt")) == 0);
    REQUIRE(slurp(g_dir / "a.txt") == slurp(g_dir / "b.txt"));
    REQUIRE(slurp(g_dir / "a.txt") == slurp(g_dir / "c.txt"));
    REQUIRE(slurp(g_dir / "a.rep") == slurp(g_dir / "b.rep"));
  }
  SECTION("permutation tie-break mode works end to end") {
    REQUIRE(run_cli("partition -i " + path_of("g.el") +
                    " --beta 0.2 --seed 9 --tiebreak permutation -o " +
                    path_of("perm.labels")) == 0);
    REQUIRE(run_cli("validate -i " + path_of("g.el") + " --labels " + path_of("perm.labels") +
                    " --beta 0.2") == 0);
  }
  SECTION("beta outside (0, 1/2] is a usage error") {
    REQUIRE(run_cli("partition -i " + path_of("g.el") + " --beta 0.6 -o " +
                    path_of("x.txt")) == 2);
  }
  SECTION("missing or malformed input") {
    REQUIRE(run_cli("partition -i " + path_of("nope.el") + " --beta 0.2 -o " +
                    path_of("x.txt")) == 2);
    spit(g_dir / "broken.el", "p 2 2\n0 1\n");
    REQUIRE(run_cli("partition -i " + path_of("broken.el") + " --beta 0.2 -o " +
                    path_of("x.txt")) == 2);
  }
}

TEST_CASE("partition with injected shifts reproduces the worked example") {
  REQUIRE(run_cli("gen --kind path --n 5 -o " + path_of("p5.el")) == 0);
  spit(g_dir / "shifts.txt", "0 0.3\n1 2.1\n2 0.5\n3 0.9\n4 1.7\n");
  REQUIRE(run_cli("partition -i " + path_of("p5.el") + " --beta 0.3 --shifts-file " +
                  path_of("shifts.txt") + " -o " + path_of("p5.labels")) == 0);
  REQUIRE(slurp(g_dir / "p5.labels") == "0 1\n1 1\n2 1\n3 3\n4 4\n");
}

TEST_CASE("single-vertex graph partitions to itself") {
  REQUIRE(run_cli("gen --kind path --n 1 -o " + path_of("p1.el")) == 0);
  REQUIRE(run_cli("partition -i " + path_of("p1.el") + " --beta 0.5 -o " +
                  path_of("p1.labels")) == 0);
  REQUIRE(slurp(g_dir / "p1.labels") == "0 0\n");
}

TEST_CASE("impossible thresholds exit 3 but still write the best attempt") {
  REQUIRE(run_cli("gen --kind path --n 40 -o " + path_of("t.el")) == 0);
  REQUIRE(run_cli("partition -i " + path_of("t.el") +
                  " --beta 0.5 --seed 2 --retries 3 --cut-threshold 0"
                  " --diam-threshold 0.0001 -o " +
                  path_of("t.labels") + " --report " + path_of("t.report")) == 3);
  REQUIRE(count_occurrences(slurp(g_dir / "t.labels"), "\n") == 40);
  REQUIRE(slurp(g_dir / "t.report").find("thresholds_met 0\n") != std::string::npos);
}

TEST_CASE("dumped shifts replay to identical labels") {
  REQUIRE(run_cli("gen --kind grid --rows 12 --cols 9 -o " + path_of("d.el")) == 0);
  REQUIRE(run_cli("partition -i " + path_of("d.el") + " --beta 0.15 --seed 11 -o " +
                  path_of("d1.labels") + " --dump-shifts " + path_of("d.shifts")) == 0);
  REQUIRE(run_cli("partition -i " + path_of("d.el") + " --beta 0.15 --shifts-file " +
                  path_of("d.shifts") + " -o " + path_of("d2.labels")) == 0);
  REQUIRE(slurp(g_dir / "d1.labels") == slurp(g_dir / "d2.labels"));
}

TEST_CASE("large grid generation reports the expected sizes") {
  REQUIRE(run_cli("gen --kind grid --rows 1000 --cols 1000 -o " + path_of("big.el")) == 0);
  std::ifstream in(g_dir / "big.el");
  std::string header;
  std::getline(in, header);
  REQUIRE(header == "p 1000000 1998000");
}

TEST_CASE("validate subcommand") {
  REQUIRE(run_cli("gen --kind grid --rows 10 --cols 10 -o " + path_of("v.el")) == 0);
  REQUIRE(run_cli("partition -i " + path_of("v.el") + " --beta 0.2 --seed 3 -o " +
                  path_of("v.labels")) == 0);
  SECTION("genuine output validates clean") {
    REQUIRE(run_cli("validate -i " + path_of("v.el") + " --labels " + path_of("v.labels") +
                    " --beta 0.2") == 0);
  }
  SECTION("corrupted labels fail with status 4") {
    spit(g_dir / "p3.el", "p 3 2\n0 1\n1 2\n");
    spit(g_dir / "bad1.labels", "0 0\n1 1\n2 0\n");  // piece {0,2} is disconnected
    REQUIRE(run_cli("validate -i " + path_of("p3.el") + " --labels " + path_of("bad1.labels") +
                    " --beta 0.5") == 4);
    spit(g_dir / "bad2.labels", "0 2\n1 1\n2 1\n");  // owner 2 is not a center
    REQUIRE(run_cli("validate -i " + path_of("p3.el") + " --labels " + path_of("bad2.labels") +
                    " --beta 0.5") == 4);
    spit(g_dir / "bad3.labels", "0 0\n2 2\n");  // hole at vertex 1
    REQUIRE(run_cli("validate -i " + path_of("p3.el") + " --labels " + path_of("bad3.labels") +
                    " --beta 0.5") == 4);
  }
  SECTION("missing file is a usage error") {
    REQUIRE(run_cli("validate -i " + path_of("v.el") + " --labels " + path_of("nope.labels") +
                    " --beta 0.2") == 2);
  }
}

TEST_CASE("sweep subcommand") {
  REQUIRE(run_cli("gen --kind grid --rows 15 --cols 15 -o " + path_of("s.el")) == 0);
  SECTION("csv with one row per beta, identical across reruns") {
    REQUIRE(run_cli("sweep -i " + path_of("s.el") + " --betas 0.1,0.3 --trials 3 --seed 5 -o " +
                    path_of("s.csv")) == 0);
    std::string csv = slurp(g_dir / "s.csv");
    REQUIRE(count_occurrences(csv, "\n") == 3);
    REQUIRE(csv.rfind("beta,trials,", 0) == 0);
    REQUIRE(run_cli("sweep -i " + path_of("s.el") + " --betas 0.1,0.3 --trials 3 --seed 5 -o " +
                    path_of("s2.csv") + " --threads 2") == 0);
    REQUIRE(slurp(g_dir / "s2.csv") == csv);
  }
  SECTION("beta out of range") {
    REQUIRE(run_cli("sweep -i " + path_of("s.el") + " --betas 0.9 --trials 2 -o " +
                    path_of("x.csv")) == 2);
  }
  SECTION("betas required") {
    REQUIRE(run_cli("sweep -i " + path_of("s.el") + " --trials 2 -o " + path_of("x.csv")) == 2);
  }
}

TEST_CASE("render subcommand") {
  SECTION("one cell grid") {
    spit(g_dir / "one.labels", "0 0\n");
    REQUIRE(run_cli("render --rows 1 --cols 1 --labels " + path_of("one.labels") + " -o " +
                    path_of("one.svg")) == 0);
    REQUIRE(count_occurrences(slurp(g_dir / "one.svg"), "<rect ") == 1);
  }
  SECTION("monochrome when everything is one piece") {
    spit(g_dir / "mono.labels", "0 0\n1 0\n2 0\n3 0\n");
    REQUIRE(run_cli("render --rows 2 --cols 2 --labels " + path_of("mono.labels") + " -o " +
                    path_of("mono.svg")) == 0);
    std::string svg = slurp(g_dir / "mono.svg");
    REQUIRE(count_occurrences(svg, "<rect ") == 4);
    std::size_t first = svg.find("fill=\"#");
    std::string color = svg.substr(first, 14);
    REQUIRE(count_occurrences(svg, color) == 4);
  }
  SECTION("full gen-partition-render workflow has one rect per vertex") {
    REQUIRE(run_cli("gen --kind grid --rows 10 --cols 10 -o " + path_of("r.el")) == 0);
    REQUIRE(run_cli("partition -i " + path_of("r.el") + " --beta 0.1 --seed 1 -o " +
                    path_of("r.labels")) == 0);
    REQUIRE(run_cli("render --rows 10 --cols 10 --labels " + path_of("r.labels") + " -o " +
                    path_of("r.svg")) == 0);
    REQUIRE(count_occurrences(slurp(g_dir / "r.svg"), "<rect ") == 100);
  }
  SECTION("dimension mismatch") {
    spit(g_dir / "short.labels", "0 0\n");
    REQUIRE(run_cli("render --rows 2 --cols 2 --labels " + path_of("short.labels") + " -o " +
                    path_of("x.svg")) == 2);
  }
}

TEST_CASE("top level usage errors") {
  REQUIRE(run_cli("") == 2);
  REQUIRE(run_cli("frobnicate") == 2);
  REQUIRE(run_cli("--help") == 0);
}

int main(int argc, char** argv) {
  if (argc > 1 && fs::exists(argv[argc - 1])) {
    g_cli = argv[argc - 1];
    --argc;
  } else if (const char* env = std::getenv("LOWDIAM_CLI")) {
    g_cli = env;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-lowdiam-binary> (or set LOWDIAM_CLI)\n");
    return 2;
  }
  g_dir = fs::temp_directory_path() / ("lowdiam_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(g_dir);
  int rc = Catch::Session().run(argc, argv);
  fs::remove_all(g_dir);
  return rc;
}
