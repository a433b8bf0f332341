#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "z2ph/cli.hpp"
#include "z2ph/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = z2ph::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch directory holding the bundled fixtures.
struct Workspace {
  fs::path dir;

  Workspace() {
    dir = fs::temp_directory_path() / ("z2ph_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (const char* name : {"klein_delta.fcx", "klein_height.fcx", "klein_height.values",
                             "torus_height.fcx", "torus_height.values", "circle20.csv"}) {
      REQUIRE(run({"example", name, "-o", path(name)}).code == 0);
    }
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
};

}  // namespace

TEST_CASE("golden outputs of the bundled fixtures") {
  const Workspace w;
  auto persist = run({"persist", w.path("klein_height.fcx")});
  CHECK(persist.code == 0);
  CHECK(persist.out == "0 -2 inf\n1 -1 inf\n1 2 inf\n2 2 inf\n");
  CHECK(persist.err.empty());

  auto homology = run({"homology", w.path("klein_delta.fcx")});
  CHECK(homology.code == 0);
  CHECK(homology.out.starts_with("degree betti\n0 1\n1 2\n2 1\n"));

  auto extended = run({"extended", w.path("klein_height.fcx"), "--vertex-values",
                       w.path("klein_height.values"), "--bound", "2"});
  CHECK(extended.code == 0);
  CHECK(extended.out == "0 -2 3\n1 -1 6\n1 2 3\n2 2 7\n");

  // Default bound M = max|f| + 1 = 3 moves the second phase by 1 per unit of M.
  auto defaulted = run({"extended", w.path("klein_height.fcx"), "--vertex-values",
                        w.path("klein_height.values")});
  CHECK(defaulted.code == 0);
  CHECK(defaulted.out == "0 -2 5\n1 -1 8\n1 2 5\n2 2 9\n");

  auto torus = run({"extended", w.path("torus_height.fcx"), "--vertex-values",
                    w.path("torus_height.values"), "--bound", "2", "--spacing", "1"});
  CHECK(torus.out == "0 -2 3\n1 -1 4\n1 1 6\n2 2 7\n");
}

TEST_CASE("distance, betti-curve and rips") {
  const Workspace w;
  w.write("a.bcx", run({"persist", w.path("klein_height.fcx")}).out);
  w.write("b.bcx", "0 -1.75 inf\n1 -0.75 inf\n1 2.25 inf\n2 2.25 inf\n");
  CHECK(run({"distance", w.path("a.bcx"), w.path("a.bcx")}).out == "0\n");
  CHECK(run({"distance", w.path("a.bcx"), w.path("b.bcx")}).out == "0.25\n");
  CHECK(run({"distance", w.path("a.bcx"), w.path("b.bcx"), "--dim", "1"}).out == "0.25\n");

  const auto curve = run({"betti-curve", w.path("a.bcx"), "--grid", "-2:2:2"});
  CHECK(curve.code == 0);
  CHECK(curve.out == "t,b0,b1,b2\n-2,1,0,0\n0,1,1,0\n2,1,2,1\n");

  const auto rips = run({"rips", w.path("circle20.csv"), "--max-dim", "2"});
  CHECK(rips.code == 0);
  const auto radius = run({"rips", w.path("circle20.csv"), "--max-dim", "2", "--radius-axis"});
  std::istringstream full(rips.out), half(radius.out);
  const auto bf = z2ph::read_bcx(full), bh = z2ph::read_bcx(half);
  REQUIRE(bf.size() == bh.size());
  for (std::size_t i = 0; i < bf.size(); ++i) {
    CHECK(bh.bars()[i].interval.birth == doctest::Approx(bf.bars()[i].interval.birth / 2));
  }
}

TEST_CASE("emitted BCX re-parses identically and runs are deterministic") {
  const Workspace w;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"persist", w.path("klein_height.fcx")},
           {"rips", w.path("circle20.csv"), "--max-dim", "2", "--steps", "10", "--step-size",
            "0.1"},
           {"extended", w.path("torus_height.fcx"), "--vertex-values",
            w.path("torus_height.values")}}) {
    const auto first = run(args), second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    std::istringstream in(first.out);
    std::ostringstream again;
    z2ph::write_bcx(again, z2ph::read_bcx(in));
    CHECK(again.str() == first.out);
  }
}

TEST_CASE("svg output") {
  const Workspace w;
  const auto r = run({"persist", w.path("klein_height.fcx"), "--svg", w.path("k.svg")});
  CHECK(r.code == 0);
  std::ifstream in(w.path("k.svg"));
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str().starts_with("<svg"));
}

TEST_CASE("exit codes") {
  const Workspace w;
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"persist"}).code == 1);
  CHECK(run({"rips", w.path("circle20.csv")}).code == 1);
  CHECK(run({"rips", w.path("circle20.csv"), "--max-dim", "1", "--steps", "3"}).code == 1);
  CHECK(run({"betti-curve", w.path("circle20.csv"), "--grid", "1:0"}).code == 1);
  CHECK(run({"example", "nothing"}).code == 1);
  CHECK(run({"homology", w.path("klein_delta.fcx"), "--format", "xyz"}).code == 1);

  const auto missing = run({"persist", w.path("missing.fcx")});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK_FALSE(missing.err.empty());
  w.write("bad.fcx", "cell 0 0 0\ncell 1 1 0 0 0\n");
  CHECK(run({"persist", w.path("bad.fcx")}).code == 2);
  w.write("order.fcx", "cell 0 0 1\ncell 1 0 0\n");
  CHECK(run({"persist", w.path("order.fcx")}).code == 2);
  CHECK(run({"extended", w.path("klein_height.fcx"), "--vertex-values",
             w.path("klein_height.values"), "--bound", "1.5"})
            .code == 2);

  const auto help = run({"--help"});
  CHECK(help.code == 0);
  for (const char* fmt : {"FCX v1", "SPX v1", "BCX v1", "CSV", "curves"}) {
    CHECK(help.out.find(fmt) != std::string::npos);
  }
  CHECK(run({"example", "--list"}).out.find("klein_height.fcx") != std::string::npos);
}
