#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const std::string kExe = JETFOL_EXE;
const std::string kData = JETFOL_DATA;

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("jetfol_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  auto out = scratch() / "stdout.txt";
  const std::string cmd = kExe + " " + args + " > " + out.string() + " 2> " + (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("compose and invert print canonical jets") {
  auto f = write("f.json", R"({"l":1,"k":3,"field":"rational","components":[[{"exps":[1],"coeff":"1"},{"exps":[2],"coeff":"1"}]]})");
  auto g = write("g.json", R"({"l":1,"k":3,"field":"rational","components":[[{"exps":[1],"coeff":"1"},{"exps":[3],"coeff":"1"}]]})");
  auto r = run("compose " + f + " " + g);
  CHECK(r.code == 0);
  // a second pass through the printer is a fixed point
  auto again = run("compose " + write("h.json", r.out) + " " + write("id.json",
      R"({"l":1,"k":3,"field":"rational","components":[[{"exps":[1],"coeff":"1"}]]})"));
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
  auto inv = run("invert " + write("h2.json", r.out));
  CHECK(inv.code == 0);
  CHECK(run("compose " + write("h3.json", r.out) + " " + write("i3.json", inv.out)).out ==
        run("invert " + write("id2.json", R"({"l":1,"k":3,"field":"rational","components":[[{"exps":[1],"coeff":"1"}]]})")).out);
}

TEST_CASE("lift exit codes follow the expected verdict") {
  CHECK(run("lift --rep " + data("torus_q1.json")).code == 1);
  CHECK(run("--expect-liftable=false lift --rep " + data("torus_q1.json")).code == 0);
  CHECK(run("lift --rep " + data("torus_flat.json")).code == 0);
  CHECK(run("validate --rep " + data("torus_q1.json")).code == 0);
  CHECK(run("lifts --rep " + data("torus_flat.json")).code == 0);
}

TEST_CASE("malformed inputs exit with 2") {
  auto bad = write("bad.json", R"({"presentation":"torus","k":3,"l":1,"images":{"x":["1","0","1"],"y":["0","1/0","1"]}})");
  CHECK(run("lift --rep " + bad).code == 2);
  CHECK(run("lift --rep " + scratch().string() + "/nope.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--field complex selftest").code == 2);
  auto broken = write("broken.json", R"({"presentation":"torus","k":3,"l":1,"images":{"x":["1","0","2"],"y":["1","0","1"]}})");
  CHECK(run("lift --rep " + broken).code == 2);
  CHECK(run("validate --rep " + broken).code == 1);
}

TEST_CASE("model commands") {
  CHECK(run("--model heisenberg mc-check --mc " + data("heis_eta.json")).code == 0);
  auto e = run("--model heisenberg ext-class --mc " + data("heis_eta.json"));
  CHECK(e.code == 0);
  CHECK(e.out.find("a^c") != std::string::npos);
  CHECK(run("--model heisenberg exact --mc " + data("heis_eta.json")).code == 0);
  CHECK(run("--model trivial_rank2 ext-class --mc " + data("codim2_eta.json")).code == 0);
  CHECK(run("--model mapping_torus --param lambda=1 exact --mc " + data("mapping_torus_eta.json")).code == 0);
  auto broken = write("mc_bad.json", R"({"k":4,"mode":"rank1","eta":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
  CHECK(run("--model heisenberg mc-check --mc " + broken).code == 1);
  CHECK(run("mc-check --mc " + data("heis_eta.json")).code == 2);
}

TEST_CASE("bridge, classify, normalize, selftest") {
  auto b = run("bridge --genus 2 --periods " + data("bridge_g2.json"));
  CHECK(b.code == 0);
  CHECK(b.out.find("\"defect_over_quadric\": \"-1\"") != std::string::npos);
  CHECK(run("--presentation surface:2 classify --rho0 " + data("surface2_trivial.json")).code == 0);
  auto c = run("--presentation circle classify --rho0 " + data("circle_minus1.json"));
  CHECK(c.code == 0);
  CHECK(c.out.find("S^0") != std::string::npos);
  CHECK(run("--field float normalize --u 1 --v 1").code == 0);
  CHECK(run("--field float normalize --u 0 --v 0").code == 1);
  CHECK(run("selftest").code == 0);
}
