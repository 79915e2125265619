#include "doctest.h"

#include <json.hpp>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvalign/cli.hpp"
#include "curvalign/curve.hpp"
#include "curvalign/io.hpp"
#include "curvalign/synthetic.hpp"

using namespace curvalign;
namespace fs = std::filesystem;

namespace {

// Per-process scratch directory, removed when the binary exits.
struct ScratchDir {
  fs::path dir;
  ScratchDir() {
    dir = fs::temp_directory_path() /
          ("curvalign_test_" + std::to_string(static_cast<unsigned long>(::getpid())));
    fs::create_directories(dir);
  }
  ~ScratchDir() { std::error_code ec; fs::remove_all(dir, ec); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

ScratchDir& scratch() {
  static ScratchDir s;
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("curve CSV round trip preserves coordinates") {
  Curve c = gen_curve(CurveFamily::limacon, 32);
  const std::string path = scratch().path("roundtrip.csv");
  write_curve_csv(path, c);
  Curve back = read_curve_csv(path);
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back[i].x == c[i].x);
    CHECK(back[i].y == c[i].y);
  }
}

TEST_CASE("curve JSON round trip preserves coordinates") {
  Curve c = gen_curve(CurveFamily::clover, 24);
  const std::string path = scratch().path("roundtrip.json");
  write_curve_json(path, c);
  Curve back = read_curve_json(path);
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back[i].x == c[i].x);
    CHECK(back[i].y == c[i].y);
  }
}

TEST_CASE("CSV reader accepts headers and closing duplicates") {
  const std::string path = scratch().path("headered.csv");
  write_text(path, "x,y\n1,0\n0,1\n-1,0\n0,-1\n1,0\n");
  Curve c = read_curve_csv(path);
  // the repeated first node is recognized as the closing row and dropped
  REQUIRE(c.size() == 4);
  CHECK(c[0].x == 1.0);
  CHECK(c[3].y == -1.0);
}

TEST_CASE("CSV reader rejects malformed input") {
  const std::string bad1 = scratch().path("bad1.csv");
  write_text(bad1, "1,2\nthree\n4,5\n6,7\n");
  CHECK_THROWS(read_curve_csv(bad1));

  const std::string bad2 = scratch().path("bad2.csv");
  write_text(bad2, "x,y\n1,2\nalpha,beta\n3,4\n5,6\n");
  CHECK_THROWS(read_curve_csv(bad2));

  const std::string few = scratch().path("few.csv");
  write_text(few, "1,2\n3,4\n");
  CHECK_THROWS(read_curve_csv(few));

  CHECK_THROWS(read_curve_csv(scratch().path("does_not_exist.csv")));
}

TEST_CASE("JSON reader validates the schema") {
  const std::string bad = scratch().path("bad.json");
  write_text(bad, "{\"points\": [[0, 0]]}");
  CHECK_THROWS(read_curve_json(bad));

  const std::string ragged = scratch().path("ragged.json");
  write_text(ragged, "{\"nodes\": [[0, 0, 0], [1, 1]]}");
  CHECK_THROWS(read_curve_json(ragged));
}

TEST_CASE("load_curve dispatches on extension") {
  Curve c = gen_curve(CurveFamily::bumps, 20);
  const std::string jpath = scratch().path("dispatch.json");
  const std::string cpath = scratch().path("dispatch.csv");
  write_curve_json(jpath, c);
  write_curve_csv(cpath, c);
  CHECK(load_curve(jpath).size() == 20);
  CHECK(load_curve(cpath).size() == 20);
}

TEST_CASE("matrix_to_csv formats labels and NaN cells") {
  std::vector<std::string> names = {"a", "b"};
  std::vector<std::vector<double>> d = {{0.0, 0.5}, {std::nan(""), 0.0}};
  std::string csv = matrix_to_csv(names, d);
  std::istringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "id,a,b");
  std::getline(ss, line);
  CHECK(line == "a,0,0.5");
  std::getline(ss, line);
  CHECK(line == "b,nan,0");

  std::vector<std::string> wrong = {"a"};
  CHECK_THROWS_AS(matrix_to_csv(wrong, d), std::invalid_argument);
}

TEST_CASE("cmd_gen writes a curve file with the requested node count") {
  RunConfig cfg;
  cfg.command = "gen";
  cfg.inputs = {"superellipse"};
  cfg.n = 48;
  cfg.out = scratch().path("gen.csv");
  std::ostringstream out, err;
  CHECK(run_command(cfg, out, err) == 0);
  Curve c = read_curve_csv(cfg.out);
  CHECK(c.size() == 48);

  cfg.format = "json";
  cfg.out = scratch().path("gen.json");
  CHECK(cmd_gen(cfg, out, err) == 0);
  CHECK(read_curve_json(cfg.out).size() == 48);
}

TEST_CASE("cmd_gen rejects bad arguments") {
  RunConfig cfg;
  cfg.command = "gen";
  cfg.inputs = {"heptagram"};
  std::ostringstream out, err;
  CHECK(cmd_gen(cfg, out, err) == 1);
  CHECK(err.str().find("error:") != std::string::npos);

  RunConfig small;
  small.command = "gen";
  small.inputs = {"circle"};
  small.n = 8;
  std::ostringstream out2, err2;
  CHECK(cmd_gen(small, out2, err2) == 1);

  RunConfig fmt;
  fmt.command = "gen";
  fmt.inputs = {"circle"};
  fmt.format = "xml";
  std::ostringstream out3, err3;
  CHECK(cmd_gen(fmt, out3, err3) == 1);
}

TEST_CASE("cmd_align reports a self alignment in JSON") {
  const std::string path = scratch().path("self.csv");
  write_curve_csv(path, gen_curve(CurveFamily::bumps, 100));

  RunConfig cfg;
  cfg.command = "align";
  cfg.inputs = {path, path};
  cfg.n = 64;
  std::ostringstream out, err;
  REQUIRE(run_command(cfg, out, err) == 0);

  const nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j.at("shift").get<std::size_t>() == 0);
  CHECK(std::fabs(j.at("t0").get<double>()) < 1e-12);
  CHECK(std::fabs(j.at("theta").get<double>()) < 1e-9);
  CHECK(j.at("energy").get<double>() < 1e-12);
  CHECK(j.at("trace").get<double>() > 0.0);

  RunConfig naive = cfg;
  naive.method = "naive";
  std::ostringstream out2, err2;
  REQUIRE(cmd_align(naive, out2, err2) == 0);
  const nlohmann::json k = nlohmann::json::parse(out2.str());
  CHECK(k.at("shift") == j.at("shift"));
  CHECK(std::fabs(k.at("theta").get<double>() - j.at("theta").get<double>()) < 1e-9);
}

TEST_CASE("cmd_align validates method and inputs") {
  RunConfig cfg;
  cfg.command = "align";
  cfg.inputs = {"only_one.csv"};
  std::ostringstream out, err;
  CHECK(cmd_align(cfg, out, err) == 1);

  const std::string path = scratch().path("meth.csv");
  write_curve_csv(path, gen_curve(CurveFamily::circle, 32));
  RunConfig bad;
  bad.command = "align";
  bad.inputs = {path, path};
  bad.method = "dct";
  std::ostringstream out2, err2;
  CHECK(cmd_align(bad, out2, err2) == 1);
}

TEST_CASE("cmd_distance reports a near-zero self distance") {
  const std::string path = scratch().path("dself.csv");
  write_curve_csv(path, gen_curve(CurveFamily::limacon, 100));

  RunConfig cfg;
  cfg.command = "distance";
  cfg.inputs = {path, path};
  cfg.n = 64;
  cfg.approach = 2;
  std::ostringstream out, err;
  REQUIRE(run_command(cfg, out, err) == 0);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j.at("distance").get<double>() <= 1e-6);
  CHECK(j.at("converged").get<bool>());
  CHECK(j.at("iterations").get<int>() >= 1);
  CHECK(j.at("gamma").size() == 65);
}

TEST_CASE("cmd_distance enforces the approach 1 size limit") {
  const std::string path = scratch().path("big.csv");
  write_curve_csv(path, gen_curve(CurveFamily::bumps, 700));

  RunConfig cfg;
  cfg.command = "distance";
  cfg.inputs = {path, path};
  cfg.n = 600;
  cfg.approach = 1;
  std::ostringstream out, err;
  CHECK(cmd_distance(cfg, out, err) == 1);
  CHECK(err.str().find("approach 2") != std::string::npos);

  RunConfig bad = cfg;
  bad.approach = 3;
  std::ostringstream out2, err2;
  CHECK(cmd_distance(bad, out2, err2) == 1);
}

TEST_CASE("cmd_matrix writes a labeled zero diagonal matrix") {
  const std::string p1 = scratch().path("m1.csv");
  const std::string p2 = scratch().path("m2.csv");
  write_curve_csv(p1, gen_curve(CurveFamily::bumps, 100));
  write_curve_csv(p2, gen_curve(CurveFamily::bumps, 100));

  RunConfig cfg;
  cfg.command = "matrix";
  cfg.inputs = {p1, p2};
  cfg.n = 64;
  cfg.threads = 1;
  std::ostringstream out, err;
  REQUIRE(run_command(cfg, out, err) == 0);

  std::istringstream ss(out.str());
  std::string header;
  std::getline(ss, header);
  CHECK(header == "id,m1,m2");
  std::string row;
  std::getline(ss, row);
  CHECK(row.substr(0, 3) == "m1,");
  // identical shapes give distances at rounding level in every cell
  std::istringstream rs(row.substr(3));
  std::string cell;
  while (std::getline(rs, cell, ',')) CHECK(std::fabs(std::stod(cell)) < 1e-6);
}

TEST_CASE("cmd_bench emits the benchmark table") {
  RunConfig cfg;
  cfg.command = "bench";
  cfg.sizes = {64, 128};
  std::ostringstream out, err;
  REQUIRE(run_command(cfg, out, err) == 0);
  std::istringstream ss(out.str());
  std::string header;
  std::getline(ss, header);
  CHECK(header == "N,t_naive,t_fft,speedup,error");
  int rows = 0;
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("cmd_bench validates sizes") {
  RunConfig cfg;
  cfg.command = "bench";
  cfg.sizes = {128, 64};
  std::ostringstream out, err;
  CHECK(cmd_bench(cfg, out, err) == 1);

  RunConfig small;
  small.command = "bench";
  small.sizes = {8, 64};
  std::ostringstream out2, err2;
  CHECK(cmd_bench(small, out2, err2) == 1);
}

TEST_CASE("unknown commands fail cleanly") {
  RunConfig cfg;
  cfg.command = "frobnicate";
  std::ostringstream out, err;
  CHECK(run_command(cfg, out, err) == 1);
  CHECK(err.str().find("unknown command") != std::string::npos);
}
