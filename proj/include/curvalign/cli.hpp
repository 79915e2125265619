#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace curvalign {

// Exit codes: 0 success, 1 usage or input error, 2 partial failure.
struct RunConfig {
  std::string command;              // gen | align | distance | matrix | bench
  std::vector<std::string> inputs;  // curve files, or the family name for gen
  std::size_t n = 256;
  std::string method = "fft";       // naive | fft
  int approach = 2;
  std::string out;                  // empty = write artifact to stdout
  std::string format = "csv";       // csv | json
  std::vector<std::size_t> sizes;   // bench only
  std::uint64_t seed = 1;
  bool no_resample = false;
  int max_iters = 30;
  double tol = 1e-6;
  unsigned threads = 0;             // matrix only; 0 = CURVALIGN_THREADS or hardware
};

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_align(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_distance(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace curvalign
