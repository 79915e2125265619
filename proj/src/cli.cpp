#include "curvalign/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "curvalign/benchmark.hpp"
#include "curvalign/elastic.hpp"
#include "curvalign/io.hpp"
#include "curvalign/rigid_align.hpp"
#include "curvalign/synthetic.hpp"

namespace curvalign {

namespace {

void emit(const RunConfig& cfg, const std::string& artifact, std::ostream& out) {
  if (cfg.out.empty()) {
    out << artifact;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write file: " + cfg.out);
  f << artifact;
}

void validate_common(const RunConfig& cfg) {
  if (cfg.n < 16) throw std::invalid_argument("N must be at least 16");
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()))
    throw std::invalid_argument("benchmark sizes must be sorted ascending");
}

Curve load_preprocessed(const std::string& path, const RunConfig& cfg) {
  const Curve raw = load_curve(path);
  return preprocess(raw, cfg.n, !cfg.no_resample);
}

std::string file_stem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

unsigned thread_cap(const RunConfig& cfg) {
  if (cfg.threads != 0) return cfg.threads;
  if (const char* env = std::getenv("CURVALIGN_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

ElasticOptions elastic_opts(const RunConfig& cfg) {
  ElasticOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.energy_tol = cfg.tol;
  opts.use_fft = (cfg.method != "naive");
  return opts;
}

int fail(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return 1;
}

}  // namespace

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_common(cfg);
    if (cfg.inputs.size() != 1) throw std::invalid_argument("gen needs exactly one family name");
    const Curve c = gen_curve(parse_family(cfg.inputs[0]), cfg.n, cfg.seed);
    emit(cfg, cfg.format == "json" ? curve_to_json(c) : curve_to_csv(c), out);
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_align(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_common(cfg);
    if (cfg.inputs.size() != 2) throw std::invalid_argument("align needs two curve files");
    if (cfg.method != "fft" && cfg.method != "naive")
      throw std::invalid_argument("method must be naive or fft");
    const Curve c1 = load_preprocessed(cfg.inputs[0], cfg);
    const Curve c2 = load_preprocessed(cfg.inputs[1], cfg);
    const RigidAlignment a = (cfg.method == "naive") ? align_naive(c1, c2) : align_fft(c1, c2);
    emit(cfg, alignment_to_json(a) + "\n", out);
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_distance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_common(cfg);
    if (cfg.inputs.size() != 2) throw std::invalid_argument("distance needs two curve files");
    if (cfg.approach != 1 && cfg.approach != 2)
      throw std::invalid_argument("approach must be 1 or 2");
    const Curve c1 = load_preprocessed(cfg.inputs[0], cfg);
    const Curve c2 = load_preprocessed(cfg.inputs[1], cfg);
    const ElasticOptions opts = elastic_opts(cfg);
    const ElasticMatch m = (cfg.approach == 1) ? elastic_distance_approach1(c1, c2, opts)
                                               : elastic_distance_approach2(c1, c2, opts);
    emit(cfg, elastic_to_json(m) + "\n", out);
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_common(cfg);
    if (cfg.inputs.size() < 2) throw std::invalid_argument("matrix needs at least two curve files");
    std::vector<Curve> curves;
    std::vector<std::string> names;
    for (const std::string& path : cfg.inputs) {
      curves.push_back(load_curve(path));
      names.push_back(file_stem(path));
    }
    const DistanceMethod method =
        (cfg.approach == 1) ? DistanceMethod::approach1 : DistanceMethod::approach2;

    const auto log_cell = [&](std::size_t i, std::size_t j, double value, double seconds) {
      err << "pair " << names[i] << " x " << names[j] << ": " << value << " (" << seconds
          << " s)\n";
    };
    const auto d =
        distance_matrix(curves, method, cfg.n, elastic_opts(cfg), thread_cap(cfg), log_cell);

    emit(cfg, matrix_to_csv(names, d), out);
    for (const auto& row : d) {
      for (const double v : row) {
        if (std::isnan(v)) {
          err << "error: some pairs failed (NaN cells present)\n";
          return 2;
        }
      }
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_common(cfg);
    std::vector<std::size_t> sizes = cfg.sizes;
    if (sizes.empty()) sizes = {64, 128, 256, 512, 1024, 2048, 4096};
    for (const std::size_t n : sizes) {
      if (n < 16) throw std::invalid_argument("benchmark sizes must be at least 16");
    }

    const auto rows = run_alignment_benchmark(sizes, 5);

    bool errors_match = true;
    for (const auto& r : rows) {
      const double scale = std::max({std::abs(r.error_naive), std::abs(r.error_fft), 1e-300});
      if (std::abs(r.error_naive - r.error_fft) > 1e-9 * scale) errors_match = false;
    }

    std::string artifact;
    if (cfg.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        j.push_back({{"N", r.n},
                     {"t_naive", r.t_naive},
                     {"t_fft", r.t_fft},
                     {"speedup", r.speedup},
                     {"error", r.error_fft}});
      }
      artifact = j.dump() + "\n";
    } else {
      std::ostringstream ss;
      ss << "N,t_naive,t_fft,speedup,error\n";
      ss.precision(12);
      for (const auto& r : rows) {
        ss << r.n << "," << r.t_naive << "," << r.t_fft << "," << r.speedup << ","
           << r.error_fft << "\n";
      }
      artifact = ss.str();
    }
    emit(cfg, artifact, out);

    if (!errors_match) {
      err << "error: naive and fft alignment errors disagree beyond 1e-9 relative\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "gen") return cmd_gen(cfg, out, err);
  if (cfg.command == "align") return cmd_align(cfg, out, err);
  if (cfg.command == "distance") return cmd_distance(cfg, out, err);
  if (cfg.command == "matrix") return cmd_matrix(cfg, out, err);
  if (cfg.command == "bench") return cmd_bench(cfg, out, err);
  return fail(err, "unknown command: " + cfg.command);
}

}  // namespace curvalign
