#include "curvalign/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace curvalign {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

void drop_closing_duplicate(Curve& c) {
  if (c.size() >= 2 && c.nodes.front().x == c.nodes.back().x &&
      c.nodes.front().y == c.nodes.back().y) {
    c.nodes.pop_back();
  }
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

Curve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Curve c;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    std::string sx, sy;
    if (!std::getline(ls, sx, ',') || !std::getline(ls, sy)) {
      throw std::runtime_error("malformed CSV line in " + path + ": " + line);
    }
    try {
      c.nodes.emplace_back(std::stod(sx), std::stod(sy));
    } catch (const std::exception&) {
      if (first) {
        first = false;
        continue;  // header line
      }
      throw std::runtime_error("malformed CSV line in " + path + ": " + line);
    }
    first = false;
  }
  drop_closing_duplicate(c);
  validate_curve(c, 4);
  return c;
}

std::string curve_to_csv(const Curve& c) {
  std::ostringstream ss;
  ss << "x,y\n";
  for (const Point2& p : c.nodes) ss << fmt(p.x) << "," << fmt(p.y) << "\n";
  return ss.str();
}

void write_curve_csv(const std::string& path, const Curve& c) {
  write_file(path, curve_to_csv(c));
}

Curve read_curve_json(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(read_file(path));
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw std::runtime_error("curve JSON must contain a \"nodes\" array: " + path);
  Curve c;
  for (const auto& e : j["nodes"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("curve JSON nodes must be [x, y] pairs: " + path);
    c.nodes.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  drop_closing_duplicate(c);
  validate_curve(c, 4);
  return c;
}

std::string curve_to_json(const Curve& c) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const Point2& p : c.nodes) nodes.push_back({p.x, p.y});
  nlohmann::json j{{"nodes", std::move(nodes)}, {"closed", true}};
  return j.dump();
}

void write_curve_json(const std::string& path, const Curve& c) {
  write_file(path, curve_to_json(c));
}

Curve load_curve(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const std::string ext = (dot == std::string::npos) ? "" : path.substr(dot + 1);
  return (ext == "json") ? read_curve_json(path) : read_curve_csv(path);
}

std::string alignment_to_json(const RigidAlignment& a) {
  nlohmann::json j{{"shift", a.shift},
                   {"t0", a.t0},
                   {"theta", a.rotation.theta()},
                   {"trace", a.trace},
                   {"energy", a.energy}};
  return j.dump();
}

std::string elastic_to_json(const ElasticMatch& m) {
  nlohmann::json j{{"t0", m.t0},
                   {"theta", m.rotation.theta()},
                   {"gamma", m.gamma.gamma},
                   {"distance", m.distance},
                   {"iterations", m.iterations},
                   {"converged", m.converged}};
  return j.dump();
}

std::string matrix_to_csv(const std::vector<std::string>& names,
                          const std::vector<std::vector<double>>& d) {
  if (names.size() != d.size()) throw std::invalid_argument("matrix_to_csv: name count mismatch");
  std::ostringstream ss;
  ss << "id";
  for (const std::string& n : names) ss << "," << n;
  ss << "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].size() != names.size()) throw std::invalid_argument("matrix_to_csv: ragged matrix");
    ss << names[i];
    for (double v : d[i]) ss << "," << (std::isnan(v) ? std::string("nan") : fmt(v));
    ss << "\n";
  }
  return ss.str();
}

}  // namespace curvalign
