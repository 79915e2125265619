#pragma once

#include <string>
#include <vector>

#include "curvalign/curve.hpp"
#include "curvalign/elastic.hpp"
#include "curvalign/rigid_align.hpp"

namespace curvalign {

// CSV: one "x,y" pair per line, optional "x,y" header; a closing duplicate
// node is accepted on read and never written.
Curve read_curve_csv(const std::string& path);
void write_curve_csv(const std::string& path, const Curve& c);

// JSON: {"nodes": [[x, y], ...], "closed": true}
Curve read_curve_json(const std::string& path);
void write_curve_json(const std::string& path, const Curve& c);

// Dispatches on the file extension (.json -> JSON, everything else CSV).
Curve load_curve(const std::string& path);

std::string curve_to_csv(const Curve& c);
std::string curve_to_json(const Curve& c);

std::string alignment_to_json(const RigidAlignment& a);
std::string elastic_to_json(const ElasticMatch& m);

std::string matrix_to_csv(const std::vector<std::string>& names,
                          const std::vector<std::vector<double>>& d);

}  // namespace curvalign
