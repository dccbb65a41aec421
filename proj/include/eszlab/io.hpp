#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "eszlab/arithapps.hpp"
#include "eszlab/circlegeom.hpp"

namespace eszlab::io {

using exactq::Rational;

// One rational literal per line; blank lines and lines starting '#' ignored.
std::vector<Rational> read_set_file(const std::string& path);
void write_set_file(const std::string& path, const std::vector<Rational>& values);
eszcount::RatSet read_rat_set(const std::string& path);

nlohmann::json to_json(const Rational& r);  // "u/v", or bare-integer string
Rational rational_from_json(const nlohmann::json& j);

// {A:[...], B:[...], edges:[[i,j],...]} with rationals as strings.
arithapps::BipartiteGraph read_graph_json(const std::string& path);

struct CircleConfig {
  std::array<circlegeom::RationalPoint, 3> centers;
  std::array<std::vector<Rational>, 3> radii_sq;
};

// {centers: [[u,v] x3], radii_sq: [[...],[...],[...]]}
CircleConfig read_circle_config(const std::string& path);

// JSON array of [u, v] pairs.
std::vector<circlegeom::RationalPoint> read_points_json(const std::string& path);

nlohmann::json points_to_json(const std::vector<circlegeom::RationalPoint>& pts);
nlohmann::json curve_points_to_json(const std::vector<hyperell::CurvePoint>& pts);

}  // namespace eszlab::io
