#include "eszlab/io.hpp"

#include <fstream>

#include "eszlab/parse.hpp"

namespace eszlab::io {

using nlohmann::json;

std::vector<Rational> read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid_argument, "cannot open " + path);
  std::vector<Rational> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;
    out.push_back(exactq::parse_rational(line));
  }
  return out;
}

void write_set_file(const std::string& path, const std::vector<Rational>& values) {
  std::ofstream out(path);
  if (!out) throw Error(errc::invalid_argument, "cannot open " + path + " for writing");
  for (const auto& v : values) out << v.str() << "\n";
}

eszcount::RatSet read_rat_set(const std::string& path) {
  return eszcount::RatSet(read_set_file(path));
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return exactq::parse_rational(j.get<std::string>());
  throw Error(errc::invalid_argument, "expected a rational as string or integer");
}

arithapps::BipartiteGraph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid_argument, "cannot open " + path);
  json j;
  in >> j;
  std::vector<Rational> a, b;
  for (const auto& v : j.at("A")) a.push_back(rational_from_json(v));
  for (const auto& v : j.at("B")) b.push_back(rational_from_json(v));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return arithapps::make_graph(std::move(a), std::move(b), std::move(edges));
}

CircleConfig read_circle_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid_argument, "cannot open " + path);
  json j;
  in >> j;
  const auto& centers = j.at("centers");
  const auto& radii = j.at("radii_sq");
  if (centers.size() != 3 || radii.size() != 3)
    throw Error(errc::invalid_argument, "config needs exactly three families");
  CircleConfig cfg;
  for (std::size_t i = 0; i < 3; ++i) {
    cfg.centers[i] = {rational_from_json(centers[i].at(0)),
                      rational_from_json(centers[i].at(1))};
    for (const auto& r : radii[i]) cfg.radii_sq[i].push_back(rational_from_json(r));
  }
  return cfg;
}

std::vector<circlegeom::RationalPoint> read_points_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid_argument, "cannot open " + path);
  json j;
  in >> j;
  std::vector<circlegeom::RationalPoint> pts;
  for (const auto& p : j)
    pts.push_back({rational_from_json(p.at(0)), rational_from_json(p.at(1))});
  return pts;
}

json points_to_json(const std::vector<circlegeom::RationalPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({to_json(p.u), to_json(p.v)});
  return arr;
}

json curve_points_to_json(const std::vector<hyperell::CurvePoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"x", to_json(p.x)}, {"y", to_json(p.y)}});
  return arr;
}

}  // namespace eszlab::io
