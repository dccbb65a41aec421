#include "eszlab/experiment.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "eszlab/parse.hpp"

namespace eszlab::experiment {

using arithapps::BipartiteGraph;
using circlegeom::CircleFamily;
using circlegeom::RationalPoint;
using exactq::Poly;
using exactq::UniPoly;
using exactq::Var;

Task task_from_name(const std::string& name) {
  if (name == "count") return Task::count;
  if (name == "construction") return Task::construction;
  if (name == "circles") return Task::circles;
  if (name == "distances") return Task::distances;
  if (name == "ap3") return Task::ap3;
  if (name == "energy") return Task::energy;
  if (name == "graph-prod") return Task::graph_prod;
  if (name == "curve-points") return Task::curve_points;
  if (name == "expander") return Task::expander;
  throw Error(errc::invalid_argument, "unknown task '" + name + "'");
}

std::string task_name(Task t) {
  switch (t) {
    case Task::count: return "count";
    case Task::construction: return "construction";
    case Task::circles: return "circles";
    case Task::distances: return "distances";
    case Task::ap3: return "ap3";
    case Task::energy: return "energy";
    case Task::graph_prod: return "graph-prod";
    case Task::curve_points: return "curve-points";
    default: return "expander";
  }
}

std::optional<double> fit_exponent(const std::vector<GrowthRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows)
    if (r.count > 0 && r.n > 0)
      pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.count.get_d()));
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

std::vector<Rational> generate_set(SplitMix64& rng, std::size_t size, long lo, long hi,
                                   long den_max) {
  if (hi < lo || den_max < 1)
    throw Error(errc::invalid_argument, "empty value range");
  if (den_max == 1 && static_cast<long>(size) > hi - lo + 1)
    throw Error(errc::range_too_small, "range holds fewer values than requested");
  std::unordered_set<Rational> seen;
  std::vector<Rational> out;
  out.reserve(size);
  std::uint64_t misses = 0;
  const std::uint64_t miss_budget = 1000 + 200 * static_cast<std::uint64_t>(size);
  while (out.size() < size) {
    const Rational cand(rng.in_range(lo, hi), rng.in_range(1, den_max));
    if (seen.insert(cand).second) {
      out.push_back(cand);
    } else if (++misses > miss_budget) {
      throw Error(errc::range_too_small, "range holds fewer values than requested");
    }
  }
  return out;
}

namespace {

RatSet random_rat_set(SplitMix64& rng, std::size_t size, const ExperimentConfig& cfg) {
  return RatSet(generate_set(rng, size, cfg.range_lo, cfg.range_hi, cfg.den_max));
}

BigInt run_one(const ExperimentConfig& cfg, long n, SplitMix64& rng) {
  switch (cfg.task) {
    case Task::construction: {
      const auto inst = eszcount::lower_bound_construction(n);
      return BigInt(static_cast<long>(count_zeros_fast(inst.f, inst.grid).count));
    }
    case Task::count: {
      const Poly f = exactq::parse_poly(cfg.poly);
      eszcount::Grid grid{random_rat_set(rng, n, cfg), random_rat_set(rng, n, cfg),
                          random_rat_set(rng, n, cfg)};
      return BigInt(static_cast<long>(count_zeros_fast(f, grid).count));
    }
    case Task::circles: {
      for (;;) {
        const RationalPoint p1{Rational(rng.in_range(-9, 9)), Rational(rng.in_range(-9, 9))};
        const RationalPoint p2{Rational(rng.in_range(-9, 9)), Rational(rng.in_range(-9, 9))};
        const RationalPoint p3{Rational(rng.in_range(-9, 9)), Rational(rng.in_range(-9, 9))};
        auto radii = [&](std::size_t count) {
          std::vector<Rational> rs;
          while (rs.size() < count) {
            const Rational r(rng.in_range(1, 400), rng.in_range(1, 4));
            rs.push_back(r);
            std::sort(rs.begin(), rs.end());
            rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
          }
          return rs;
        };
        try {
          const auto f1 = circlegeom::make_family(p1, radii(static_cast<std::size_t>(n)));
          const auto f2 = circlegeom::make_family(p2, radii(static_cast<std::size_t>(n)));
          const auto f3 = circlegeom::make_family(p3, radii(static_cast<std::size_t>(n)));
          return BigInt(static_cast<long>(circlegeom::triple_points_algebraic(f1, f2, f3)));
        } catch (const Error& e) {
          if (e.code() != errc::collinear && e.code() != errc::coincident_points) throw;
          // resample degenerate center draws
        }
      }
    }
    case Task::distances: {
      std::vector<RationalPoint> pts;
      std::set<RationalPoint> seen;
      while (pts.size() < static_cast<std::size_t>(n)) {
        RationalPoint p{Rational(rng.in_range(cfg.range_lo, cfg.range_hi)),
                        Rational(rng.in_range(cfg.range_lo, cfg.range_hi))};
        if (seen.insert(p).second) pts.push_back(p);
      }
      const RationalPoint p1{Rational(0), Rational(0)}, p2{Rational(1), Rational(0)};
      const auto d = circlegeom::pinned_distance_sets(pts, p1, p2);
      return BigInt(static_cast<long>(std::max(d.d1_sq.size(), d.d2_sq.size())));
    }
    case Task::ap3: {
      std::vector<Rational> squares;
      for (long i = 1; i <= 2 * n; ++i) squares.push_back(Rational(i * i));
      return BigInt(static_cast<long>(arithapps::ap3_count(RatSet(std::move(squares)))));
    }
    case Task::energy: {
      const auto e =
          arithapps::energy(random_rat_set(rng, n, cfg), random_rat_set(rng, n, cfg), 2.0);
      return *e.exact;
    }
    case Task::graph_prod: {
      // Nonzero ground sets with |E| = 2n random edges.
      auto nonzero_set = [&](std::size_t size) {
        std::vector<Rational> vals;
        std::unordered_set<Rational> seen;
        while (vals.size() < size) {
          const Rational cand(rng.in_range(1, std::max(4L * static_cast<long>(size), 20L)),
                              rng.in_range(1, cfg.den_max));
          if (seen.insert(cand).second) vals.push_back(cand);
        }
        return vals;
      };
      const auto a = nonzero_set(static_cast<std::size_t>(n));
      const auto b = nonzero_set(static_cast<std::size_t>(n));
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (long e = 0; e < 2 * n; ++e)
        edges.emplace_back(rng.below(a.size()), rng.below(b.size()));
      const auto graph = arithapps::make_graph(a, b, std::move(edges));
      const auto gp = arithapps::graph_products(graph, exactq::parse_rational(cfg.alpha),
                                                exactq::parse_rational(cfg.beta));
      return BigInt(static_cast<long>(std::max(gp.c.size(), gp.d.size())));
    }
    case Task::curve_points: {
      const auto curve = hyperell::make_curve(exactq::parse_curve_rhs(cfg.curve));
      return BigInt(static_cast<long>(hyperell::search_points(curve, n).size()));
    }
    case Task::expander: {
      const UniPoly h = exactq::to_unipoly(exactq::parse_poly(cfg.h), Var::x);
      const Poly g = exactq::parse_poly(cfg.g);
      const auto rep =
          arithapps::expander_image(h, g, random_rat_set(rng, n, cfg), random_rat_set(rng, n, cfg));
      return BigInt(static_cast<long>(rep.image.size()));
    }
  }
  throw Error(errc::invalid_argument, "unhandled task");
}

}  // namespace

GrowthReport run_experiment(const ExperimentConfig& config, std::ostream* csv) {
  if (config.sizes.empty())
    throw Error(errc::invalid_argument, "experiment needs at least one size");
  for (std::size_t i = 1; i < config.sizes.size(); ++i)
    if (config.sizes[i] <= config.sizes[i - 1])
      throw Error(errc::invalid_argument, "sizes must be strictly increasing");
  GrowthReport report;
  SplitMix64 rng(config.seed);
  if (csv) *csv << "N,count,elapsed_ms\n";
  for (long n : config.sizes) {
    const auto start = std::chrono::steady_clock::now();
    GrowthRow row;
    row.n = n;
    row.count = run_one(config, n, rng);
    row.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (csv) *csv << row.n << "," << row.count.get_str() << "," << row.elapsed_ms << "\n";
    report.rows.push_back(std::move(row));
  }
  report.fitted_exponent = fit_exponent(report.rows);
  return report;
}

}  // namespace eszlab::experiment
