#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eszlab/experiment.hpp"
#include "eszlab/io.hpp"
#include "eszlab/parse.hpp"

using nlohmann::json;
using namespace eszlab;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

circlegeom::RationalPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error(errc::invalid_argument, "point must be given as \"u,v\"");
  return {exactq::parse_rational(text.substr(0, comma)),
          exactq::parse_rational(text.substr(comma + 1))};
}

std::vector<long> parse_sizes(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stol(item));
  }
  if (out.empty()) throw Error(errc::invalid_argument, "no sizes given");
  return out;
}

int run_count(const std::string& poly, const std::string& a_path, const std::string& b_path,
              const std::string& c_path, const std::string& q_text, const std::string& p_text,
              bool use_oracle) {
  const auto start = Clock::now();
  const exactq::Poly f = exactq::parse_poly(poly);
  eszcount::Grid grid{io::read_rat_set(a_path), io::read_rat_set(b_path),
                      io::read_rat_set(c_path)};
  json out;
  if (use_oracle) {
    out["count"] = count_zeros_oracle(f, grid);
  } else {
    const auto fast = count_zeros_fast(f, grid);
    out["count"] = fast.count;
    out["identically_zero_pairs"] = fast.identically_zero_pairs;
  }
  out["l_f"] = eszcount::compute_lf(f, grid.a, grid.b);
  out["terms"] = nullptr;
  if (!q_text.empty() || !p_text.empty()) {
    const auto dec = eszcount::verify_decomposition(f, exactq::parse_poly(q_text),
                                                    exactq::parse_poly(p_text));
    json terms;
    try {
      const auto m = eszcount::m_set_count(dec.p, grid.a, dec.s);
      const auto t = eszcount::bound_terms(dec, grid, m,
                                           eszcount::compute_lf(f, grid.a, grid.b));
      terms = json::array({t.a_bs, t.as_b, t.m_b, t.lf_c});
      out["m_count"] = m.get_str();
      out["s"] = dec.s;
      out["rhs_without_constant"] = t.rhs_without_constant;
      out["note"] = eszcount::BoundTerms::kNote;
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      terms = nullptr;
      out["m_count"] = nullptr;
    }
    out["terms"] = terms;
  }
  out["elapsed_ms"] = ms_since(start);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zero counting on Cartesian grids, auxiliary curve search, "
               "and the circle/arithmetic applications built on it"};
  app.require_subcommand(1);

  // count
  std::string poly = "(x-y)^2 + x - z", a_path, b_path, c_path, q_text, p_text;
  bool use_oracle = false;
  auto* count = app.add_subcommand("count", "Count zeros of a trivariate polynomial on A x B x C");
  count->add_option("--poly", poly, "polynomial in x, y, z")->required();
  count->add_option("--a", a_path, "set file for A")->required();
  count->add_option("--b", b_path, "set file for B")->required();
  count->add_option("--c", c_path, "set file for C")->required();
  count->add_option("--q", q_text, "q of a decomposition f = q^2 - p (enables bound terms)");
  count->add_option("--p", p_text, "p of a decomposition f = q^2 - p");
  count->add_flag("--oracle", use_oracle, "use the exhaustive triple loop");

  // decompose
  std::string dq, dp;
  auto* decompose = app.add_subcommand("decompose", "Validate a presentation f = q^2 - p");
  decompose->add_option("--poly", poly, "polynomial f")->required();
  decompose->add_option("--q", dq, "q")->required();
  decompose->add_option("--p", dp, "p")->required();

  // mset
  std::string mp_text;
  int ms = 3;
  long pair_degree_bound = -1, a_size = -1;
  unsigned long long budget = eszcount::kDefaultTupleBudget;
  auto* mset = app.add_subcommand("mset", "Count or bound the common-root tuple set");
  mset->add_option("--p", mp_text, "p(x,y) defining the fibers");
  mset->add_option("--a", a_path, "set file for A");
  mset->add_option("--s", ms, "tuple length")->required();
  mset->add_option("--budget", budget, "enumeration budget");
  mset->add_option("--pair-degree-bound", pair_degree_bound,
                   "per-element partner bound (switches to the closed-form bound)");
  mset->add_option("--a-size", a_size, "|A| for the closed-form bound");

  // circles
  std::string config_path;
  bool rational_radii = false;
  auto* circles = app.add_subcommand("circles", "Triple points of three concentric families");
  circles->add_option("--config", config_path, "JSON config")->required();
  circles->add_flag("--rational-radii", rational_radii,
                    "use the squared-variable polynomial on radius grids");

  // distances
  std::string points_path, p1_text, p2_text;
  auto* distances = app.add_subcommand("distances", "Pinned squared-distance sets");
  distances->add_option("--points", points_path, "JSON array of [u,v]")->required();
  distances->add_option("--p1", p1_text, "first pin \"u,v\"")->required();
  distances->add_option("--p2", p2_text, "second pin \"u,v\"")->required();

  // ap3
  bool via_zeros = false;
  auto* ap3 = app.add_subcommand("ap3", "Three-term progressions in a set");
  ap3->add_option("--a", a_path, "set file")->required();
  ap3->add_flag("--via-zeros", via_zeros, "also count through the zero-set route (squares only)");

  // energy
  double l = 2.0;
  int k = 5;
  bool curve_check = false;
  auto* energy = app.add_subcommand("energy", "Additive energy E_l(A,B)");
  energy->add_option("--a", a_path, "set file for A")->required();
  energy->add_option("--b", b_path, "set file for B")->required();
  energy->add_option("--l", l, "moment order");
  energy->add_flag("--curve-check", curve_check,
                   "verify representations against Y^2 - X^k = m (squares vs k-th powers)");
  energy->add_option("--k", k, "power k for the curve check");

  // graph-prod
  std::string graph_path, alpha_text = "1", beta_text = "1";
  auto* graph_prod = app.add_subcommand("graph-prod", "Products and shifted products along a graph");
  graph_prod->add_option("--graph", graph_path, "JSON graph file")->required();
  graph_prod->add_option("--alpha", alpha_text, "shift for A");
  graph_prod->add_option("--beta", beta_text, "shift for B");

  // curve-points
  std::string curve_text;
  long height = 10;
  auto* curve_points = app.add_subcommand("curve-points", "Rational points up to a height bound");
  curve_points->add_option("--curve", curve_text, "curve \"y^2 = f(x)\"")->required();
  curve_points->add_option("--height", height, "height bound")->required();

  // expander
  std::string h_text, g_text;
  auto* expander = app.add_subcommand("expander", "Image of h(x) + g(x,y)^2 on A x B");
  expander->set_help_flag("--help", "print help and exit");  // frees -h for the option below
  expander->add_option("--h", h_text, "univariate h(x)")->required();
  expander->add_option("--g", g_text, "bivariate g(x,y)")->required();
  expander->add_option("--a", a_path, "set file for A")->required();
  expander->add_option("--b", b_path, "set file for B")->required();

  // experiment
  experiment::ExperimentConfig config;
  std::string task_text = "construction", sizes_text = "64,144,256,400", csv_path, report_path;
  auto* exp = app.add_subcommand("experiment", "Run a task over increasing sizes and fit growth");
  exp->set_help_flag("--help", "print help and exit");
  exp->add_option("--task", task_text, "task name");
  exp->add_option("--sizes", sizes_text, "comma-separated sizes");
  exp->add_option("--seed", config.seed, "generator seed");
  exp->add_option("--out", csv_path, "CSV output path");
  exp->add_option("--report", report_path, "growth report JSON path");
  exp->add_option("--poly", config.poly, "polynomial for the count task");
  exp->add_option("--curve", config.curve, "curve for the curve-points task");
  exp->add_option("--h", config.h, "h for the expander task");
  exp->add_option("--g", config.g, "g for the expander task");
  exp->add_option("--alpha", config.alpha, "shift for graph-prod");
  exp->add_option("--beta", config.beta, "shift for graph-prod");
  exp->add_option("--range-lo", config.range_lo, "set range lower end");
  exp->add_option("--range-hi", config.range_hi, "set range upper end");
  exp->add_option("--den-max", config.den_max, "denominator bound for random rationals");

  // generate
  std::string kind = "set", out_path;
  long gen_size = 10;
  std::uint64_t gen_seed = 1;
  long lo = -50, hi = 50, den_max = 1;
  auto* generate = app.add_subcommand("generate", "Write deterministic instance files");
  generate->add_option("--kind", kind, "set | construction");
  generate->add_option("--size", gen_size, "set size or construction N");
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--lo", lo, "range lower end");
  generate->add_option("--hi", hi, "range upper end");
  generate->add_option("--den-max", den_max, "denominator bound");
  generate->add_option("--out", out_path, "output file (set) or directory (construction)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed())
      return run_count(poly, a_path, b_path, c_path, q_text, p_text, use_oracle);

    if (decompose->parsed()) {
      const auto dec = eszcount::verify_decomposition(
          exactq::parse_poly(poly), exactq::parse_poly(dq), exactq::parse_poly(dp));
      json out{{"valid", true}, {"d", dec.d}, {"d_p", dec.d_p}, {"s", dec.s}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (mset->parsed()) {
      json out;
      if (pair_degree_bound >= 0) {
        if (a_size < 0)
          throw Error(errc::invalid_argument, "--a-size is required with --pair-degree-bound");
        out["m_bound"] = eszcount::m_set_bound(pair_degree_bound, a_size, ms).get_str();
      } else {
        if (mp_text.empty() || a_path.empty())
          throw Error(errc::invalid_argument, "--p and --a are required to enumerate");
        out["m_count"] = eszcount::m_set_count(exactq::parse_poly(mp_text),
                                               io::read_rat_set(a_path), ms, budget)
                             .get_str();
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (circles->parsed()) {
      const auto cfg = io::read_circle_config(config_path);
      const auto f1 = circlegeom::make_family(cfg.centers[0], cfg.radii_sq[0]);
      const auto f2 = circlegeom::make_family(cfg.centers[1], cfg.radii_sq[1]);
      const auto f3 = circlegeom::make_family(cfg.centers[2], cfg.radii_sq[2]);
      const long long geometric = circlegeom::triple_points_geometric(f1, f2, f3);
      const long long algebraic = circlegeom::triple_points_algebraic(f1, f2, f3, rational_radii);
      json out{{"geometric", geometric}, {"algebraic", algebraic},
               {"match", geometric == algebraic}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (distances->parsed()) {
      const auto pts = io::read_points_json(points_path);
      const auto d = circlegeom::pinned_distance_sets(pts, parse_point(p1_text),
                                                      parse_point(p2_text));
      json out{{"d1_size", d.d1_sq.size()}, {"d2_size", d.d2_sq.size()}, {"ratio", d.ratio}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (ap3->parsed()) {
      const auto a = io::read_rat_set(a_path);
      json out{{"ap3", arithapps::ap3_count(a)}};
      if (via_zeros) {
        const auto rep = arithapps::ap3_count_via_zeros(a);
        out["via_zeros"] = rep.via_zeros;
        out["zero_part"] = rep.zero_part;
        out["total"] = rep.total;
        out["match"] = rep.total == out["ap3"].get<long long>();
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (energy->parsed()) {
      const auto a = io::read_rat_set(a_path);
      const auto b = io::read_rat_set(b_path);
      const auto e = arithapps::energy(a, b, l);
      json out{{"l", l}, {"energy", e.value}, {"exact", e.exact.has_value()}};
      if (e.exact) out["energy_exact"] = e.exact->get_str();
      if (curve_check) {
        const auto rep = arithapps::energy_curve_check(a, b, k);
        out["max_rep"] = rep.max_rep;
        out["zero_rep"] = rep.zero_rep;
        out["difference_values"] = rep.entries.size();
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (graph_prod->parsed()) {
      const auto graph = io::read_graph_json(graph_path);
      const exactq::Rational alpha = exactq::parse_rational(alpha_text);
      const exactq::Rational beta = exactq::parse_rational(beta_text);
      const auto gp = arithapps::graph_products(graph, alpha, beta);
      const auto dec = arithapps::graph_products_decomposition(alpha, beta);
      json out{{"c_size", gp.c.size()}, {"d_size", gp.d.size()}, {"s", gp.s},
               {"ratio", gp.ratio},    {"d_p", dec.d_p},         {"s_parameter", dec.s}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (curve_points->parsed()) {
      const auto curve = hyperell::make_curve(exactq::parse_curve_rhs(curve_text));
      const auto pts = hyperell::search_points(curve, height);
      std::cout << io::curve_points_to_json(pts).dump(2) << "\n";
      return 0;
    }

    if (expander->parsed()) {
      const auto h = exactq::to_unipoly(exactq::parse_poly(h_text), exactq::Var::x);
      const auto rep = arithapps::expander_image(h, exactq::parse_poly(g_text),
                                                 io::read_rat_set(a_path),
                                                 io::read_rat_set(b_path));
      json violations = json::array();
      for (const auto& t : rep.repeated_root_violations) violations.push_back(io::to_json(t));
      json out{{"size", rep.image.size()}, {"s", rep.s}, {"ratio", rep.ratio},
               {"violations", violations}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (exp->parsed()) {
      config.task = experiment::task_from_name(task_text);
      config.sizes = parse_sizes(sizes_text);
      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw Error(errc::invalid_argument, "cannot open " + csv_path);
      }
      const auto report = experiment::run_experiment(config, csv.is_open() ? &csv : nullptr);
      json rows = json::array();
      for (const auto& r : report.rows)
        rows.push_back(
            {{"n", r.n}, {"count", r.count.get_str()}, {"elapsed_ms", r.elapsed_ms}});
      json out{{"task", experiment::task_name(config.task)},
               {"seed", config.seed},
               {"rows", rows},
               {"reference_exponents", report.reference_exponents}};
      out["fitted_exponent"] =
          report.fitted_exponent ? json(*report.fitted_exponent) : json(nullptr);
      if (!report_path.empty()) {
        std::ofstream rf(report_path);
        rf << out.dump(2) << "\n";
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (generate->parsed()) {
      SplitMix64 rng(gen_seed);
      if (kind == "set") {
        const auto values = experiment::generate_set(
            rng, static_cast<std::size_t>(gen_size), lo, hi, den_max);
        io::write_set_file(out_path, values);
      } else if (kind == "construction") {
        const auto inst = eszcount::lower_bound_construction(gen_size);
        io::write_set_file(out_path + "/a.txt", inst.grid.a.elems());
        io::write_set_file(out_path + "/b.txt", inst.grid.b.elems());
        io::write_set_file(out_path + "/c.txt", inst.grid.c.elems());
        std::ofstream pf(out_path + "/poly.txt");
        pf << inst.f.str() << "\n";
      } else {
        throw Error(errc::invalid_argument, "unknown kind '" + kind + "'");
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
