// liefp command line: reproduce the invariant table, brute-force minimal
// orbit dimensions, enumerate orbit-subspace varieties, query graded ideals,
// and run the named verification suites. Reports are JSON on stdout with
// sorted keys; identical inputs (seed included) give identical reports up to
// the timing_us field, regardless of --threads.
//
// Exit codes: 0 ok, 1 violation, 2 invalid input, 3 budget refusal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liefp/chevalley.hpp"
#include "liefp/fp.hpp"
#include "liefp/graded.hpp"
#include "liefp/json_io.hpp"
#include "liefp/orbits.hpp"
#include "liefp/prng.hpp"
#include "liefp/root_system.hpp"
#include "liefp/suites.hpp"

using liefp::json;

namespace {

struct Selector {
  bool custom = false;
  char family = '?';
  int rank = 0;
  std::string cartan_file;

  std::string pretty() const {
    if (custom) return "cartan:" + cartan_file;
    return std::string(1, family) + ":" + std::to_string(rank);
  }
};

std::pair<char, int> parse_family_rank(const std::string& s) {
  auto pos = s.find(':');
  if (pos != 1 || pos + 1 >= s.size())
    throw std::invalid_argument("selector must look like FAMILY:RANK, e.g. B:4");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(pos + 1), &used);
    if (used != s.size() - pos - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad rank in selector \"" + s + "\"");
  }
  return {f, rank};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

liefp::RootSystem resolve_system(const Selector& sel) {
  if (sel.custom) return liefp::build_root_system(liefp::cartan_from_json(read_json_file(sel.cartan_file)));
  return liefp::build_root_system(sel.family, sel.rank);
}

struct Reporter {
  json report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Reporter(const std::string& subcommand) {
    report["subcommand"] = subcommand;
    report["inputs"] = json::object();
    report["results"] = json::object();
    report["warnings"] = json::array();
    report["status"] = "ok";
  }

  void warn(const std::string& w) { report["warnings"].push_back(w); }

  int finish() {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["timing_us"] = static_cast<std::int64_t>(us);
    std::cout << report.dump(2) << "\n";
    std::string status = report["status"].get<std::string>();
    if (status == "ok") return 0;
    if (status == "violation") return 1;
    if (status == "refused") return 3;
    return 2;
  }
};

// ---------------------------------------------------------------------------

int cmd_u_table(const std::string& format) {
  Reporter rep("u-table");
  json rows = json::array();
  struct Cell {
    std::string name;
    long long dim, u, h, s;
  };
  std::vector<Cell> cells;
  for (const auto& row : liefp::reference_table()) {
    auto rs = liefp::build_root_system(row.family, row.rank);
    long long u = liefp::u_invariant(rs);  // asserts u = 2h'-2 = |S|+2
    Cell c{row.name, liefp::dim_g(rs), u, liefp::dual_coxeter(rs),
           static_cast<long long>(liefp::special_roots(rs).size())};
    cells.push_back(c);
    rows.push_back({{"system", c.name},
                    {"dim_g", c.dim},
                    {"u", c.u},
                    {"dual_coxeter", c.h},
                    {"num_special_roots", c.s}});
  }
  if (format == "csv") {
    std::cout << "system,dim_g,u,dual_coxeter,num_special_roots\n";
    for (const auto& c : cells)
      std::cout << c.name << "," << c.dim << "," << c.u << "," << c.h << "," << c.s << "\n";
    return 0;
  }
  if (format == "markdown") {
    auto line = [&](const std::string& head, auto field) {
      std::cout << "| " << head << " |";
      for (const auto& c : cells) std::cout << " " << field(c) << " |";
      std::cout << "\n";
    };
    std::cout << "| |";
    for (const auto& c : cells) std::cout << " " << c.name << " |";
    std::cout << "\n|---|";
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << "---|";
    std::cout << "\n";
    line("dim G", [](const Cell& c) { return c.dim; });
    line("u", [](const Cell& c) { return c.u; });
    line("dual Coxeter", [](const Cell& c) { return c.h; });
    line("special roots", [](const Cell& c) { return c.s; });
    return 0;
  }
  rep.report["inputs"]["format"] = "json";
  rep.report["results"]["rows"] = std::move(rows);
  return rep.finish();
}

int cmd_root_info(const Selector& sel, std::uint32_t p) {
  Reporter rep("root-info");
  rep.report["inputs"]["selector"] = sel.pretty();
  if (p) rep.report["inputs"]["p"] = p;
  auto rs = resolve_system(sel);
  json& res = rep.report["results"];
  res["classified"] = rs.classified;
  res["rank"] = rs.rank;
  res["dim_g"] = liefp::dim_g(rs);
  res["num_positive_roots"] = rs.positive_roots.size();
  auto theta = liefp::highest_root(rs);
  res["highest_root"] = theta.coords;
  res["two_rho"] = liefp::weyl_vector_doubled(rs);
  res["pairing_2rho_theta"] = liefp::two_rho_theta_pairing(rs);
  if (rs.classified) {
    res["family"] = std::string(1, rs.family);
    res["u"] = liefp::u_invariant(rs);
    res["dual_coxeter"] = liefp::dual_coxeter(rs);
    res["num_special_roots"] = liefp::special_roots(rs).size();
    if (p) res["nice_prime"] = liefp::is_nice_prime(rs, p);
  } else {
    res["family"] = "custom";
    rep.warn("classification-dependent fields (u, dual Coxeter, special roots, nice primes) are "
             "unsupported for custom Cartan input");
  }
  return rep.finish();
}

int cmd_brute_force(const Selector& sel, std::uint32_t p, const std::string& mode,
                    std::uint64_t samples, std::uint64_t seed, unsigned threads,
                    std::uint64_t budget) {
  Reporter rep("brute-force");
  rep.report["inputs"]["system"] = sel.pretty();
  rep.report["inputs"]["p"] = p;
  rep.report["inputs"]["mode"] = mode;
  rep.report["inputs"]["budget"] = budget;
  if (sel.custom)
    throw std::invalid_argument("brute-force needs structure constants from a classified system; "
                                "--cartan input is limited to root-info");
  auto rs = resolve_system(sel);
  auto alg = liefp::chevalley_algebra(rs);
  auto lrep = liefp::adjoint_rep(alg, p);
  for (const auto& w : lrep.warnings) rep.warn(w);
  bool nice = liefp::is_nice_prime(rs, p);
  long long target = liefp::two_rho_theta_pairing(rs);

  liefp::OrbitReport orep;
  if (mode == "exhaustive") {
    liefp::SearchOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    try {
      orep = liefp::exhaustive_min_orbit(lrep, opts);
    } catch (const liefp::budget_error& e) {
      rep.report["status"] = "refused";
      rep.report["results"]["refusal"] = e.what();
      return rep.finish();
    }
  } else if (mode == "sampled") {
    rep.report["inputs"]["samples"] = samples;
    rep.report["inputs"]["seed"] = seed;
    // the highest-root basis vector is always evaluated as a distinguished witness
    auto etheta = alg.unit(alg.e_index(liefp::highest_root(rs)));
    std::vector<std::uint32_t> v(etheta.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = liefp::fp_from_int(etheta[i], p);
    orep = liefp::sampled_min_orbit(lrep, samples, seed, {v});
  } else {
    throw std::invalid_argument("mode must be exhaustive or sampled");
  }

  rep.report["results"] = liefp::orbit_report_to_json(orep);
  rep.report["results"]["target"] = target;
  rep.report["results"]["nice_prime"] = nice;
  long long u = static_cast<long long>(orep.u);
  if (u == target) {
    // ok; in sampled mode this is an upper bound matching the expected value
  } else if (u < target) {
    if (nice)
      rep.report["status"] = "violation";
    else
      rep.warn("minimal orbit dimension " + std::to_string(u) + " differs from (2rho,theta) = " +
               std::to_string(target) + "; no identity is claimed away from nice primes");
  } else {
    if (orep.exact && nice)
      rep.report["status"] = "violation";
    else
      rep.warn("search did not reach (2rho,theta) = " + std::to_string(target));
  }
  return rep.finish();
}

int cmd_variety(const std::string& rep_spec, const std::string& rep_file, std::uint32_t p,
                unsigned threads, std::uint64_t budget) {
  Reporter rep("variety");
  rep.report["inputs"]["budget"] = budget;
  liefp::LieRep lrep;
  if (!rep_file.empty()) {
    rep.report["inputs"]["rep_file"] = rep_file;
    lrep = liefp::rep_from_json(read_json_file(rep_file));
  } else {
    rep.report["inputs"]["rep"] = rep_spec;
    rep.report["inputs"]["p"] = p;
    if (!p) throw std::invalid_argument("-p is required with --rep");
    if (rep_spec.rfind("gl:", 0) == 0) {
      lrep = liefp::gl_natural_rep(std::stoul(rep_spec.substr(3)), p);
    } else if (rep_spec.rfind("sl:", 0) == 0) {
      lrep = liefp::sl_natural_rep(std::stoul(rep_spec.substr(3)), p);
    } else if (rep_spec.rfind("adjoint:", 0) == 0) {
      auto [f, r] = parse_family_rank(rep_spec.substr(8));
      auto alg = liefp::chevalley_algebra(liefp::build_root_system(f, r));
      lrep = liefp::adjoint_rep(alg, p);
    } else {
      throw std::invalid_argument("--rep must be gl:N, sl:N, or adjoint:FAMILY:RANK");
    }
  }
  for (const auto& w : lrep.warnings) rep.warn(w);
  liefp::SearchOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  try {
    auto fam = liefp::orbit_subspace_family(lrep, opts);
    rep.report["results"] = liefp::family_to_json(fam);
    rep.report["results"]["label"] = lrep.label;
  } catch (const liefp::budget_error& e) {
    rep.report["status"] = "refused";
    rep.report["results"]["refusal"] = e.what();
  }
  return rep.finish();
}

int cmd_graded(const std::string& op, const std::string& ideal_file, std::uint32_t p,
               std::uint32_t nvars, const std::string& poly_text, const std::string& phi_file,
               const std::string& window, std::uint64_t degree_bound, std::uint64_t budget) {
  Reporter rep("graded");
  rep.report["inputs"]["op"] = op;
  rep.report["inputs"]["ideal"] = ideal_file;
  rep.report["inputs"]["p"] = p;
  rep.report["inputs"]["vars"] = nvars;
  rep.report["inputs"]["budget"] = budget;
  auto ideal = liefp::ideal_from_json(read_json_file(ideal_file), p, nvars);
  rep.report["results"]["generators"] = liefp::ideal_to_json(ideal);
  try {
    if (op == "membership") {
      if (poly_text.empty()) throw std::invalid_argument("membership needs --poly");
      rep.report["inputs"]["poly"] = poly_text;
      rep.report["results"]["member"] =
          liefp::ideal_contains(ideal, liefp::parse_poly(poly_text, nvars, p), budget);
    } else if (op == "closure") {
      if (poly_text.empty()) throw std::invalid_argument("closure needs --poly");
      rep.report["inputs"]["poly"] = poly_text;
      rep.report["inputs"]["window"] = window;
      auto colon = window.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--window must look like r0:r1, e.g. 1:4");
      std::uint32_t r0 = std::stoul(window.substr(0, colon));
      std::uint32_t r1 = std::stoul(window.substr(colon + 1));
      std::vector<liefp::FpMatrix> phis;
      if (phi_file.empty()) {
        phis.push_back(liefp::FpMatrix::identity(nvars, p));
      } else {
        rep.report["inputs"]["phi_file"] = phi_file;
        for (const auto& jm : read_json_file(phi_file))
          phis.push_back(liefp::matrix_from_json(jm, p));
      }
      rep.report["results"]["closed_in_window"] = liefp::window_closure_test(
          ideal, liefp::parse_poly(poly_text, nvars, p), phis, r0, r1, budget);
      rep.warn("windowed check: approximates the all-large-shifts condition on [" +
               std::to_string(r0) + ", " + std::to_string(r1) + "] only");
    } else if (op == "stability") {
      rep.report["results"]["derivation_stable"] = liefp::derivation_stable(ideal, budget);
    } else if (op == "control") {
      rep.report["inputs"]["degree_bound"] = degree_bound;
      rep.report["results"]["controlled"] = liefp::control_check(ideal, degree_bound, budget);
      rep.warn("truncated verification: degrees up to " + std::to_string(degree_bound) + " only");
    } else {
      throw std::invalid_argument("op must be membership, closure, stability, or control");
    }
  } catch (const liefp::budget_error& e) {
    rep.report["status"] = "refused";
    rep.report["results"]["refusal"] = e.what();
  }
  return rep.finish();
}

int cmd_verify(const std::string& suite, bool full, std::uint64_t seed) {
  Reporter rep("verify");
  rep.report["inputs"]["suite"] = suite;
  rep.report["inputs"]["seed"] = seed;
  if (full) rep.report["inputs"]["full"] = true;
  std::vector<std::string> names;
  if (suite == "all")
    names = {"jacobi", "table", "adtheta", "derhyp", "graded"};
  else if (suite == "jacobi" || suite == "table" || suite == "adtheta" || suite == "derhyp" ||
           suite == "graded")
    names = {suite};
  else
    throw std::invalid_argument("suite must be one of jacobi, table, adtheta, derhyp, graded, all");
  bool violated = false;
  for (const auto& name : names) {
    liefp::SuiteOutcome out;
    if (name == "jacobi") out = liefp::suite_jacobi(full);
    if (name == "table") out = liefp::suite_table();
    if (name == "adtheta") out = liefp::suite_adtheta();
    if (name == "derhyp") out = liefp::suite_derhyp(seed);
    if (name == "graded") out = liefp::suite_graded(seed);
    json js = out.details;
    js["checks"] = out.checks;
    js["failures"] = out.failures;
    rep.report["results"][name] = std::move(js);
    violated = violated || !out.failures.empty();
  }
  if (violated) rep.report["status"] = "violation";
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimal-orbit and graded-ideal computations for Chevalley Lie algebras"};
  app.require_subcommand(1);

  std::string system_sel, type_sel, cartan_file, rep_spec, rep_file, mode = "exhaustive";
  std::string format = "json", suite, graded_op, ideal_file, poly_text, phi_file, window = "1:4";
  int r_rank = 0;
  std::uint32_t prime = 0, nvars = 0;
  std::uint64_t samples = 1000000, seed = 0, budget = liefp::kDefaultBudget;
  std::uint64_t graded_budget = liefp::kDefaultDegreeBudget, degree_bound = 10;
  unsigned threads = 1;
  bool full = false;

  auto add_selector = [&](CLI::App* cmd, bool with_cartan) {
    cmd->add_option("--system", system_sel, "system selector FAMILY:RANK, e.g. B:4");
    cmd->add_option("--type", type_sel, "family letter A..G (with --rank)");
    cmd->add_option("--rank", r_rank, "rank (with --type)");
    if (with_cartan) cmd->add_option("--cartan", cartan_file, "JSON file with a Cartan matrix");
  };

  auto* ut = app.add_subcommand("u-table", "the invariant table over every supported system");
  ut->add_option("--format", format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));

  auto* ri = app.add_subcommand("root-info", "root data for one system or a custom Cartan matrix");
  add_selector(ri, true);
  ri->add_option("-p,--prime", prime, "report nice-prime status for this p");

  auto* bf = app.add_subcommand("brute-force", "minimal adjoint orbit dimension over F_p");
  add_selector(bf, true);
  bf->add_option("-p,--prime", prime, "odd prime")->required();
  bf->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  bf->add_option("--samples", samples, "sample count in sampled mode");
  bf->add_option("--seed", seed, "PRNG seed in sampled mode");
  bf->add_option("--threads", threads, "worker threads (never affects results)");
  bf->add_option("--budget", budget, "projective point budget for exhaustive mode");

  auto* va = app.add_subcommand("variety", "orbit-subspace family of a representation");
  va->add_option("--rep", rep_spec, "gl:N, sl:N, or adjoint:FAMILY:RANK");
  va->add_option("--rep-file", rep_file, "JSON file with a custom representation");
  va->add_option("--cartan", cartan_file, "unsupported here; use root-info");
  va->add_option("-p,--prime", prime, "odd prime (with --rep)");
  va->add_option("--threads", threads, "worker threads (never affects results)");
  va->add_option("--budget", budget, "projective point budget");

  auto* gr = app.add_subcommand("graded", "homogeneous-ideal queries over F_p");
  gr->add_option("--op", graded_op, "membership, closure, stability, or control")->required();
  gr->add_option("--ideal", ideal_file, "JSON array of polynomial strings")->required();
  gr->add_option("-p,--prime", prime, "odd prime")->required();
  gr->add_option("--vars", nvars, "number of variables")->required();
  gr->add_option("--poly", poly_text, "polynomial argument, e.g. \"1*v1^2+2*v2\"");
  gr->add_option("--phi", phi_file, "JSON array of matrices for closure (default: identity)");
  gr->add_option("--window", window, "shift window r0:r1 for closure");
  gr->add_option("--degree-bound", degree_bound, "degree cutoff for control");
  gr->add_option("--budget", graded_budget, "monomials-per-degree budget");

  auto* ve = app.add_subcommand("verify", "run a named invariant suite");
  ve->add_option("suite", suite, "jacobi, table, adtheta, derhyp, graded, or all")->required();
  ve->add_flag("--full", full, "include E6, E7, E8 in the jacobi suite");
  ve->add_option("--seed", seed, "seed for the randomized suites");

  CLI11_PARSE(app, argc, argv);

  try {
    Selector sel;
    if (!cartan_file.empty()) {
      sel.custom = true;
      sel.cartan_file = cartan_file;
      if (!system_sel.empty() || !type_sel.empty())
        throw std::invalid_argument("give either --cartan or a family selector, not both");
    } else if (!system_sel.empty()) {
      auto [f, r] = parse_family_rank(system_sel);
      sel.family = f;
      sel.rank = r;
    } else if (!type_sel.empty()) {
      if (type_sel.size() != 1) throw std::invalid_argument("--type wants a single letter A..G");
      sel.family = static_cast<char>(std::toupper(static_cast<unsigned char>(type_sel[0])));
      sel.rank = r_rank;
    }

    if (ut->parsed()) return cmd_u_table(format);
    if (ri->parsed()) {
      if (!sel.custom && sel.family == '?')
        throw std::invalid_argument("root-info needs --system, --type/--rank, or --cartan");
      return cmd_root_info(sel, prime);
    }
    if (bf->parsed()) {
      if (!sel.custom && sel.family == '?')
        throw std::invalid_argument("brute-force needs --system or --type/--rank");
      return cmd_brute_force(sel, prime, mode, samples, seed, threads, budget);
    }
    if (va->parsed()) {
      if (!cartan_file.empty())
        throw std::invalid_argument("variety needs structure constants from a classified system; "
                                    "--cartan input is limited to root-info");
      if (rep_spec.empty() == rep_file.empty())
        throw std::invalid_argument("variety needs exactly one of --rep or --rep-file");
      return cmd_variety(rep_spec, rep_file, prime, threads, budget);
    }
    if (gr->parsed())
      return cmd_graded(graded_op, ideal_file, prime, nvars, poly_text, phi_file, window,
                        degree_bound, graded_budget);
    if (ve->parsed()) return cmd_verify(suite, full, seed);
  } catch (const liefp::budget_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const liefp::invariant_violation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
