// Copyright 2026 The mgn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgn/census/cache.hpp"
#include "mgn/census/census.hpp"
#include "mgn/corekit/prime_field.hpp"
#include "mgn/fitlab/fit.hpp"
#include "mgn/modforms/eigenform.hpp"
#include "mgn/modforms/qseries.hpp"
#include "mgn/symrep/bounds.hpp"
#include "mgn/symrep/numerology.hpp"
#include "mgn/symrep/representation.hpp"
#include "mgn/tautcalc/generator.hpp"
#include "mgn/tautcalc/hyperelliptic.hpp"
#include "mgn/tautcalc/intersection.hpp"
#include "mgn/tautcalc/stable_graph.hpp"
#include "mgn/verify/verify.hpp"

namespace {

using mgn::Rational;
using json = nlohmann::ordered_json;

constexpr const char* kCacheEnv = "MGN_CACHE_DIR";

struct Globals {
  std::string cache;
  unsigned threads = 1;
  std::string report;

  std::string cache_dir() const {
    if (!cache.empty()) return cache;
    if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
    return "mgn-cache";
  }
};

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint32_t parse_u32(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = std::stoul(s, &used);
  if (used != s.size() || v > 0xffffffffUL) throw std::invalid_argument("bad number '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

// "2..199", "5,7,11", or a mix such as "2..13,17". A path to an existing
// file is read as whitespace- or comma-separated tokens of the same kind.
std::vector<std::uint32_t> parse_primes(const std::string& spec, bool odd_only) {
  std::string text = spec;
  if (std::ifstream in(spec); in && spec.find("..") == std::string::npos) {
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::vector<std::uint32_t> out;
  for (const auto& tok : split(text, ", \t\r\n")) {
    auto dots = tok.find("..");
    if (dots != std::string::npos) {
      auto lo = parse_u32(tok.substr(0, dots));
      auto hi = parse_u32(tok.substr(dots + 2));
      for (auto p : mgn::primes_in_range(lo, hi)) out.push_back(p);
    } else {
      auto p = parse_u32(tok);
      if (!mgn::is_prime(p)) throw std::invalid_argument(tok + " is not prime");
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("no primes in '" + spec + "'");
  if (odd_only && out.front() == 2) throw std::invalid_argument("genus-2 primes must be odd");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split(text, ", ")) out.push_back(std::stoi(tok));
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_census(int g, const Globals& gl, const std::string& primes, int n_max) {
  mgn::census::CensusCache cache(gl.cache_dir());
  std::cout << mgn::census::kCacheHeader << "\n";
  for (auto p : parse_primes(primes, g == 2)) {
    auto rows = g == 1 ? cache.ensure_g1(p, n_max, gl.threads) : cache.ensure_g2(p, n_max, gl.threads);
    for (const auto& r : rows) std::cout << mgn::census::to_csv_row(r) << "\n";
  }
  return 0;
}

// "tau", "tau:1", "c16:0,c18:0".
std::vector<mgn::fitlab::CorrectionTerm> parse_corrections(const std::string& text) {
  std::vector<mgn::fitlab::CorrectionTerm> out;
  for (const auto& tok : split(text, ",")) {
    auto colon = tok.find(':');
    std::string name = tok.substr(0, colon);
    int deg = colon == std::string::npos ? 0 : std::stoi(tok.substr(colon + 1));
    out.push_back({mgn::fitlab::parse_correction(name), deg});
  }
  return out;
}

json points_json(const std::vector<mgn::fitlab::DataPoint>& pts) {
  json a = json::array();
  for (const auto& d : pts) a.push_back({{"p", d.p}, {"value", mgn::to_string(d.value)}});
  return a;
}

int run_fit(const Globals& gl, int g, int n, int degree, const std::string& corrections,
            const std::string& fit_primes, const std::string& holdout_primes) {
  mgn::census::CensusCache cache(gl.cache_dir());
  auto load = [&](const std::vector<std::uint32_t>& ps) {
    std::vector<mgn::fitlab::DataPoint> pts;
    for (auto p : ps) {
      auto rows = g == 1 ? cache.ensure_g1(p, n, gl.threads) : cache.ensure_g2(p, n, gl.threads);
      pts.push_back({p, rows.back().count});
    }
    return pts;
  };
  auto fit_pts = load(parse_primes(fit_primes, g == 2));
  std::vector<mgn::fitlab::DataPoint> hold_pts;
  if (!holdout_primes.empty()) hold_pts = load(parse_primes(holdout_primes, g == 2));

  mgn::fitlab::FitModel model{degree, corrections.empty() ? std::vector<mgn::fitlab::CorrectionTerm>{}
                                                          : parse_corrections(corrections)};
  mgn::fitlab::CorrectionTables tables;
  auto res = mgn::fitlab::fit(fit_pts, model, tables);

  json j;
  j["g"] = g;
  j["n"] = n;
  j["model"] = model.to_string();
  j["fit_points"] = points_json(fit_pts);
  j["consistent"] = res.ok();
  bool pass = res.ok();
  if (res.ok()) {
    const auto& sol = *res.solution;
    json coeffs = json::array();
    for (const auto& c : sol.polynomial.coefficients()) coeffs.push_back(mgn::to_string(c));
    j["polynomial"] = coeffs;
    json mults = json::array();
    for (std::size_t i = 0; i < sol.multipliers.size(); ++i) {
      json mc = json::array();
      for (const auto& c : sol.multipliers[i].coefficients()) mc.push_back(mgn::to_string(c));
      mults.push_back({{"correction", mgn::fitlab::to_string(model.corrections[i].id)}, {"coefficients", mc}});
    }
    j["multipliers"] = mults;
    j["monic"] = sol.monic;
    j["integral"] = sol.integral;
    if (!hold_pts.empty()) {
      auto hv = mgn::fitlab::holdout_validate(res, hold_pts, tables);
      j["holdout_points"] = points_json(hold_pts);
      j["holdout_pass"] = hv.pass;
      j["holdout_failing_primes"] = hv.failing_primes;
      pass = pass && hv.pass;
    }
  } else {
    j["certificate"] = points_json(res.certificate->points);
  }
  j["census_version"] = mgn::census::kCensusVersion;
  emit(j.dump(2) + "\n", gl.report);
  return pass ? 0 : 1;
}

int run_modforms(int weight, int order, const std::string& form) {
  mgn::modforms::QSeries series = form == "eisenstein" ? mgn::modforms::eisenstein(weight, order)
                                  : form == "delta"    ? mgn::modforms::delta(order)
                                                       : mgn::modforms::QSeries::zero(weight, 0);
  json coeffs = json::array();
  if (form == "eigenform") {
    auto t = mgn::modforms::eigenform(weight, order);
    coeffs.push_back("0");
    for (const auto& c : t.coefficients()) coeffs.push_back(c.get_str());
  } else if (form == "eisenstein" || form == "delta") {
    for (const auto& c : series.coefficients()) coeffs.push_back(mgn::to_string(c));
  } else {
    throw std::invalid_argument("unknown form '" + form + "'");
  }
  json j;
  j["weight"] = form == "delta" ? 12 : weight;
  j["order"] = order;
  j["form"] = form;
  j["coefficients"] = coeffs;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_tau(int max) {
  auto t = mgn::modforms::tau_table(max + 1);
  std::cout << "n,tau\n";
  for (int n = 1; n <= max; ++n) std::cout << n << "," << t(n).get_str() << "\n";
  return 0;
}

int run_verify(const Globals& gl, bool compute_g2, bool no_timings, const std::vector<int>& only) {
  mgn::verify::RunConfig cfg;
  cfg.cache_dir = gl.cache_dir();
  if (!gl.report.empty()) cfg.report_path = gl.report;
  cfg.threads = gl.threads;
  cfg.compute_missing_g2 = compute_g2;
  cfg.record_timings = !no_timings;
  mgn::verify::Verifier v(cfg);
  std::vector<int> ids = only;
  if (ids.empty())
    for (int id = 1; id <= mgn::verify::kCriterionCount; ++id) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) {
    const auto& r = v.run(id);
    std::cout << "criterion " << r.id << ": " << mgn::verify::to_string(r.verdict) << " (" << r.computed << ")"
              << (r.note.empty() ? "" : " [" + r.note + "]") << std::endl;
  }
  auto rep = v.report(ids);
  if (cfg.report_path) emit(rep.to_json(), cfg.report_path->string());
  std::cout << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.count(mgn::verify::Verdict::kPass) << " pass, "
            << rep.count(mgn::verify::Verdict::kFail) << " fail, " << rep.count(mgn::verify::Verdict::kSkipped)
            << " skipped\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts, tautological intersections and symmetric-group numerology for M_{g,n}"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--cache", gl.cache, std::string("census cache directory (default $") + kCacheEnv + " or mgn-cache)");
  app.add_option("--threads", gl.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--report", gl.report, "write the JSON report to this path");

  int rc = 0;

  auto* census = app.add_subcommand("census", "compute or load point-count census rows");
  census->require_subcommand(1);
  std::string g1_primes = "2..199", g2_primes = "3..29";
  int g1_n = 11, g2_n = 5;
  auto* c1 = census->add_subcommand("g1", "genus 1");
  c1->add_option("--primes", g1_primes, "primes, e.g. 2..199");
  c1->add_option("--n-max", g1_n, "largest number of markings")->check(CLI::Range(1, 11));
  c1->callback([&] { rc = run_census(1, gl, g1_primes, g1_n); });
  auto* c2 = census->add_subcommand("g2", "genus 2");
  c2->add_option("--primes", g2_primes, "odd primes, e.g. 3..29");
  c2->add_option("--n-max", g2_n, "largest number of markings")->check(CLI::Range(0, 6));
  c2->callback([&] { rc = run_census(2, gl, g2_primes, g2_n); });

  auto* fitc = app.add_subcommand("fit", "fit a polynomial plus cusp-form model to census rows");
  int fit_g = 1, fit_n = 1, fit_degree = 1;
  std::string corrections, fit_primes, holdout_primes;
  fitc->add_option("--g", fit_g, "genus")->required()->check(CLI::IsMember({1, 2}));
  fitc->add_option("--n", fit_n, "markings")->required()->check(CLI::Range(0, 11));
  fitc->add_option("--degree", fit_degree, "polynomial degree")->required()->check(CLI::Range(0, 64));
  fitc->add_option("--corrections", corrections, "e.g. tau or tau:1,c16:0");
  fitc->add_option("--fit-primes", fit_primes, "file or list of primes")->required();
  fitc->add_option("--holdout-primes", holdout_primes, "file or list of primes");
  fitc->callback([&] { rc = run_fit(gl, fit_g, fit_n, fit_degree, corrections, fit_primes, holdout_primes); });

  auto* mf = app.add_subcommand("modforms", "q-expansions of level-1 modular forms");
  int weight = 12, order = mgn::modforms::kDefaultOrder, tau_max = 200;
  std::string form = "eigenform";
  mf->add_option("--weight", weight, "weight k");
  mf->add_option("--order", order, "truncation order")->check(CLI::Range(1, 100000));
  mf->add_option("--form", form, "eigenform, eisenstein or delta")
      ->check(CLI::IsMember({"eigenform", "eisenstein", "delta"}));
  auto* tau = mf->add_subcommand("tau", "CSV of tau(n)");
  tau->add_option("--max", tau_max, "largest n")->check(CLI::Range(1, 100000));
  tau->callback([&] { rc = run_tau(tau_max); });
  mf->callback([&] {
    if (mf->get_subcommands().empty()) rc = run_modforms(weight, order, form);
  });

  auto* sr = app.add_subcommand("symrep", "symmetric-group representation numerology");
  sr->require_subcommand(1);
  int b_g = 0, b_n = 3;
  std::string space = "stable";
  auto* bounds = sr->add_subcommand("bounds", "length bounds for every codimension");
  bounds->add_option("--g", b_g, "genus")->required();
  bounds->add_option("--n", b_n, "markings")->required();
  bounds->add_option("--space", space, "stable, compact-type or rational-tails");
  bounds->callback([&] {
    auto s = mgn::symrep::parse_space(space);
    std::cout << "k,bound\n";
    for (int k = 0; k <= 3 * b_g - 3 + b_n; ++k) {
      std::cout << k << "," << mgn::symrep::theorem_bounds(b_g, b_n, k, s) << "\n";
    }
  });
  sr->add_subcommand("audit-hodge", "dimension audit of the Hodge-class list")->callback([&] {
    auto a = mgn::symrep::hodge_class_audit();
    std::cout << "(" << a.total.get_str() << ", " << a.long_part.get_str() << ")\n";
  });
  sr->add_subcommand("tilde-v", "decomposition of Ind(L^10 (x) L^10 (x) 1)")->callback([&] {
    auto d = mgn::symrep::induced_tilde_V();
    std::cout << d.to_string() << "\n" << "dimension " << d.dimension().get_str() << "\n";
  });

  auto* taut = app.add_subcommand("taut", "tautological intersection numbers");
  taut->require_subcommand(1);
  int t_g = 0, t_n = 0;
  std::string exps, psi, kappa;
  bool count_only = false;
  auto* tpsi = taut->add_subcommand("psi", "integral of psi monomials");
  tpsi->add_option("--g", t_g, "genus")->required();
  tpsi->add_option("--exps", exps, "a1,a2,...")->required();
  tpsi->callback([&] { std::cout << mgn::to_string(mgn::tautcalc::psi_integral(t_g, parse_ints(exps))) << "\n"; });
  auto* tk = taut->add_subcommand("kappa", "integral of psi and kappa monomials");
  tk->add_option("--g", t_g, "genus")->required();
  tk->add_option("--n", t_n, "markings")->required();
  tk->add_option("--psi", psi, "psi exponents, one per marking (default all 0)");
  tk->add_option("--kappa", kappa, "kappa indices b1,b2,...");
  tk->callback([&] {
    std::vector<int> a = psi.empty() ? std::vector<int>(static_cast<std::size_t>(t_n), 0) : parse_ints(psi);
    if (static_cast<int>(a.size()) != t_n) throw std::invalid_argument("--psi needs one exponent per marking");
    std::vector<int> b = kappa.empty() ? std::vector<int>{} : parse_ints(kappa);
    std::cout << mgn::to_string(mgn::tautcalc::kappa_psi_integral(t_g, a, b)) << "\n";
  });
  auto* th = taut->add_subcommand("hyperelliptic", "class of the hyperelliptic locus");
  th->add_option("--g", t_g, "genus >= 2")->required();
  th->callback([&] { std::cout << mgn::tautcalc::hyperelliptic_locus(t_g).to_string() << "\n"; });
  auto* tg = taut->add_subcommand("graphs", "stable graphs");
  tg->add_option("--g", t_g, "genus")->required();
  tg->add_option("--n", t_n, "markings")->required();
  tg->add_flag("--count", count_only, "print only the number of graphs");
  tg->callback([&] {
    auto graphs = mgn::tautcalc::enumerate_stable_graphs(t_g, t_n);
    if (count_only) {
      std::cout << graphs.size() << "\n";
      return;
    }
    for (const auto& gr : graphs) std::cout << mgn::tautcalc::DecoratedGenerator::undecorated(gr).to_string() << "\n";
  });

  auto* va = app.add_subcommand("verify-all", "run every acceptance criterion");
  bool skip_g2 = false, no_timings = false;
  std::string only;
  va->add_flag("--no-compute-g2", skip_g2, "skip genus-2 criteria whose census rows are not cached");
  va->add_flag("--no-timings", no_timings, "report zero wall times for byte-stable output");
  va->add_option("--only", only, "comma-separated criterion ids");
  va->callback([&] { rc = run_verify(gl, !skip_g2, no_timings, only.empty() ? std::vector<int>{} : parse_ints(only)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
