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

#include "mgn/verify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mgn/census/cache.hpp"
#include "mgn/census/census.hpp"
#include "mgn/census/oracle.hpp"
#include "mgn/corekit/bernoulli.hpp"
#include "mgn/corekit/prime_field.hpp"
#include "mgn/fitlab/fit.hpp"
#include "mgn/modforms/eigenform.hpp"
#include "mgn/modforms/qseries.hpp"
#include "mgn/symrep/characters.hpp"
#include "mgn/symrep/numerology.hpp"
#include "mgn/symrep/representation.hpp"
#include "mgn/tautcalc/generator.hpp"
#include "mgn/tautcalc/hyperelliptic.hpp"
#include "mgn/tautcalc/intersection.hpp"
#include "mgn/tautcalc/length.hpp"

namespace mgn::verify {

namespace {

using census::CensusRecord;

struct Outcome {
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::kFail;
  std::string note;
};

Outcome check(bool ok, std::string expected, std::string computed, std::string note = {}) {
  return {std::move(expected), std::move(computed), ok ? Verdict::kPass : Verdict::kFail, std::move(note)};
}

Outcome cache_miss(std::string expected, const std::string& what) {
  return {std::move(expected), "", Verdict::kSkipped, "skipped: cache miss (" + what + ")"};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

std::string str(const Rational& r) { return mgn::to_string(r); }
std::string str(const Integer& z) { return z.get_str(); }

// All a in Z_{>=0}^n with sum a = total.
void for_each_composition(int n, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      a[static_cast<std::size_t>(i)] = left;
      visit(a);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
}

const char* kStatements[kCriterionCount] = {
    "#M_{1,1}(F_p) = p for all primes p <= 199 (char 2/3 long form, short form elsewhere)",
    "#M_{1,6}(F_2) = 0",
    "for n <= 10 the genus-1 counts over n+1 primes fit a monic integral polynomial of degree n that "
    "holdout-validates on 3 further primes <= 100",
    "n = 11: a pure degree-11 model is inconsistent over 13 primes; f_11(p) - tau(p) fits and "
    "holdout-validates on 3 primes",
    "Delta by product equals (E4^3 - E6^2)/1728 to the truncation order; tau(n) = sigma_11(n) mod 691",
    "eigenforms of weight 12, 16, 18 are multiplicative and satisfy a(p^2) = a(p)^2 - p^(k-1) for p <= 13",
    "dim [2^7] = 429 and dim [2 1^12] = 13",
    "induced tilde V equals the listed decomposition with total dimension 3879876",
    "Hodge-class audit returns (1939938, 1058148)",
    "length additivity of Littlewood-Richardson products for n1 + n2 <= 9 against the character oracle",
    "genus-0 psi integrals equal (n-3)!/prod a_i! for n <= 10, and <tau_1>_1 = 1/24",
    "kappa_1 on M_{1,1} integrates to 1/24; lambda_1^3 on M_2 integrates to 1/2880",
    "hyperelliptic_locus(2) = 1 and hyperelliptic_locus(3) = (7 kappa_1 - 12 lambda_1)/8",
    "genus-2 counts for n <= 4 fit an integral polynomial of degree n+3 with exact holdout at the largest "
    "prime, after the orbit oracle matches the groupoid count",
    "M_{2,10} and M_{2,14} fits are out of reach; substitute acceptance is criteria 5, 6, 7 and 14",
    "every decorated generator with g <= 2, n <= 6 has length at most the theorem bound",
    "genus-1 census rows for p <= 31 are identical for every tested thread count",
};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "fail";
}

void RunConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("RunConfig: " + what);
  };
  require(threads >= 1, "threads must be >= 1");
  require(modforms_order >= 1, "modforms order must be >= 1");
  require(g1_prime_max >= 2 && g1_prime_max <= kMaxFieldPrime, "g1 prime bound out of range");
  require(g1_n_max >= 1 && g1_n_max <= 11, "g1 n_max must be in [1, 11]");
  require(g2_n_max >= 0 && g2_n_max <= 6, "g2 n_max must be in [0, 6]");
  require(length_g_max >= 0 && length_n_max >= 0, "length scope must be nonnegative");
  require(additivity_max_total >= 2, "additivity bound must be >= 2");
  require(psi_genus0_n_max >= 3, "psi genus-0 bound must be >= 3");
  require(!determinism_threads.empty(), "determinism thread list is empty");
  for (unsigned t : determinism_threads) require(t >= 1, "determinism thread counts must be >= 1");
  auto primes = [&](const std::vector<std::uint32_t>& ps, bool odd, const std::string& name) {
    require(!ps.empty(), name + " is empty");
    for (auto p : ps) {
      require(is_prime(p), name + " contains non-prime " + std::to_string(p));
      require(!odd || p > 2, name + " must be odd primes");
    }
    require(std::adjacent_find(ps.begin(), ps.end(), std::greater_equal<>()) == ps.end(),
            name + " must be strictly increasing");
  };
  primes(g1_fit_primes_n11, false, "g1 fit primes");
  primes(g1_holdout_primes_n11, false, "g1 holdout primes");
  primes(g2_fit_primes, true, "g2 fit primes");
  primes(g2_holdout_primes, true, "g2 holdout primes");
  require(is_prime(g2_oracle_prime) && g2_oracle_prime >= 3 && g2_oracle_prime <= 7,
          "g2 oracle prime must be 3, 5 or 7");
  for (auto p : g1_fit_primes_n11) require(p <= g1_prime_max, "g1 fit prime above g1 prime bound");
  for (auto p : g1_holdout_primes_n11) require(p <= g1_prime_max, "g1 holdout prime above g1 prime bound");
  require(determinism_prime_max >= 2, "determinism prime bound must be >= 2");
  std::error_code ec;
  if (std::filesystem::exists(cache_dir, ec)) {
    require(std::filesystem::is_directory(cache_dir, ec), "cache path is not a directory");
  }
}

bool VerificationReport::passed() const { return count(Verdict::kFail) == 0; }

int VerificationReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(criteria.begin(), criteria.end(),
                                        [&](const CriterionResult& c) { return c.verdict == v; }));
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["passed"] = passed();
  j["summary"] = {{"pass", count(Verdict::kPass)},
                  {"fail", count(Verdict::kFail)},
                  {"skipped", count(Verdict::kSkipped)}};
  nlohmann::ordered_json versions = nlohmann::ordered_json::object();
  for (const auto& [k, v] : data_versions) versions[k] = v;
  j["data_versions"] = versions;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["verdict"] = to_string(c.verdict);
    e["note"] = c.note;
    e["seconds"] = c.seconds;
    list.push_back(std::move(e));
  }
  j["criteria"] = std::move(list);
  return j.dump(indent) + "\n";
}

std::map<std::string, std::string> data_versions(const RunConfig& config) {
  std::ostringstream checksum;
  checksum << std::hex << symrep::kHodgeListChecksum;
  return {
      {"census", census::kCensusVersion},
      {"hodge_list_fnv1a64", checksum.str()},
      {"modforms_order", std::to_string(config.modforms_order)},
  };
}

struct Verifier::State {
  explicit State(const RunConfig& c) : config(c) {}

  census::CensusCache& cache() {
    if (!cache_) cache_ = std::make_unique<census::CensusCache>(config.cache_dir);
    return *cache_;
  }
  const fitlab::CorrectionTables& tables() {
    if (!tables_) tables_ = std::make_unique<fitlab::CorrectionTables>(config.modforms_order);
    return *tables_;
  }

  // Rows n = lo..hi for genus g at p, computing and persisting them on a
  // miss when allowed.
  std::optional<std::vector<CensusRecord>> rows(int g, std::uint32_t p, int lo, int hi) {
    auto& c = cache();
    if (!c.has_range(g, p, lo, hi)) {
      bool allowed = g == 1 ? config.compute_missing_g1 : config.compute_missing_g2;
      if (!allowed) return std::nullopt;
      if (g == 1) {
        c.ensure_g1(p, std::max(hi, config.g1_n_max), config.threads);
      } else {
        c.ensure_g2(p, std::max(hi, config.g2_n_max), config.threads);
      }
    }
    std::vector<CensusRecord> out;
    for (int n = lo; n <= hi; ++n) out.push_back(*c.find(g, n, p));
    return out;
  }

  std::optional<std::vector<fitlab::DataPoint>> points(int g, int n, const std::vector<std::uint32_t>& ps,
                                                       std::string* missing) {
    std::vector<fitlab::DataPoint> out;
    for (auto p : ps) {
      auto r = rows(g, p, n, n);
      if (!r) {
        *missing = "g=" + std::to_string(g) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        return std::nullopt;
      }
      out.push_back({p, r->front().count});
    }
    return out;
  }

  const RunConfig& config;
  std::unique_ptr<census::CensusCache> cache_;
  std::unique_ptr<fitlab::CorrectionTables> tables_;
};

Verifier::Verifier(RunConfig config) : config_(std::move(config)) {
  config_.validate();
  state_ = std::make_unique<State>(config_);
}

Verifier::~Verifier() = default;

const CriterionResult& Verifier::run(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id " + std::to_string(id));
  if (auto it = done_.find(id); it != done_.end()) return it->second;
  auto start = std::chrono::steady_clock::now();
  CriterionResult r = evaluate(id);
  r.seconds = config_.record_timings
                  ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                  : 0.0;
  return done_.emplace(id, std::move(r)).first->second;
}

VerificationReport Verifier::report() {
  std::vector<int> ids(kCriterionCount);
  std::iota(ids.begin(), ids.end(), 1);
  return report(std::move(ids));
}

VerificationReport Verifier::report(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VerificationReport rep;
  rep.data_versions = data_versions(config_);
  for (int id : ids) rep.criteria.push_back(run(id));
  return rep;
}

CriterionResult Verifier::evaluate(int id) {
  State& s = *state_;
  const RunConfig& cfg = config_;
  Outcome o;

  switch (id) {
    case 1: {
      std::vector<std::string> bad;
      auto ps = primes_in_range(2, cfg.g1_prime_max);
      bool missing = false;
      std::string what;
      for (auto p : ps) {
        auto r = s.rows(1, p, 1, 1);
        if (!r) {
          missing = true;
          what = "g=1 n=1 p=" + std::to_string(p);
          break;
        }
        const auto& rec = r->front();
        std::string want = p <= 3 ? census::kMethodG1Long : census::kMethodG1Short;
        if (rec.count != p || rec.method != want) bad.push_back(std::to_string(p) + ":" + str(rec.count));
      }
      std::string expected = "p for " + std::to_string(ps.size()) + " primes";
      if (missing) {
        o = cache_miss(expected, what);
        break;
      }
      // The long form must agree with the short form where both apply.
      for (std::uint32_t p : {5u, 7u}) {
        auto h = census::g1_histogram(p, census::G1Model::kLong, 1);
        Rational c = census::g1_count_from_histogram(h, 1);
        if (c != p) bad.push_back("long-form " + std::to_string(p) + ":" + str(c));
      }
      o = check(bad.empty(), expected, bad.empty() ? expected : "mismatches " + join(bad, " "),
                "long-form cross-check at p = 5, 7");
      break;
    }
    case 2: {
      auto r = s.rows(1, 2, 6, 6);
      if (!r) {
        o = cache_miss("0", "g=1 n=6 p=2");
        break;
      }
      o = check(r->front().count == 0, "0", str(r->front().count));
      break;
    }
    case 3: {
      auto ps = primes_in_range(2, 100);
      std::vector<std::string> fits, bad;
      int n_top = std::min(10, cfg.g1_n_max);
      std::string missing;
      bool skipped = false;
      for (int n = 1; n <= n_top && !skipped; ++n) {
        std::vector<std::uint32_t> fit_ps(ps.begin(), ps.begin() + n + 1);
        std::vector<std::uint32_t> hold_ps(ps.begin() + n + 1, ps.begin() + n + 4);
        auto fp = s.points(1, n, fit_ps, &missing);
        auto hp = fp ? s.points(1, n, hold_ps, &missing) : std::nullopt;
        if (!fp || !hp) {
          skipped = true;
          break;
        }
        fitlab::FitModel model{n, {}};
        try {
          auto res = fitlab::fit(*fp, model, s.tables());
          if (!res.ok()) {
            bad.push_back("n=" + std::to_string(n) + " inconsistent");
            continue;
          }
          auto hv = fitlab::holdout_validate(res, *hp, s.tables());
          const auto& sol = *res.solution;
          fits.push_back("f_" + std::to_string(n) + " = " + sol.polynomial.to_string("p"));
          if (sol.polynomial.degree() != n || !sol.monic || !sol.integral || !hv.pass) {
            bad.push_back("n=" + std::to_string(n) + (sol.monic ? "" : " not monic") +
                          (sol.integral ? "" : " not integral") +
                          (sol.polynomial.degree() == n ? "" : " wrong degree") +
                          (hv.pass ? "" : " holdout fails at " + join_numbers(hv.failing_primes)));
          }
        } catch (const std::exception& e) {
          bad.push_back("n=" + std::to_string(n) + " " + e.what());
        }
      }
      std::string expected = "monic integral degree-n fits with exact holdout for n = 1.." + std::to_string(n_top);
      if (skipped) {
        o = cache_miss(expected, missing);
        break;
      }
      o = check(bad.empty(), expected, bad.empty() ? join(fits, "; ") : join(bad, "; "));
      if (n_top < 10) {
        o.verdict = Verdict::kSkipped;
        o.note = "skipped: n_max below 10";
      }
      break;
    }
    case 4: {
      std::string missing;
      std::string expected = "pure model inconsistent; f_11 - tau fits, multiplier -1, holdout exact";
      if (cfg.g1_n_max < 11) {
        o = {expected, "", Verdict::kSkipped, "skipped: n_max below 11"};
        break;
      }
      auto fp = s.points(1, 11, cfg.g1_fit_primes_n11, &missing);
      auto hp = fp ? s.points(1, 11, cfg.g1_holdout_primes_n11, &missing) : std::nullopt;
      if (!fp || !hp) {
        o = cache_miss(expected, missing);
        break;
      }
      std::vector<std::string> bad, notes;
      fitlab::FitModel pure{11, {}};
      auto a = fitlab::fit(*fp, pure, s.tables());
      if (a.ok()) {
        bad.push_back("pure degree-11 model fits");
      } else {
        std::vector<std::uint32_t> cert;
        for (const auto& d : a.certificate->points) cert.push_back(d.p);
        notes.push_back("certificate primes " + join_numbers(cert));
      }
      fitlab::FitModel corrected{11, {{fitlab::Correction::kTau, 0}}};
      auto b = fitlab::fit(*fp, corrected, s.tables());
      std::string computed;
      if (!b.ok()) {
        bad.push_back("corrected model inconsistent");
      } else {
        const auto& sol = *b.solution;
        auto hv = fitlab::holdout_validate(b, *hp, s.tables());
        Rational mult = sol.multipliers.front().coefficient(0);
        computed = "f_11 = " + sol.polynomial.to_string("p") + "; tau multiplier " + str(mult);
        if (mult != -1) bad.push_back("tau multiplier " + str(mult));
        if (!hv.pass) bad.push_back("holdout fails at " + join_numbers(hv.failing_primes));
        notes.push_back(std::string("f_11 monic=") + (sol.monic ? "yes" : "no") +
                        " integral=" + (sol.integral ? "yes" : "no"));
      }
      o = check(bad.empty(), expected, bad.empty() ? computed : join(bad, "; "), join(notes, "; "));
      break;
    }
    case 5: {
      int order = cfg.modforms_order;
      auto d = modforms::delta(order);
      bool same = d == modforms::delta_from_eisenstein(order);
      std::vector<std::string> bad;
      for (int n = 1; n < order; ++n) {
        Integer tau = d[n].get_num();
        Integer diff = tau - modforms::divisor_sigma(11, static_cast<std::uint64_t>(n));
        if (d[n].get_den() != 1 || diff % 691 != 0) bad.push_back(std::to_string(n));
      }
      o = check(same && bad.empty(), "identical series; no congruence failures",
                std::string(same ? "identical series" : "series differ") + "; " +
                    (bad.empty() ? "no congruence failures" : "congruence fails at " + join(bad, ",")),
                "order " + std::to_string(order));
      break;
    }
    case 6: {
      std::vector<std::string> bad;
      int checked = 0;
      for (int k : {12, 16, 18}) {
        auto t = modforms::eigenform(k, cfg.modforms_order);
        int top = t.max_index();
        for (int m = 2; m <= top; ++m) {
          for (int n = m + 1; m * n <= top; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++checked;
            if (t(m * n) != t(m) * t(n)) bad.push_back("k=" + std::to_string(k) + " a(" + std::to_string(m * n) + ")");
          }
        }
        for (auto p : primes_in_range(2, 13)) {
          int pp = static_cast<int>(p * p);
          if (pp > top) continue;
          ++checked;
          Integer pk;
          mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k - 1));
          if (t(pp) != t(static_cast<int>(p)) * t(static_cast<int>(p)) - pk) {
            bad.push_back("k=" + std::to_string(k) + " a(" + std::to_string(pp) + ")");
          }
        }
      }
      o = check(bad.empty(), "no relation failures",
                bad.empty() ? std::to_string(checked) + " relations hold" : "failures " + join(bad, ","));
      break;
    }
    case 7: {
      Integer a = symrep::dim_irrep(symrep::parse_partition("[2^7]"));
      Integer b = symrep::dim_irrep(symrep::parse_partition("[2 1^12]"));
      o = check(a == 429 && b == 13, "429, 13", str(a) + ", " + str(b));
      break;
    }
    case 8: {
      auto got = symrep::induced_tilde_V();
      auto want = symrep::expected_tilde_V();
      Integer dim = got.dimension();
      Integer index = factorial(21) / (factorial(10) * factorial(10));
      bool ok = got == want && dim == 3879876 && index == 3879876;
      o = check(ok, "listed decomposition, dimension 3879876",
                std::string(got == want ? "listed decomposition" : "differs: " + got.to_string()) +
                    ", dimension " + str(dim),
                "index of S10 x S10 x S1 in S21 is " + str(index));
      break;
    }
    case 9: {
      auto a = symrep::hodge_class_audit();
      bool ok = a.checksum_ok && a.total == 1939938 && a.long_part == 1058148;
      o = check(ok, "(1939938, 1058148)", "(" + str(a.total) + ", " + str(a.long_part) + ")");
      break;
    }
    case 10: {
      int pairs = 0, lr = 0, len = 0;
      int top = cfg.additivity_max_total;
      for (int n1 = 1; n1 < top; ++n1) {
        for (int n2 = 1; n1 + n2 <= top; ++n2) {
          auto v = symrep::verify_length_additivity(n1, n2, top);
          pairs += v.pairs_checked;
          lr += v.lr_mismatches;
          len += v.length_failures;
        }
      }
      o = check(lr == 0 && len == 0, "0 LR mismatches, 0 length failures",
                std::to_string(lr) + " LR mismatches, " + std::to_string(len) + " length failures",
                std::to_string(pairs) + " pairs, n1 + n2 <= " + std::to_string(top));
      break;
    }
    case 11: {
      long vectors = 0;
      std::vector<std::string> bad;
      for (int n = 3; n <= cfg.psi_genus0_n_max; ++n) {
        for_each_composition(n, n - 3, [&](const std::vector<int>& a) {
          ++vectors;
          if (tautcalc::psi_integral(0, a) != tautcalc::genus0_multinomial(a) && bad.size() < 5) {
            bad.push_back(join_numbers(a));
          }
        });
      }
      Rational t1 = tautcalc::psi_integral(1, {1});
      bool ok = bad.empty() && t1 == make_rational(1, 24);
      o = check(ok, "all genus-0 vectors agree; 1/24",
                (bad.empty() ? "all genus-0 vectors agree" : "mismatch at " + join(bad, " ")) + "; " + str(t1),
                std::to_string(vectors) + " exponent vectors");
      break;
    }
    case 12: {
      Rational k = tautcalc::kappa_psi_integral(1, {0}, {1});
      Rational l = tautcalc::hodge_lambda_cubed(2);
      Rational b4 = abs(bernoulli(4)), b2 = abs(bernoulli(2));
      Rational hand = b4 / 4 * b2 / 2 / 2;
      bool ok = k == make_rational(1, 24) && l == make_rational(1, 2880) && l == hand;
      o = check(ok, "1/24, 1/2880", str(k) + ", " + str(l), "Bernoulli evaluation gives " + str(hand));
      break;
    }
    case 13: {
      auto h2 = tautcalc::hyperelliptic_locus(2);
      auto h3 = tautcalc::hyperelliptic_locus(3);
      tautcalc::ClassPolynomial one{{tautcalc::ClassMonomial{}, Rational(1)}};
      tautcalc::ClassPolynomial want3{{tautcalc::kappa_class(1), make_rational(7, 8)},
                                      {tautcalc::lambda_class(1), make_rational(-12, 8)}};
      o = check(h2 == one && h3 == want3, one.to_string() + "; " + want3.to_string(),
                h2.to_string() + "; " + h3.to_string());
      break;
    }
    case 14: {
      std::string expected = "oracle = groupoid; integral degree-(n+3) fits with exact holdout for n = 0.." +
                             std::to_string(cfg.g2_n_max);
      auto base = s.rows(2, cfg.g2_oracle_prime, 0, 0);
      if (!base) {
        o = cache_miss(expected, "g=2 n=0 p=" + std::to_string(cfg.g2_oracle_prime));
        break;
      }
      auto orbit = census::g2_orbit_count(cfg.g2_oracle_prime);
      std::string oracle = "orbit oracle at p=" + std::to_string(cfg.g2_oracle_prime) + ": " +
                           str(orbit.groupoid) + " over " + std::to_string(orbit.classes) + " classes";
      if (orbit.groupoid != base->front().count) {
        o = check(false, expected, oracle + " vs census " + str(base->front().count), "oracle disagrees; fits not run");
        break;
      }
      std::vector<std::string> fits, bad;
      std::string missing;
      bool skipped = false;
      for (int n = 0; n <= cfg.g2_n_max; ++n) {
        auto fp = s.points(2, n, cfg.g2_fit_primes, &missing);
        auto hp = fp ? s.points(2, n, cfg.g2_holdout_primes, &missing) : std::nullopt;
        if (!fp || !hp) {
          skipped = true;
          break;
        }
        try {
          auto res = fitlab::fit(*fp, fitlab::FitModel{n + 3, {}}, s.tables());
          if (!res.ok()) {
            bad.push_back("n=" + std::to_string(n) + " inconsistent");
            continue;
          }
          auto hv = fitlab::holdout_validate(res, *hp, s.tables());
          const auto& sol = *res.solution;
          fits.push_back("n=" + std::to_string(n) + ": " + sol.polynomial.to_string("p"));
          if (!sol.integral || sol.polynomial.degree() > n + 3 || !hv.pass) {
            bad.push_back("n=" + std::to_string(n) + (sol.integral ? "" : " not integral") +
                          (hv.pass ? "" : " holdout fails at " + join_numbers(hv.failing_primes)));
          }
        } catch (const std::exception& e) {
          bad.push_back("n=" + std::to_string(n) + " " + e.what());
        }
      }
      if (skipped) {
        o = cache_miss(expected, missing);
        break;
      }
      o = check(bad.empty(), expected, bad.empty() ? join(fits, "; ") : join(bad, "; "), oracle);
      break;
    }
    case 15: {
      fitlab::FitModel m10{13, {{fitlab::Correction::kTau, 1}}};
      fitlab::FitModel m14{17, {{fitlab::Correction::kTau, 5}, {fitlab::Correction::kC16, 0}, {fitlab::Correction::kC18, 0}}};
      std::vector<std::string> parts;
      bool ok = true;
      for (int dep : {5, 6, 7, 14}) {
        const auto& r = run(dep);
        parts.push_back(std::to_string(dep) + ":" + to_string(r.verdict));
        if (r.verdict != Verdict::kPass) ok = false;
      }
      Integer c16 = symrep::dim_irrep(symrep::parse_partition("[2 1^12]"));
      Integer c18 = symrep::dim_irrep(symrep::parse_partition("[2^7]"));
      ok = ok && c16 == 13 && c18 == 429;
      o = check(ok, "5:pass 6:pass 7:pass 14:pass", join(parts, " "),
                "not reproducible at desk scale; model shapes " + m10.to_string() + " (" +
                    std::to_string(m10.unknowns()) + " unknowns) and " + m14.to_string() + " (" +
                    std::to_string(m14.unknowns()) + " unknowns), constants " + str(c16) + " and " + str(c18));
      break;
    }
    case 16: {
      long orbits = 0, failures = 0;
      std::vector<std::string> bad;
      for (int g = 0; g <= cfg.length_g_max; ++g) {
        for (int n = 0; n <= cfg.length_n_max; ++n) {
          if (2 * g - 2 + n <= 0) continue;
          auto colours = tautcalc::unnumbered_legs(n);
          for (int k = 0; k <= 3 * g - 3 + n; ++k) {
            tautcalc::for_each_generator(g, k, colours, [&](const tautcalc::DecoratedGenerator& gen) {
              ++orbits;
              auto r = tautcalc::generator_length(gen);
              if (!r.pass) {
                ++failures;
                if (bad.size() < 3) bad.push_back(gen.to_string());
              }
            });
          }
        }
      }
      tautcalc::clear_length_cache();
      o = check(failures == 0, "0 violations", std::to_string(failures) + " violations" + (bad.empty() ? "" : ": " + join(bad, "; ")),
                std::to_string(orbits) + " generators up to relabeling of markings, g <= " +
                    std::to_string(cfg.length_g_max) + ", n <= " + std::to_string(cfg.length_n_max));
      break;
    }
    case 17: {
      auto ps = primes_in_range(2, cfg.determinism_prime_max);
      std::vector<std::string> reference;
      std::vector<std::string> bad;
      for (std::size_t i = 0; i < cfg.determinism_threads.size(); ++i) {
        std::vector<std::string> rows;
        for (auto p : ps) {
          for (const auto& r : census::census_g1(p, cfg.g1_n_max, cfg.determinism_threads[i])) {
            rows.push_back(census::to_csv_row(r));
          }
        }
        if (i == 0) {
          reference = std::move(rows);
        } else if (rows != reference) {
          bad.push_back("threads=" + std::to_string(cfg.determinism_threads[i]));
        }
      }
      o = check(bad.empty(), "identical rows", bad.empty() ? std::to_string(reference.size()) + " identical rows" : "differs at " + join(bad, ","),
                "threads " + join_numbers(cfg.determinism_threads));
      break;
    }
  }

  CriterionResult r;
  r.id = id;
  r.statement = kStatements[id - 1];
  r.expected = std::move(o.expected);
  r.computed = std::move(o.computed);
  r.verdict = o.verdict;
  r.note = std::move(o.note);
  return r;
}

VerificationReport verify_all(const RunConfig& config) {
  Verifier v(config);
  VerificationReport rep = v.report();
  if (config.report_path) {
    const auto& path = *config.report_path;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report " + path.string());
    out << rep.to_json();
  }
  return rep;
}

}  // namespace mgn::verify
