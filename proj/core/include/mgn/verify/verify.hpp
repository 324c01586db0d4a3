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

#ifndef MGN_VERIFY_VERIFY_HPP_
#define MGN_VERIFY_VERIFY_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mgn::verify {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kCriterionCount = 17;

struct RunConfig {
  std::filesystem::path cache_dir = "mgn-cache";
  std::optional<std::filesystem::path> report_path;
  unsigned threads = 1;
  int modforms_order = 200;

  std::uint32_t g1_prime_max = 199;
  int g1_n_max = 11;
  std::vector<std::uint32_t> g1_fit_primes_n11 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  std::vector<std::uint32_t> g1_holdout_primes_n11 = {43, 47, 53};
  std::uint32_t determinism_prime_max = 31;
  std::vector<unsigned> determinism_threads = {1, 4, 8};

  std::vector<std::uint32_t> g2_fit_primes = {3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<std::uint32_t> g2_holdout_primes = {29};
  int g2_n_max = 4;
  std::uint32_t g2_oracle_prime = 5;

  // Census rows missing from the cache are computed when set; otherwise
  // the dependent criteria are skipped.
  bool compute_missing_g1 = true;
  bool compute_missing_g2 = true;

  int length_g_max = 2;
  int length_n_max = 6;
  int additivity_max_total = 9;
  int psi_genus0_n_max = 10;

  // Wall times are the only nondeterministic report field.
  bool record_timings = true;

  // Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

enum class Verdict { kPass, kFail, kSkipped };
std::string to_string(Verdict v);

struct CriterionResult {
  int id = 0;
  std::string statement;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::kSkipped;
  std::string note;
  double seconds = 0;
};

struct VerificationReport {
  int schema_version = kReportSchemaVersion;
  std::map<std::string, std::string> data_versions;
  std::vector<CriterionResult> criteria;

  bool passed() const;
  int count(Verdict v) const;
  std::string to_json(int indent = 2) const;
};

// Runs criteria on demand and keeps their results, so that criteria built
// on others reuse them. The census cache is opened lazily.
class Verifier {
 public:
  explicit Verifier(RunConfig config);
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  const RunConfig& config() const { return config_; }

  // Throws std::out_of_range unless 1 <= id <= kCriterionCount.
  const CriterionResult& run(int id);
  VerificationReport report();
  // Only the listed criteria, in ascending id order.
  VerificationReport report(std::vector<int> ids);

 private:
  struct State;
  CriterionResult evaluate(int id);

  RunConfig config_;
  std::unique_ptr<State> state_;
  std::map<int, CriterionResult> done_;
};

std::map<std::string, std::string> data_versions(const RunConfig& config);

// Runs every criterion in order and writes the report when a path is set.
VerificationReport verify_all(const RunConfig& config);

}  // namespace mgn::verify

#endif  // MGN_VERIFY_VERIFY_HPP_
