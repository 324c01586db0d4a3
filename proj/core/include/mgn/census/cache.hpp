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

#ifndef MGN_CENSUS_CACHE_HPP_
#define MGN_CENSUS_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mgn/census/census.hpp"

namespace mgn::census {

inline constexpr const char* kCacheHeader = "g,n,p,count_num,count_den,method,version";
inline constexpr const char* kCacheFileName = "census.csv";

// Append-only CSV store of census records under a directory. Rows are kept
// sorted by (g, n, p, method, version). Rows written by another version
// stay in the file but are never returned by lookups.
class CensusCache {
 public:
  explicit CensusCache(std::filesystem::path dir, std::string version = kCensusVersion);

  const std::filesystem::path& file() const { return file_; }

  std::optional<CensusRecord> find(int g, int n, std::uint32_t p) const;
  // Adds rows not already present and rewrites the file at once.
  void put(const std::vector<CensusRecord>& records);
  const std::vector<CensusRecord>& rows() const { return rows_; }

  // Records for the given n range at p, computing and persisting them when
  // any is missing.
  std::vector<CensusRecord> ensure_g1(std::uint32_t p, int n_max, unsigned threads);
  std::vector<CensusRecord> ensure_g2(std::uint32_t p, int n_max, unsigned threads);

  // True when every record of the range is already cached.
  bool has_range(int g, std::uint32_t p, int n_lo, int n_hi) const;

 private:
  void load();
  void save() const;
  std::vector<CensusRecord> collect(int g, std::uint32_t p, int n_lo, int n_hi) const;

  std::filesystem::path dir_;
  std::filesystem::path file_;
  std::string version_;
  std::vector<CensusRecord> rows_;
};

std::string to_csv_row(const CensusRecord& r);
// Throws std::invalid_argument on malformed rows.
CensusRecord parse_csv_row(const std::string& line);

}  // namespace mgn::census

#endif  // MGN_CENSUS_CACHE_HPP_
