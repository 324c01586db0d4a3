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

#include "mgn/census/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mgn::census {

namespace {

auto sort_key(const CensusRecord& r) { return std::tie(r.g, r.n, r.p, r.method, r.version); }

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string to_csv_row(const CensusRecord& r) {
  std::ostringstream os;
  os << r.g << ',' << r.n << ',' << r.p << ',' << r.count.get_num().get_str() << ','
     << r.count.get_den().get_str() << ',' << r.method << ',' << r.version;
  return os.str();
}

CensusRecord parse_csv_row(const std::string& line) {
  auto f = split_commas(line);
  if (f.size() != 7) throw std::invalid_argument("census cache: bad row '" + line + "'");
  try {
    CensusRecord r;
    r.g = std::stoi(f[0]);
    r.n = std::stoi(f[1]);
    r.p = static_cast<std::uint32_t>(std::stoul(f[2]));
    r.count = make_rational(Integer(f[3]), Integer(f[4]));
    r.method = f[5];
    r.version = f[6];
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("census cache: bad row '" + line + "'");
  }
}

CensusCache::CensusCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), file_(dir_ / kCacheFileName), version_(std::move(version)) {
  std::filesystem::create_directories(dir_);
  load();
}

void CensusCache::load() {
  rows_.clear();
  std::ifstream in(file_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  if (line != kCacheHeader) throw std::invalid_argument("census cache: unexpected header in " + file_.string());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows_.push_back(parse_csv_row(line));
  }
  std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
}

void CensusCache::save() const {
  auto tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kCacheHeader << '\n';
    for (const auto& r : rows_) out << to_csv_row(r) << '\n';
    if (!out) throw std::runtime_error("census cache: failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file_);
}

std::optional<CensusRecord> CensusCache::find(int g, int n, std::uint32_t p) const {
  for (const auto& r : rows_) {
    if (r.g == g && r.n == n && r.p == p && r.version == version_) return r;
  }
  return std::nullopt;
}

void CensusCache::put(const std::vector<CensusRecord>& records) {
  bool changed = false;
  for (const auto& r : records) {
    bool present = std::any_of(rows_.begin(), rows_.end(), [&](const CensusRecord& s) {
      return sort_key(s) == sort_key(r);
    });
    if (present) continue;
    rows_.push_back(r);
    changed = true;
  }
  if (!changed) return;
  std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  save();
}

bool CensusCache::has_range(int g, std::uint32_t p, int n_lo, int n_hi) const {
  for (int n = n_lo; n <= n_hi; ++n) {
    if (!find(g, n, p)) return false;
  }
  return true;
}

namespace {

std::vector<CensusRecord> stamped(std::vector<CensusRecord> records, const std::string& version) {
  for (auto& r : records) r.version = version;
  return records;
}

}  // namespace

std::vector<CensusRecord> CensusCache::collect(int g, std::uint32_t p, int n_lo, int n_hi) const {
  std::vector<CensusRecord> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    auto r = find(g, n, p);
    if (!r) throw std::logic_error("census cache: row missing after insert");
    out.push_back(*r);
  }
  return out;
}

std::vector<CensusRecord> CensusCache::ensure_g1(std::uint32_t p, int n_max, unsigned threads) {
  if (!has_range(1, p, 1, n_max)) put(stamped(census_g1(p, n_max, threads), version_));
  return collect(1, p, 1, n_max);
}

std::vector<CensusRecord> CensusCache::ensure_g2(std::uint32_t p, int n_max, unsigned threads) {
  if (!has_range(2, p, 0, n_max)) put(stamped(census_g2(p, n_max, threads), version_));
  return collect(2, p, 0, n_max);
}

}  // namespace mgn::census
