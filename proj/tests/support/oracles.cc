//
// Copyright 2026 The TextAug Authors
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
//

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace textaug::testutil {

std::vector<std::vector<uint8_t>> EnumerateMasks(size_t n, size_t min_zero,
                                                 size_t max_zero) {
  std::vector<std::vector<uint8_t>> out;
  for (uint32_t code = 0; code < (1u << n); ++code) {
    std::vector<uint8_t> bits(n);
    size_t zeros = 0;
    for (size_t i = 0; i < n; ++i) {
      bits[i] = (code >> i) & 1u;
      zeros += bits[i] == 0;
    }
    if (zeros == n || zeros < min_zero || zeros > max_zero) continue;
    // Count transitions into a zero-run.
    size_t runs = 0;
    for (size_t i = 0; i < n; ++i) {
      if (bits[i] == 0 && (i == 0 || bits[i - 1] == 1)) ++runs;
    }
    if (runs <= 1) out.push_back(std::move(bits));
  }
  return out;
}

std::string FilterJoin(const std::vector<std::string>& segments,
                       const std::vector<uint8_t>& bits) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (!bits[i]) continue;
    out << (first ? "" : " ") << segments[i];
    first = false;
  }
  return out.str();
}

std::string PositionalMix(const std::vector<std::string>& segments,
                          const std::vector<std::string>& shuffled,
                          const std::vector<uint8_t>& bits) {
  std::ostringstream out;
  for (size_t i = 0; i < segments.size(); ++i) {
    out << (i == 0 ? "" : " ") << (bits[i] ? segments[i] : shuffled[i]);
  }
  return out.str();
}

double OracleCosine(const std::vector<double>& u,
                    const std::vector<double>& v) {
  double dot = 0, uu = 0, vv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  return 1.0 - dot / (std::sqrt(uu) * std::sqrt(vv));
}

double OracleEuclidean(const std::vector<double>& u,
                       const std::vector<double>& v) {
  double sum = 0;
  for (size_t i = 0; i < u.size(); ++i) sum += (u[i] - v[i]) * (u[i] - v[i]);
  return std::sqrt(sum);
}

std::vector<std::string> OracleRanking(const std::vector<OracleItem>& gallery,
                                       const std::vector<double>& query,
                                       bool cosine) {
  std::vector<std::pair<double, std::string>> scored;
  for (const OracleItem& item : gallery) {
    scored.emplace_back(cosine ? OracleCosine(query, item.vec)
                               : OracleEuclidean(query, item.vec),
                        item.id);
  }
  std::stable_sort(scored.begin(), scored.end());
  std::vector<std::string> ids;
  for (auto& [d, id] : scored) ids.push_back(id);
  return ids;
}

std::vector<double> OracleCmc(const std::vector<OracleItem>& gallery,
                              const std::vector<OracleQuery>& queries,
                              const std::vector<size_t>& ks, bool cosine) {
  std::vector<size_t> ranks;
  for (const OracleQuery& q : queries) {
    std::vector<OracleItem> pool;
    for (const OracleItem& item : gallery) {
      if (item.id != q.source) pool.push_back(item);
    }
    const std::vector<std::string> order = OracleRanking(pool, q.vec, cosine);
    for (size_t r = 0; r < order.size(); ++r) {
      const auto it = std::find_if(pool.begin(), pool.end(),
                                   [&](const OracleItem& g) {
                                     return g.id == order[r];
                                   });
      if (it->person == q.person) {
        ranks.push_back(r + 1);
        break;
      }
    }
  }
  std::vector<double> cmc;
  if (ranks.empty()) return cmc;
  for (size_t k : ks) {
    size_t hits = 0;
    for (size_t r : ranks) hits += r <= k;
    cmc.push_back(static_cast<double>(hits) / static_cast<double>(ranks.size()));
  }
  return cmc;
}

}  // namespace textaug::testutil
