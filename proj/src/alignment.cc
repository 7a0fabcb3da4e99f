// Copyright 2026 The paraeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paraeval/alignment.h"

#include <algorithm>

#include "paraeval/errors.h"

namespace paraeval {

namespace {

void CheckCosts(const EditCosts &costs) {
  if (costs.substitution < 0 || costs.insertion < 0 || costs.deletion < 0)
    throw Error("edit costs must be non-negative");
}

}  // namespace

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "substitute";
    case EditKind::kInsert: return "insert";
    case EditKind::kDelete: return "delete";
  }
  return "match";
}

std::size_t Alignment::Count(EditKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [kind](const EditOp &op) { return op.kind == kind; }));
}

Alignment Align(std::span<const std::string> ref, std::span<const std::string> hyp,
                const EditCosts &costs) {
  CheckCosts(costs);
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  // cost[i * width + j]: cheapest alignment of ref[0, i) with hyp[0, j).
  std::vector<long long> cost((n + 1) * width);
  for (std::size_t i = 0; i <= n; ++i) cost[i * width] = static_cast<long long>(i) * costs.deletion;
  for (std::size_t j = 0; j <= m; ++j) cost[j] = static_cast<long long>(j) * costs.insertion;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      long long diag = cost[(i - 1) * width + j - 1] +
                       (ref[i - 1] == hyp[j - 1] ? 0 : costs.substitution);
      long long del = cost[(i - 1) * width + j] + costs.deletion;
      long long ins = cost[i * width + j - 1] + costs.insertion;
      cost[i * width + j] = std::min({diag, del, ins});
    }
  }

  Alignment out;
  out.cost = cost[n * width + m];
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const long long here = cost[i * width + j];
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (cost[(i - 1) * width + j - 1] + (same ? 0 : costs.substitution) == here) {
        out.ops.push_back({same ? EditKind::kMatch : EditKind::kSubstitute, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && cost[(i - 1) * width + j] + costs.deletion == here) {
      out.ops.push_back({EditKind::kDelete, i - 1, std::nullopt});
      --i;
      continue;
    }
    out.ops.push_back({EditKind::kInsert, std::nullopt, j - 1});
    --j;
  }
  std::reverse(out.ops.begin(), out.ops.end());
  out.distance = out.ops.size() - out.Count(EditKind::kMatch);
  return out;
}

long long EditDistance(std::span<const std::string> ref,
                       std::span<const std::string> hyp, const EditCosts &costs) {
  CheckCosts(costs);
  std::vector<long long> prev(hyp.size() + 1), curr(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j)
    prev[j] = static_cast<long long>(j) * costs.insertion;
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    curr[0] = static_cast<long long>(i) * costs.deletion;
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      curr[j] = std::min({prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : costs.substitution),
                          prev[j] + costs.deletion, curr[j - 1] + costs.insertion});
    }
    std::swap(prev, curr);
  }
  return prev[hyp.size()];
}

}  // namespace paraeval
