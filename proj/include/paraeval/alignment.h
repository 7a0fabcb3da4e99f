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

#ifndef PARAEVAL_ALIGNMENT_H_
#define PARAEVAL_ALIGNMENT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paraeval {

enum class EditKind { kMatch, kSubstitute, kInsert, kDelete };

std::string_view EditKindName(EditKind kind);

/// One alignment column. Match/substitute carry both indices, insert only
/// the hypothesis index, delete only the reference index.
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;
  bool operator==(const EditOp &) const = default;
};

struct EditCosts {
  int substitution = 1;
  int insertion = 1;
  int deletion = 1;
};

struct Alignment {
  std::vector<EditOp> ops;
  std::size_t distance = 0;  // number of substitute + insert + delete ops
  long long cost = 0;        // weighted by EditCosts; equals distance for unit costs

  std::size_t NumColumns() const { return ops.size(); }
  std::size_t Count(EditKind kind) const;
};

/// Minimum-cost alignment by dynamic programming. On equal cost the
/// backtrace prefers the diagonal (match/substitute), then delete, then
/// insert, so results are identical across runs and platforms.
Alignment Align(std::span<const std::string> ref, std::span<const std::string> hyp,
                const EditCosts &costs = {});

/// Plain edit distance with the given costs, without the backtrace.
long long EditDistance(std::span<const std::string> ref,
                       std::span<const std::string> hyp, const EditCosts &costs = {});

}  // namespace paraeval

#endif  // PARAEVAL_ALIGNMENT_H_
