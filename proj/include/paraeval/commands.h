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

#ifndef PARAEVAL_COMMANDS_H_
#define PARAEVAL_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace paraeval {

/// Tool version embedded in every report.
std::string_view ToolVersion();

/// Optional overrides of the bundled IPA tables. Both or neither must be
/// set.
struct TableConfig {
  std::optional<std::filesystem::path> ipa_table;
  std::optional<std::filesystem::path> phone_table;
};

struct PreprocessConfig {
  std::filesystem::path chat_path;  // a .cha file or a directory of them
  std::filesystem::path out_path;   // canonical records
  std::optional<std::filesystem::path> discard_log;  // default: <out>.discards.tsv
  std::optional<std::filesystem::path> text_out;     // oracle text, one line each
  std::vector<std::string> participants = {"PAR"};
  bool partial = false;  // write kept utterances even if some failed
  TableConfig tables;
};

struct StandardizeConfig {
  std::filesystem::path in_path;
  std::string format = "labeled";
  std::filesystem::path out_path;
  std::optional<std::filesystem::path> text_out;
  TableConfig tables;
};

struct ScoreConfig {
  std::filesystem::path ref_path;
  std::filesystem::path hyp_path;
  std::string ref_format = "canonical";
  std::string hyp_format = "canonical";
  std::filesystem::path report_path;  // line-delimited JSON records
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> manifest;
  bool strict = false;
  TableConfig tables;
};

struct CompareConfig {
  std::filesystem::path ref_path;
  std::filesystem::path hyp_a_path;
  std::filesystem::path hyp_b_path;
  std::string ref_format = "canonical";
  std::string hyp_format = "canonical";
  std::filesystem::path report_path;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> manifest;
  std::size_t iterations = 1000;
  std::size_t batch_size = 100;
  double confidence = 0.95;
  std::uint64_t seed = 1234;
  std::size_t permutations = 10000;
  std::size_t threads = 1;
  bool strict = false;
  TableConfig tables;
};

struct LossAuditConfig {
  std::filesystem::path input_path;
  std::optional<std::filesystem::path> out_path;  // default: stdout only
};

/// Each command returns the process exit status: 0 iff no errors. Results
/// go to files; the human-readable summary goes to `out`, diagnostics to
/// `err`.
int RunPreprocess(const PreprocessConfig &config, std::ostream &out, std::ostream &err);
int RunStandardize(const StandardizeConfig &config, std::ostream &out, std::ostream &err);
int RunScore(const ScoreConfig &config, std::ostream &out, std::ostream &err);
int RunCompare(const CompareConfig &config, std::ostream &out, std::ostream &err);
int RunLossAudit(const LossAuditConfig &config, std::ostream &out, std::ostream &err);

/// Hex SHA-256 of a file, or of a directory's files (name and contents, in
/// name order).
std::string InputDigest(const std::filesystem::path &path);

}  // namespace paraeval

#endif  // PARAEVAL_COMMANDS_H_
