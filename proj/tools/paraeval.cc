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

// paraeval: transcript preprocessing and scoring for multiclass paraphasia
// detection.
//
// Usage: paraeval <command> [options]
//   preprocess   CHAT transcripts -> oracle canonical records
//   standardize  model output (labeled | single-seq | multi-seq) -> canonical
//   score        WER, AWER, temporal distance and utterance F1
//   compare      bootstrap / permutation significance between two systems
//   loss-audit   evaluate the training objectives on probability tables

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "paraeval/commands.h"

namespace {

constexpr const char *kEnvPrefix = "PARAEVAL_";

std::string Env(const std::string &name) { return std::string(kEnvPrefix) + name; }

std::optional<std::filesystem::path> OptionalPath(const std::string &value) {
  if (value.empty()) return std::nullopt;
  return std::filesystem::path(value);
}

void AddTableOptions(CLI::App *cmd, std::string &ipa, std::string &phone) {
  cmd->add_option("--ipa-table", ipa, "IPA -> phone table (TSV)")->envname(Env("IPA_TABLE"));
  cmd->add_option("--phone-table", phone, "phone -> grapheme table (TSV)")
      ->envname(Env("PHONE_TABLE"));
}

}  // namespace

int main(int argc, char **argv) {
  using namespace paraeval;

  CLI::App app{"Preprocessing and evaluation toolkit for multiclass paraphasia detection"};
  app.set_version_flag("--version", std::string(ToolVersion()));
  app.require_subcommand(1);

  const std::vector<std::string> kFormats = {"canonical", "labeled", "single-seq", "multi-seq",
                                             "chat"};
  std::string ipa_table, phone_table;

  // preprocess
  PreprocessConfig pre;
  std::string pre_log, pre_text;
  auto *pre_cmd = app.add_subcommand("preprocess", "Convert CHAT transcripts to oracle records");
  pre_cmd->add_option("chat_path", pre.chat_path, ".cha file or directory")->required();
  pre_cmd->add_option("out_path", pre.out_path, "Output canonical records (JSON lines)")->required();
  pre_cmd->add_option("--discard-log", pre_log, "Discard log (default: <out>.discards.tsv)");
  pre_cmd->add_option("--text", pre_text, "Also write oracle text lines");
  pre_cmd->add_option("--participant", pre.participants, "Participant speaker code(s)")
      ->capture_default_str();
  pre_cmd->add_flag("--partial", pre.partial, "Write kept utterances even if some failed");
  AddTableOptions(pre_cmd, ipa_table, phone_table);

  // standardize
  StandardizeConfig std_cfg;
  std::string std_text;
  auto *std_cmd = app.add_subcommand("standardize", "Convert model output to canonical records");
  std_cmd->add_option("in_path", std_cfg.in_path, "Model output file")->required();
  std_cmd->add_option("out_path", std_cfg.out_path, "Output canonical records")->required();
  std_cmd->add_option("--format", std_cfg.format, "Input format")
      ->check(CLI::IsMember(kFormats))
      ->envname(Env("FORMAT"))
      ->capture_default_str();
  std_cmd->add_option("--text", std_text, "Also write interleaved 'word [x]' text");
  AddTableOptions(std_cmd, ipa_table, phone_table);

  // score
  ScoreConfig score;
  std::string score_csv, score_manifest;
  auto *score_cmd = app.add_subcommand("score", "Score a hypothesis corpus against references");
  score_cmd->add_option("ref_path", score.ref_path, "Reference corpus")->required();
  score_cmd->add_option("hyp_path", score.hyp_path, "Hypothesis corpus")->required();
  score_cmd->add_option("report_path", score.report_path, "Report (JSON lines)")->required();
  score_cmd->add_option("--format", score.hyp_format, "Hypothesis format")
      ->check(CLI::IsMember(kFormats))
      ->envname(Env("FORMAT"))
      ->capture_default_str();
  score_cmd->add_option("--ref-format", score.ref_format, "Reference format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  score_cmd->add_option("--csv", score_csv, "Also write a CSV report");
  score_cmd->add_option("--manifest", score_manifest, "Fold manifest; score aggregated test folds")
      ->envname(Env("MANIFEST"));
  score_cmd->add_flag("--strict", score.strict, "Unpaired ids are errors")->envname(Env("STRICT"));
  AddTableOptions(score_cmd, ipa_table, phone_table);

  // compare
  CompareConfig cmp;
  std::string cmp_csv, cmp_manifest;
  auto *cmp_cmd = app.add_subcommand("compare", "Significance tests between systems A and B");
  cmp_cmd->add_option("ref_path", cmp.ref_path, "Reference corpus")->required();
  cmp_cmd->add_option("hyp_a", cmp.hyp_a_path, "System A")->required();
  cmp_cmd->add_option("hyp_b", cmp.hyp_b_path, "System B")->required();
  cmp_cmd->add_option("report_path", cmp.report_path, "Report (JSON lines)")->required();
  cmp_cmd->add_option("--format", cmp.hyp_format, "Hypothesis format")
      ->check(CLI::IsMember(kFormats))
      ->envname(Env("FORMAT"))
      ->capture_default_str();
  cmp_cmd->add_option("--ref-format", cmp.ref_format, "Reference format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  cmp_cmd->add_option("--seed", cmp.seed, "Random seed")->envname(Env("SEED"))->capture_default_str();
  cmp_cmd->add_option("--iterations", cmp.iterations, "Bootstrap iterations")
      ->check(CLI::PositiveNumber)
      ->envname(Env("ITERATIONS"))
      ->capture_default_str();
  cmp_cmd->add_option("--batch-size", cmp.batch_size, "Utterances per bootstrap resample")
      ->check(CLI::PositiveNumber)
      ->envname(Env("BATCH_SIZE"))
      ->capture_default_str();
  cmp_cmd->add_option("--confidence", cmp.confidence, "Confidence level")
      ->check(CLI::Range(0.0, 1.0))
      ->envname(Env("CONFIDENCE"))
      ->capture_default_str();
  cmp_cmd->add_option("--permutations", cmp.permutations, "Sign-flip permutations for TD")
      ->check(CLI::PositiveNumber)
      ->envname(Env("PERMUTATIONS"))
      ->capture_default_str();
  cmp_cmd->add_option("--threads", cmp.threads, "Bootstrap worker threads (0 = all cores)")
      ->envname(Env("THREADS"))
      ->capture_default_str();
  cmp_cmd->add_option("--csv", cmp_csv, "Also write a CSV report");
  cmp_cmd->add_option("--manifest", cmp_manifest, "Fold manifest; compare aggregated test folds")
      ->envname(Env("MANIFEST"));
  cmp_cmd->add_flag("--strict", cmp.strict, "Unpaired ids are errors")->envname(Env("STRICT"));
  AddTableOptions(cmp_cmd, ipa_table, phone_table);

  // loss-audit
  LossAuditConfig loss;
  std::string loss_out;
  auto *loss_cmd = app.add_subcommand("loss-audit", "Evaluate training losses on step tables");
  loss_cmd->add_option("input_path", loss.input_path, "JSON step-distribution file")->required();
  loss_cmd->add_option("--out", loss_out, "Also write the result to this file");

  CLI11_PARSE(app, argc, argv);

  TableConfig tables{OptionalPath(ipa_table), OptionalPath(phone_table)};
  if (*pre_cmd) {
    pre.discard_log = OptionalPath(pre_log);
    pre.text_out = OptionalPath(pre_text);
    pre.tables = tables;
    return RunPreprocess(pre, std::cout, std::cerr);
  }
  if (*std_cmd) {
    std_cfg.text_out = OptionalPath(std_text);
    std_cfg.tables = tables;
    return RunStandardize(std_cfg, std::cout, std::cerr);
  }
  if (*score_cmd) {
    score.csv_path = OptionalPath(score_csv);
    score.manifest = OptionalPath(score_manifest);
    score.tables = tables;
    return RunScore(score, std::cout, std::cerr);
  }
  if (*cmp_cmd) {
    cmp.csv_path = OptionalPath(cmp_csv);
    cmp.manifest = OptionalPath(cmp_manifest);
    cmp.tables = tables;
    return RunCompare(cmp, std::cout, std::cerr);
  }
  loss.out_path = OptionalPath(loss_out);
  return RunLossAudit(loss, std::cout, std::cerr);
}
