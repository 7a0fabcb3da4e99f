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

#include "paraeval/commands.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "paraeval/corpus.h"
#include "paraeval/errors.h"
#include "paraeval/loss_audit.h"
#include "paraeval/metrics.h"
#include "paraeval/significance.h"

#ifndef PARAEVAL_VERSION
#define PARAEVAL_VERSION "0.0.0"
#endif

namespace paraeval {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

json PathOrNull(const std::optional<fs::path> &p) {
  return p ? json(p->string()) : json(nullptr);
}

std::unique_ptr<IpaConverter> MakeConverter(const TableConfig &tables) {
  if (!tables.ipa_table && !tables.phone_table) return nullptr;
  if (!tables.ipa_table || !tables.phone_table)
    throw Error("--ipa-table and --phone-table must be given together");
  return std::make_unique<IpaConverter>(
      IpaConverter::FromFiles(*tables.ipa_table, *tables.phone_table));
}

json TablesJson(const TableConfig &tables) {
  return json{{"ipa_table", PathOrNull(tables.ipa_table)},
              {"phone_table", PathOrNull(tables.phone_table)}};
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1)
      throw Error("SHA-256 initialisation failed");
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256 &) = delete;
  Sha256 &operator=(const Sha256 &) = delete;

  void Update(std::string_view data) { EVP_DigestUpdate(ctx_, data.data(), data.size()); }

  std::string HexDigest() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_, md.data(), &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(kHex[md[i] >> 4]);
      out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
  }

 private:
  EVP_MD_CTX *ctx_;
};

json InputJson(std::string_view role, const fs::path &path) {
  return json{{"role", role}, {"path", path.string()}, {"sha256", InputDigest(path)}};
}

json MetaRecord(std::string_view command, json config, json inputs) {
  return json{{"record", "meta"},       {"tool", "paraeval"}, {"version", ToolVersion()},
              {"command", command},      {"config", std::move(config)},
              {"inputs", std::move(inputs)}};
}

// Loads a corpus, printing every diagnostic. Returns nullopt on any error.
std::optional<std::vector<CanonicalSequence>> LoadReporting(const fs::path &path,
                                                            std::string_view format_tag,
                                                            const IpaConverter *converter,
                                                            std::ostream &err) {
  LoadOptions options;
  options.converter = converter;
  LoadResult result = LoadCorpusCollecting(path, ParseCorpusFormat(format_tag), options);
  if (!result.errors.empty()) {
    for (const LineDiagnostic &d : result.errors) err << "error: " << d.ToString() << "\n";
    err << "error: " << result.errors.size() << " record(s) in " << path.string()
        << " failed to parse\n";
    return std::nullopt;
  }
  return std::move(result.sequences);
}

PairedCorpus RestrictToTestFolds(const PairedCorpus &corpus, const fs::path &manifest_path,
                                 std::ostream &out) {
  FoldManifest manifest = FoldManifest::Load(manifest_path);
  manifest.ValidateCrossValidation();
  std::vector<PairedCorpus> folds;
  for (int fold : manifest.Folds()) folds.push_back(manifest.Select(corpus, fold, Split::kTest));
  PairedCorpus aggregated = AggregateFolds(folds);
  if (aggregated.empty()) throw CorpusError("manifest selects no test utterances");
  out << "manifest: " << folds.size() << " fold(s), " << aggregated.size()
      << " test utterance(s)\n";
  return aggregated;
}

json PairingJson(const PairingReport &report) {
  return json{{"paired", report.paired},
              {"missing_in_hyp", report.missing_in_hyp},
              {"missing_in_ref", report.missing_in_ref}};
}

json CorpusScoreJson(const CorpusScore &score) {
  auto counts = [](const F1Counts &c) {
    return json{{"tp", c.true_positives}, {"fp", c.false_positives}, {"fn", c.false_negatives}};
  };
  return json{{"utterances", score.num_utterances},
              {"ref_words", score.num_ref_words},
              {"wer", score.wer},
              {"awer", score.awer},
              {"td_binary", score.td.binary},
              {"td_p", score.td.p},
              {"td_n", score.td.n},
              {"td_s", score.td.s},
              {"td_all", score.td.all},
              {"f1_p", score.f1_p},
              {"f1_n", score.f1_n},
              {"f1_s", score.f1_s},
              {"f1_counts",
               json{{"p", counts(score.f1_counts_p)},
                    {"n", counts(score.f1_counts_n)},
                    {"s", counts(score.f1_counts_s)}}}};
}

json UtteranceJson(const UtteranceScore &u) {
  return json{{"record", "utterance"},
              {"id", u.utt_id},
              {"word_errors", u.word_errors.errors},
              {"ref_words", u.word_errors.ref_length},
              {"augmented_errors", u.augmented_errors.errors},
              {"augmented_ref_tokens", u.augmented_errors.ref_length},
              {"td_binary", u.td.binary},
              {"td_p", u.td.p},
              {"td_n", u.td.n},
              {"td_s", u.td.s},
              {"td_all", u.td.all}};
}

std::string JsonLines(const std::vector<json> &records) {
  std::string out;
  for (const json &r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

std::string TableHeader() {
  return "system                | WER   | AWER  | TD-bin | [p]  | [n]  | [s]  | all\n";
}

std::string TableRow(const std::string &name, const CorpusScore &s) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-21.21s | %5.1f | %5.1f | %6.2f | %4.2f | %4.2f | %4.2f | %4.2f\n",
                name.c_str(), s.wer, s.awer, s.td.binary, s.td.p, s.td.n, s.td.s, s.td.all);
  return buf;
}

std::string F1Line(const std::string &name, const CorpusScore &s) {
  return name + " utterance-level F1: [p] " + Fixed(s.f1_p, 3) + "  [n] " + Fixed(s.f1_n, 3) +
         "  [s] " + Fixed(s.f1_s, 3) + "\n";
}

std::string UtteranceRate(const ErrorCounts &c) {
  return c.ref_length == 0 ? "" : Fixed(100.0 * c.errors / c.ref_length, 6);
}

std::string ScoreCsv(const CorpusScore &score) {
  std::ostringstream csv;
  csv << "scope,id,wer,awer,td_binary,td_p,td_n,td_s,td_all,f1_p,f1_n,f1_s\n";
  csv << "corpus,," << Fixed(score.wer, 6) << ',' << Fixed(score.awer, 6) << ','
      << Fixed(score.td.binary, 6) << ',' << Fixed(score.td.p, 6) << ',' << Fixed(score.td.n, 6)
      << ',' << Fixed(score.td.s, 6) << ',' << Fixed(score.td.all, 6) << ','
      << Fixed(score.f1_p, 6) << ',' << Fixed(score.f1_n, 6) << ',' << Fixed(score.f1_s, 6)
      << '\n';
  for (const UtteranceScore &u : score.utterances) {
    csv << "utterance," << u.utt_id << ',' << UtteranceRate(u.word_errors) << ','
        << UtteranceRate(u.augmented_errors) << ',' << Fixed(u.td.binary, 6) << ','
        << Fixed(u.td.p, 6) << ',' << Fixed(u.td.n, 6) << ',' << Fixed(u.td.s, 6) << ','
        << Fixed(u.td.all, 6) << ",,,\n";
  }
  return csv.str();
}

// Runs `body`, turning toolkit and I/O exceptions into exit status 1.
template <typename Body>
int Guarded(std::ostream &err, Body body) {
  try {
    return body();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

std::vector<StepDistribution> ParseSteps(const json &steps, std::string_view field) {
  if (!steps.is_array()) throw Error("\"" + std::string(field) + "\" must be an array");
  std::vector<StepDistribution> out;
  for (const json &step : steps) {
    for (const auto &item : step.items()) {
      if (item.key() != "probabilities" && item.key() != "target")
        throw Error("unknown step key \"" + item.key() + "\"");
    }
    StepDistribution d;
    d.probabilities = step.at("probabilities").get<std::vector<double>>();
    d.target_index = step.at("target").get<std::size_t>();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::string_view ToolVersion() { return PARAEVAL_VERSION; }

std::string InputDigest(const fs::path &path) {
  Sha256 sha;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path &f : files) {
      sha.Update(f.filename().string());
      sha.Update(std::string_view("\0", 1));
      sha.Update(ReadFile(f));
    }
  } else {
    sha.Update(ReadFile(path));
  }
  return sha.HexDigest();
}

int RunPreprocess(const PreprocessConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&]() {
    std::unique_ptr<IpaConverter> converter = MakeConverter(config.tables);
    if (!fs::exists(config.chat_path))
      throw Error("no such file or directory: " + config.chat_path.string());
    LoadOptions options;
    options.converter = converter.get();
    options.chat.participant_codes = config.participants;
    LoadResult result = LoadCorpusCollecting(config.chat_path, CorpusFormat::kChat, options);

    const std::size_t total =
        result.sequences.size() + result.discarded.size() + result.errors.size();
    if (total == 0) {
      err << "error: no utterances found in " << config.chat_path.string() << "\n";
      return 1;
    }
    for (const LineDiagnostic &d : result.errors) err << "error: " << d.ToString() << "\n";
    if (!result.errors.empty() && !config.partial) {
      err << "error: " << result.errors.size()
          << " utterance(s) failed; no output written (pass --partial to keep the rest)\n";
      return 1;
    }

    SaveCorpus(config.out_path, result.sequences);

    std::map<std::string, std::size_t> by_reason;
    std::string log = "# id\treason\tsource\n";
    for (const OracleUtterance &d : result.discarded) {
      std::string reason(DiscardReasonName(*d.discard_reason));
      ++by_reason[reason];
      log += d.utt_id + "\t" + reason + "\t" + d.source_file + ":" +
             std::to_string(d.line_number) + "\n";
    }
    fs::path log_path = config.discard_log.value_or(fs::path(config.out_path.string() + ".discards.tsv"));
    WriteFile(log_path, log);

    if (config.text_out) {
      std::string text;
      for (const CanonicalSequence &seq : result.sequences)
        text += seq.utt_id + "\t" + ToSingleSeqText(seq) + "\n";
      WriteFile(*config.text_out, text);
    }

    out << "kept " << result.sequences.size() << ", discarded " << result.discarded.size();
    for (const auto &[reason, count] : by_reason) out << " (" << reason << ": " << count << ")";
    if (!result.errors.empty()) out << ", failed " << result.errors.size();
    out << "\n";
    if (result.sequences.empty()) err << "warning: every utterance was discarded\n";
    return result.errors.empty() ? 0 : 1;
  });
}

int RunStandardize(const StandardizeConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&]() {
    std::unique_ptr<IpaConverter> converter = MakeConverter(config.tables);
    auto corpus = LoadReporting(config.in_path, config.format, converter.get(), err);
    if (!corpus) return 1;
    SaveCorpus(config.out_path, *corpus);
    if (config.text_out) {
      std::string text;
      for (const CanonicalSequence &seq : *corpus)
        text += seq.utt_id + "\t" + ToLabeledText(seq) + "\n";
      WriteFile(*config.text_out, text);
    }
    out << "standardized " << corpus->size() << " record(s) from " << config.format << "\n";
    return 0;
  });
}

int RunScore(const ScoreConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&]() {
    std::unique_ptr<IpaConverter> converter = MakeConverter(config.tables);
    auto refs = LoadReporting(config.ref_path, config.ref_format, converter.get(), err);
    auto hyps = LoadReporting(config.hyp_path, config.hyp_format, converter.get(), err);
    if (!refs || !hyps) return 1;

    PairingReport pairing;
    PairedCorpus paired = PairById(*refs, *hyps, config.strict, &pairing);
    for (const std::string &w : pairing.warnings) err << "warning: " << w << "\n";
    if (config.manifest) paired = RestrictToTestFolds(paired, *config.manifest, out);

    CorpusScore score = ScoreCorpus(paired.refs, paired.hyps);

    json cfg{{"ref", config.ref_path.string()},
             {"hyp", config.hyp_path.string()},
             {"ref_format", config.ref_format},
             {"hyp_format", config.hyp_format},
             {"report", config.report_path.string()},
             {"csv", PathOrNull(config.csv_path)},
             {"manifest", PathOrNull(config.manifest)},
             {"strict", config.strict},
             {"tables", TablesJson(config.tables)}};
    json inputs = json::array({InputJson("ref", config.ref_path), InputJson("hyp", config.hyp_path)});
    if (config.manifest) inputs.push_back(InputJson("manifest", *config.manifest));

    std::vector<json> records;
    records.push_back(MetaRecord("score", std::move(cfg), std::move(inputs)));
    json pairing_record{{"record", "pairing"}};
    pairing_record.update(PairingJson(pairing));
    pairing_record["scored"] = paired.size();
    records.push_back(std::move(pairing_record));
    json corpus_record{{"record", "corpus"}};
    corpus_record.update(CorpusScoreJson(score));
    records.push_back(std::move(corpus_record));
    for (const UtteranceScore &u : score.utterances) records.push_back(UtteranceJson(u));
    WriteFile(config.report_path, JsonLines(records));
    if (config.csv_path) WriteFile(*config.csv_path, ScoreCsv(score));

    out << TableHeader() << TableRow(config.hyp_path.filename().string(), score)
        << F1Line(config.hyp_path.filename().string(), score);
    return 0;
  });
}

int RunCompare(const CompareConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&]() {
    std::unique_ptr<IpaConverter> converter = MakeConverter(config.tables);
    auto refs = LoadReporting(config.ref_path, config.ref_format, converter.get(), err);
    auto hyps_a = LoadReporting(config.hyp_a_path, config.hyp_format, converter.get(), err);
    auto hyps_b = LoadReporting(config.hyp_b_path, config.hyp_format, converter.get(), err);
    if (!refs || !hyps_a || !hyps_b) return 1;

    PairingReport pairing_a, pairing_b;
    PairedCorpus with_a = PairById(*refs, *hyps_a, config.strict, &pairing_a);
    PairedCorpus with_b = PairById(with_a.refs, *hyps_b, config.strict, &pairing_b);
    for (const std::string &w : pairing_a.warnings) err << "warning: system A: " << w << "\n";
    for (const std::string &w : pairing_b.warnings) err << "warning: system B: " << w << "\n";

    std::unordered_map<std::string, std::size_t> a_index;
    for (std::size_t i = 0; i < with_a.size(); ++i) a_index.emplace(with_a.refs[i].utt_id, i);
    PairedCorpus pa, pb;
    for (std::size_t i = 0; i < with_b.size(); ++i) {
      std::size_t ai = a_index.at(with_b.refs[i].utt_id);
      pa.refs.push_back(with_a.refs[ai]);
      pa.hyps.push_back(with_a.hyps[ai]);
      pb.refs.push_back(with_b.refs[i]);
      pb.hyps.push_back(with_b.hyps[i]);
    }
    if (config.manifest) {
      std::ostringstream discard;
      pa = RestrictToTestFolds(pa, *config.manifest, out);
      pb = RestrictToTestFolds(pb, *config.manifest, discard);
    }

    CorpusScore score_a = ScoreCorpus(pa.refs, pa.hyps);
    CorpusScore score_b = ScoreCorpus(pb.refs, pb.hyps);

    BootstrapOptions boot;
    boot.iterations = config.iterations;
    boot.batch_size = config.batch_size;
    boot.confidence = config.confidence;
    boot.seed = config.seed;
    boot.threads = config.threads;

    std::vector<ErrorCounts> wa, wb, aa, ab;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      wa.push_back(score_a.utterances[i].word_errors);
      wb.push_back(score_b.utterances[i].word_errors);
      aa.push_back(score_a.utterances[i].augmented_errors);
      ab.push_back(score_b.utterances[i].augmented_errors);
    }
    std::vector<BootstrapResult> boots = {BootstrapCompare(wa, wb, boot, "wer"),
                                          BootstrapCompare(aa, ab, boot, "awer")};

    struct PermutationRow {
      std::string metric;
      double mean_a, mean_b, p_value;
    };
    std::vector<PermutationRow> perms;
    const std::array<std::pair<const char *, double TdBreakdown::*>, 5> td_fields = {{
        {"td_binary", &TdBreakdown::binary},
        {"td_p", &TdBreakdown::p},
        {"td_n", &TdBreakdown::n},
        {"td_s", &TdBreakdown::s},
        {"td_all", &TdBreakdown::all},
    }};
    const bool can_permute = pa.size() >= 2;
    if (!can_permute) err << "warning: permutation tests need at least two utterances\n";
    for (const auto &[name, field] : td_fields) {
      std::vector<double> xa, xb;
      for (std::size_t i = 0; i < pa.size(); ++i) {
        xa.push_back(score_a.utterances[i].td.*field);
        xb.push_back(score_b.utterances[i].td.*field);
      }
      double p = can_permute ? PairedPermutationTest(xa, xb, config.permutations, config.seed) : 1.0;
      perms.push_back({name, score_a.td.*field, score_b.td.*field, p});
    }

    json cfg{{"ref", config.ref_path.string()},
             {"hyp_a", config.hyp_a_path.string()},
             {"hyp_b", config.hyp_b_path.string()},
             {"ref_format", config.ref_format},
             {"hyp_format", config.hyp_format},
             {"report", config.report_path.string()},
             {"csv", PathOrNull(config.csv_path)},
             {"manifest", PathOrNull(config.manifest)},
             {"iterations", config.iterations},
             {"batch_size", config.batch_size},
             {"confidence", config.confidence},
             {"seed", config.seed},
             {"permutations", config.permutations},
             {"strict", config.strict},
             {"tables", TablesJson(config.tables)}};
    json inputs = json::array({InputJson("ref", config.ref_path),
                               InputJson("hyp_a", config.hyp_a_path),
                               InputJson("hyp_b", config.hyp_b_path)});
    if (config.manifest) inputs.push_back(InputJson("manifest", *config.manifest));

    std::vector<json> records;
    records.push_back(MetaRecord("compare", std::move(cfg), std::move(inputs)));
    records.push_back(json{{"record", "pairing"}, {"system_a", PairingJson(pairing_a)},
                           {"system_b", PairingJson(pairing_b)}, {"compared", pa.size()}});
    json sys_a{{"record", "system"}, {"system", "a"}};
    sys_a.update(CorpusScoreJson(score_a));
    json sys_b{{"record", "system"}, {"system", "b"}};
    sys_b.update(CorpusScoreJson(score_b));
    records.push_back(std::move(sys_a));
    records.push_back(std::move(sys_b));
    for (const BootstrapResult &r : boots) {
      records.push_back(json{{"record", "bootstrap"},
                             {"metric", r.metric_name},
                             {"delta_mean", r.delta_mean},
                             {"ci_low", r.ci_low},
                             {"ci_high", r.ci_high},
                             {"p_better", r.p_better},
                             {"significant", r.significant},
                             {"confidence", r.confidence},
                             {"seed", r.seed},
                             {"iterations", r.iterations},
                             {"batch_size", r.batch_size}});
    }
    for (const PermutationRow &r : perms) {
      records.push_back(json{{"record", "permutation"},
                             {"metric", r.metric},
                             {"mean_a", r.mean_a},
                             {"mean_b", r.mean_b},
                             {"p_value", r.p_value},
                             {"significant", r.p_value < 0.05},
                             {"permutations", config.permutations},
                             {"seed", config.seed}});
    }
    WriteFile(config.report_path, JsonLines(records));

    if (config.csv_path) {
      std::ostringstream csv;
      csv << "metric,test,a,b,delta,ci_low,ci_high,p_value,significant\n";
      const double a_rates[] = {score_a.wer, score_a.awer};
      const double b_rates[] = {score_b.wer, score_b.awer};
      for (std::size_t k = 0; k < boots.size(); ++k) {
        const BootstrapResult &r = boots[k];
        csv << r.metric_name << ",bootstrap," << Fixed(a_rates[k], 6) << ','
            << Fixed(b_rates[k], 6) << ',' << Fixed(r.delta_mean, 6) << ','
            << Fixed(r.ci_low, 6) << ',' << Fixed(r.ci_high, 6) << ",,"
            << (r.significant ? "yes" : "no") << '\n';
      }
      for (const PermutationRow &r : perms) {
        csv << r.metric << ",permutation," << Fixed(r.mean_a, 6) << ',' << Fixed(r.mean_b, 6)
            << ',' << Fixed(r.mean_b - r.mean_a, 6) << ",,," << Fixed(r.p_value, 6) << ','
            << (r.p_value < 0.05 ? "yes" : "no") << '\n';
      }
      WriteFile(*config.csv_path, csv.str());
    }

    out << TableHeader() << TableRow("A: " + config.hyp_a_path.filename().string(), score_a)
        << TableRow("B: " + config.hyp_b_path.filename().string(), score_b);
    for (const BootstrapResult &r : boots) {
      out << r.metric_name << ": B - A = " << Fixed(r.delta_mean, 2) << " ["
          << Fixed(r.ci_low, 2) << ", " << Fixed(r.ci_high, 2) << "] at "
          << Fixed(100.0 * r.confidence, 0) << "%, " << (r.significant ? "significant" : "not significant")
          << "\n";
    }
    for (const PermutationRow &r : perms) {
      out << r.metric << ": p = " << Fixed(r.p_value, 4)
          << (r.p_value < 0.05 ? " (significant)" : "") << "\n";
    }
    out << "seed " << config.seed << ", " << config.iterations << " iterations, batch "
        << config.batch_size << "\n";
    return 0;
  });
}

int RunLossAudit(const LossAuditConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&]() {
    json input;
    try {
      input = json::parse(ReadFile(config.input_path));
    } catch (const json::parse_error &e) {
      throw Error(std::string("invalid loss-audit input: ") + e.what());
    }
    if (!input.is_object()) throw Error("loss-audit input must be a JSON object");
    const std::string mode = input.value("mode", "");
    json result{{"mode", mode}};
    try {
      if (mode == "single") {
        for (const auto &item : input.items()) {
          if (item.key() != "mode" && item.key() != "steps")
            throw Error("unknown key \"" + item.key() + "\" for single mode");
        }
        std::vector<StepDistribution> steps = ParseSteps(input.at("steps"), "steps");
        result["steps"] = steps.size();
        result["loss"] = SingleSeqLoss(steps);
      } else if (mode == "multi") {
        for (const auto &item : input.items()) {
          static const std::array<std::string_view, 6> kKeys = {
              "mode", "alpha", "asr_steps", "para_steps", "class_counts", "class_weights"};
          if (std::find(kKeys.begin(), kKeys.end(), item.key()) == kKeys.end())
            throw Error("unknown key \"" + item.key() + "\" for multi mode");
        }
        if (input.contains("class_counts") && input.contains("class_weights"))
          throw Error("give class_counts or class_weights, not both");
        ClassWeights weights;
        if (input.contains("class_counts")) {
          weights = ClassWeightsFromCounts(
              input.at("class_counts").get<std::array<std::uint64_t, kNumLabels>>());
        } else if (input.contains("class_weights")) {
          weights.weights = input.at("class_weights").get<std::array<double, kNumLabels>>();
        }
        const double alpha = input.at("alpha").get<double>();
        MultiSeqLoss loss = MultiSeqLossOf(ParseSteps(input.at("asr_steps"), "asr_steps"),
                                           ParseSteps(input.at("para_steps"), "para_steps"),
                                           weights, alpha);
        result["alpha"] = alpha;
        result["class_weights"] = weights.weights;
        result["l_asr"] = loss.asr;
        result["l_para"] = loss.para;
        result["l_total"] = loss.total;
      } else {
        throw Error("\"mode\" must be \"single\" or \"multi\"");
      }
    } catch (const json::exception &e) {
      throw Error(std::string("malformed loss-audit input: ") + e.what());
    }
    const std::string text = result.dump() + "\n";
    if (config.out_path) WriteFile(*config.out_path, text);
    out << text;
    return 0;
  });
}

}  // namespace paraeval
