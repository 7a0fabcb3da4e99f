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

#include "paraeval/corpus.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "paraeval/errors.h"
#include "paraeval/text_util.h"

namespace paraeval {

namespace {

using json = nlohmann::ordered_json;

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> SplitLines(std::string_view content) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({++number, line});
    pos = end + 1;
  }
  return lines;
}

// Splits an optional "id<TAB>" prefix off a record line.
std::pair<std::string, std::string_view> SplitId(std::string_view line, std::string_view source,
                                                 std::size_t number) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos) return {DefaultUtteranceId(source, number), line};
  std::string id(Trim(line.substr(0, tab)));
  if (id.empty()) id = DefaultUtteranceId(source, number);
  return {id, line.substr(tab + 1)};
}

bool StartsWithTag(std::string_view text, std::string_view tag) {
  text = Trim(text);
  return text.size() >= tag.size() && AsciiLower(text.substr(0, tag.size())) == tag;
}

void ParseChat(std::string_view content, std::string_view source, const LoadOptions &options,
               LoadResult &out) {
  const IpaConverter &converter = options.converter ? *options.converter : IpaConverter::Default();
  std::vector<RawChatUtterance> raw;
  try {
    raw = ParseChatFile(content, source);
  } catch (const ParseError &e) {
    out.errors.push_back({std::string(source), e.line(), e.what()});
    return;
  }
  for (const RawChatUtterance &utt : raw) {
    try {
      OracleUtterance oracle = ProcessUtterance(utt, converter, options.chat);
      if (oracle.is_discarded) {
        out.discarded.push_back(std::move(oracle));
        continue;
      }
      CanonicalSequence seq;
      seq.utt_id = oracle.utt_id;
      for (std::size_t i = 0; i < oracle.words.size(); ++i)
        seq.pairs.push_back({oracle.words[i], oracle.labels[i]});
      out.sequences.push_back(std::move(seq));
    } catch (const Error &e) {
      out.errors.push_back({std::string(source), utt.line_number, e.what()});
    }
  }
}

void ParseMultiSeqRecords(const std::vector<Line> &lines, std::string_view source,
                          LoadResult &out) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line &line = lines[i];
    if (Trim(line.text).empty() || Trim(line.text).front() == '#') continue;
    try {
      auto [id, body] = SplitId(line.text, source, line.number);
      std::size_t tab = body.find('\t');
      if (tab != std::string_view::npos) {
        CanonicalSequence seq =
            CollapseSubwords(ParseMultiSeq(body.substr(0, tab), body.substr(tab + 1)));
        seq.utt_id = id;
        out.sequences.push_back(std::move(seq));
        continue;
      }
      if (!StartsWithTag(body, "asr:"))
        throw FormatError("expected an 'ASR:' row or a tab-separated record", 0);
      std::size_t j = i + 1;
      while (j < lines.size() && Trim(lines[j].text).empty()) ++j;
      if (j == lines.size()) throw FormatError("'ASR:' row without a 'Para:' row", 0);
      std::string_view para = lines[j].text;
      if (std::size_t t = para.find('\t'); t != std::string_view::npos) para = para.substr(t + 1);
      if (!StartsWithTag(para, "para:"))
        throw FormatError("'ASR:' row must be followed by a 'Para:' row", 0);
      i = j;
      CanonicalSequence seq = CollapseSubwords(ParseMultiSeq(body, para));
      seq.utt_id = id;
      out.sequences.push_back(std::move(seq));
    } catch (const Error &e) {
      out.errors.push_back({std::string(source), line.number, e.what()});
    }
  }
}

}  // namespace

CorpusFormat ParseCorpusFormat(std::string_view tag) {
  std::string t = AsciiLower(tag);
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "canonical" || t == "jsonl") return CorpusFormat::kCanonical;
  if (t == "labeled") return CorpusFormat::kLabeled;
  if (t == "single-seq") return CorpusFormat::kSingleSeq;
  if (t == "multi-seq") return CorpusFormat::kMultiSeq;
  if (t == "chat" || t == "cha") return CorpusFormat::kChat;
  throw Error("unknown format '" + std::string(tag) + "'");
}

std::string_view CorpusFormatName(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kCanonical: return "canonical";
    case CorpusFormat::kLabeled: return "labeled";
    case CorpusFormat::kSingleSeq: return "single-seq";
    case CorpusFormat::kMultiSeq: return "multi-seq";
    case CorpusFormat::kChat: return "chat";
  }
  return "canonical";
}

std::string LineDiagnostic::ToString() const {
  std::string out = file.empty() ? "<input>" : file;
  if (line > 0) out += ":" + std::to_string(line);
  return out + ": " + message;
}

std::string SerializeCanonicalRecord(const CanonicalSequence &seq) {
  json record;
  record["id"] = seq.utt_id;
  record["words"] = seq.Words();
  json labels = json::array();
  for (const LabeledWord &p : seq.pairs) labels.push_back(std::string(LabelName(p.label)));
  record["labels"] = std::move(labels);
  return record.dump();
}

CanonicalSequence ParseCanonicalRecord(std::string_view line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error &e) {
    throw Error(std::string("invalid JSON record: ") + e.what());
  }
  if (!record.is_object() || !record.contains("id") || !record.contains("words") ||
      !record.contains("labels"))
    throw Error("record needs \"id\", \"words\" and \"labels\"");
  for (const auto &item : record.items()) {
    if (item.key() != "id" && item.key() != "words" && item.key() != "labels")
      throw Error("unknown record key \"" + item.key() + "\"");
  }
  CanonicalSequence seq;
  try {
    seq.utt_id = record["id"].get<std::string>();
    auto words = record["words"].get<std::vector<std::string>>();
    auto labels = record["labels"].get<std::vector<std::string>>();
    if (words.size() != labels.size()) throw Error("words and labels differ in length");
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::optional<Label> label = ParseLabel(labels[i]);
      if (!label) throw Error("unknown label \"" + labels[i] + "\"");
      if (words[i].empty()) throw Error("empty word");
      seq.pairs.push_back({words[i], *label});
    }
  } catch (const json::exception &e) {
    throw Error(std::string("malformed record: ") + e.what());
  }
  if (seq.utt_id.empty()) throw Error("empty utterance id");
  return seq;
}

std::string SerializeCorpus(std::span<const CanonicalSequence> corpus) {
  std::string out;
  for (const CanonicalSequence &seq : corpus) {
    out += SerializeCanonicalRecord(seq);
    out += '\n';
  }
  return out;
}

void SaveCorpus(const std::filesystem::path &path, std::span<const CanonicalSequence> corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write " + path.string());
  out << SerializeCorpus(corpus);
  if (!out) throw CorpusError("write failed: " + path.string());
}

void CheckUniqueIds(std::span<const CanonicalSequence> corpus) {
  std::unordered_set<std::string> seen;
  for (const CanonicalSequence &seq : corpus) {
    if (!seen.insert(seq.utt_id).second)
      throw CorpusError("duplicate utterance id '" + seq.utt_id + "'");
  }
}

LoadResult ParseCorpusText(std::string_view content, std::string_view source_name,
                           CorpusFormat format, const LoadOptions &options) {
  LoadResult out;
  if (format == CorpusFormat::kChat) {
    ParseChat(content, source_name, options, out);
    return out;
  }
  std::vector<Line> lines = SplitLines(content);
  if (format == CorpusFormat::kMultiSeq) {
    ParseMultiSeqRecords(lines, source_name, out);
    return out;
  }
  for (const Line &line : lines) {
    std::string_view trimmed = Trim(line.text);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      if (format == CorpusFormat::kCanonical) {
        out.sequences.push_back(ParseCanonicalRecord(trimmed));
        continue;
      }
      auto [id, body] = SplitId(line.text, source_name, line.number);
      CanonicalSequence seq = format == CorpusFormat::kLabeled ? ParseLabeledText(body)
                                                               : ParseSingleSeq(body);
      seq.utt_id = id;
      out.sequences.push_back(std::move(seq));
    } catch (const Error &e) {
      out.errors.push_back({std::string(source_name), line.number, e.what()});
    }
  }
  return out;
}

LoadResult LoadCorpusCollecting(const std::filesystem::path &path, CorpusFormat format,
                                const LoadOptions &options) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto &entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      if (format == CorpusFormat::kChat && entry.path().extension() != ".cha") continue;
      files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::exists(path)) {
    files.push_back(path);
  } else {
    throw CorpusError("no such file or directory: " + path.string());
  }

  LoadResult total;
  for (const fs::path &file : files) {
    LoadResult part = ParseCorpusText(ReadFile(file), file.string(), format, options);
    std::move(part.sequences.begin(), part.sequences.end(), std::back_inserter(total.sequences));
    std::move(part.discarded.begin(), part.discarded.end(), std::back_inserter(total.discarded));
    std::move(part.errors.begin(), part.errors.end(), std::back_inserter(total.errors));
  }
  CheckUniqueIds(total.sequences);
  return total;
}

std::vector<CanonicalSequence> LoadCorpus(const std::filesystem::path &path, CorpusFormat format,
                                          const LoadOptions &options) {
  LoadResult result = LoadCorpusCollecting(path, format, options);
  if (!result.errors.empty()) throw CorpusError(result.errors.front().ToString());
  return std::move(result.sequences);
}

PairedCorpus PairById(std::span<const CanonicalSequence> refs,
                      std::span<const CanonicalSequence> hyps, bool strict,
                      PairingReport *report) {
  CheckUniqueIds(refs);
  CheckUniqueIds(hyps);
  std::unordered_map<std::string, std::size_t> hyp_index;
  for (std::size_t i = 0; i < hyps.size(); ++i) hyp_index.emplace(hyps[i].utt_id, i);

  PairingReport local;
  PairedCorpus paired;
  std::unordered_set<std::string> used;
  for (const CanonicalSequence &ref : refs) {
    auto it = hyp_index.find(ref.utt_id);
    if (it == hyp_index.end()) {
      ++local.missing_in_hyp;
      continue;
    }
    paired.refs.push_back(ref);
    paired.hyps.push_back(hyps[it->second]);
    used.insert(ref.utt_id);
  }
  local.paired = paired.size();
  local.missing_in_ref = hyps.size() - used.size();
  if (local.missing_in_hyp > 0)
    local.warnings.push_back(std::to_string(local.missing_in_hyp) +
                             " reference utterance(s) have no hypothesis");
  if (local.missing_in_ref > 0)
    local.warnings.push_back(std::to_string(local.missing_in_ref) +
                             " hypothesis utterance(s) have no reference");
  if (paired.empty()) throw CorpusError("reference and hypothesis share no utterance ids");
  if (strict && !local.warnings.empty())
    throw CorpusError("strict pairing failed: " + Join(local.warnings, "; "));
  if (report) *report = std::move(local);
  return paired;
}

PairedCorpus AggregateFolds(std::span<const PairedCorpus> folds) {
  PairedCorpus out;
  std::unordered_set<std::string> seen;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    for (std::size_t i = 0; i < folds[f].size(); ++i) {
      const std::string &id = folds[f].refs[i].utt_id;
      if (!seen.insert(id).second)
        throw CorpusError("utterance '" + id + "' appears in more than one fold");
      out.refs.push_back(folds[f].refs[i]);
      out.hyps.push_back(folds[f].hyps[i]);
    }
  }
  return out;
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "test";
}

FoldManifest FoldManifest::Parse(std::string_view content, std::string_view source_name) {
  FoldManifest manifest;
  for (const Line &line : SplitLines(content)) {
    std::string_view text = Trim(line.text);
    if (text.empty() || text.front() == '#') continue;
    auto fail = [&](const std::string &msg) {
      throw CorpusError(LineDiagnostic{std::string(source_name), line.number, msg}.ToString());
    };
    std::vector<std::string> fields = SplitWhitespace(text);
    if (fields.size() != 3) fail("expected 'key<TAB>fold<TAB>split'");
    int fold = 0;
    try {
      std::size_t used = 0;
      fold = std::stoi(fields[1], &used);
      if (used != fields[1].size()) fail("fold must be an integer");
    } catch (const std::logic_error &) {
      fail("fold must be an integer");
    }
    std::string split_name = AsciiLower(fields[2]);
    Split split = Split::kTest;
    if (split_name == "train") {
      split = Split::kTrain;
    } else if (split_name == "dev") {
      split = Split::kDev;
    } else if (split_name == "test") {
      split = Split::kTest;
    } else {
      fail("split must be train, dev or test");
    }
    if (!manifest.folds_[fold].emplace(fields[0], split).second)
      fail("'" + fields[0] + "' assigned twice in fold " + std::to_string(fold));
  }
  if (manifest.folds_.empty()) throw CorpusError("manifest has no entries");
  return manifest;
}

FoldManifest FoldManifest::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path), path.string());
}

std::optional<Split> FoldManifest::Lookup(int fold, std::string_view utt_id) const {
  auto f = folds_.find(fold);
  if (f == folds_.end()) return std::nullopt;
  if (auto it = f->second.find(utt_id); it != f->second.end()) return it->second;
  static const std::regex trailing_index("_[0-9]+$");
  std::string speaker = std::regex_replace(std::string(utt_id), trailing_index, "");
  if (auto it = f->second.find(speaker); it != f->second.end()) return it->second;
  return std::nullopt;
}

std::vector<int> FoldManifest::Folds() const {
  std::vector<int> out;
  for (const auto &[fold, _] : folds_) out.push_back(fold);
  return out;
}

void FoldManifest::ValidateCrossValidation() const {
  std::map<std::string, int, std::less<>> test_fold;
  for (const auto &[fold, entries] : folds_) {
    for (const auto &[key, split] : entries) {
      if (split != Split::kTest) continue;
      auto [it, inserted] = test_fold.emplace(key, fold);
      if (!inserted)
        throw CorpusError("'" + key + "' is in the test split of folds " +
                          std::to_string(it->second) + " and " + std::to_string(fold));
    }
  }
}

PairedCorpus FoldManifest::Select(const PairedCorpus &corpus, int fold, Split split) const {
  PairedCorpus out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (Lookup(fold, corpus.refs[i].utt_id) == split) {
      out.refs.push_back(corpus.refs[i]);
      out.hyps.push_back(corpus.hyps[i]);
    }
  }
  return out;
}

}  // namespace paraeval
