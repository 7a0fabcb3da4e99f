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

#ifndef PARAEVAL_CORPUS_H_
#define PARAEVAL_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paraeval/canonical.h"
#include "paraeval/chat_parser.h"
#include "paraeval/ipa_converter.h"

namespace paraeval {

enum class CorpusFormat { kCanonical, kLabeled, kSingleSeq, kMultiSeq, kChat };

/// "canonical", "labeled", "single-seq", "multi-seq" or "chat".
CorpusFormat ParseCorpusFormat(std::string_view tag);
std::string_view CorpusFormatName(CorpusFormat format);

struct LoadOptions {
  const IpaConverter *converter = nullptr;  // nullptr: bundled tables
  ChatOptions chat;
};

struct LineDiagnostic {
  std::string file;
  std::size_t line = 0;
  std::string message;

  std::string ToString() const;
};

struct LoadResult {
  std::vector<CanonicalSequence> sequences;
  std::vector<OracleUtterance> discarded;  // chat input only
  std::vector<LineDiagnostic> errors;
};

/// Parses one corpus file's contents, collecting per-record errors instead
/// of stopping at the first one. Record ids default to
/// "<stem>_<line number>" when the input has none.
///
/// Text formats take one record per line, optionally prefixed by
/// "utt_id<TAB>". Multi-seq records are either "id<TAB>asr<TAB>para" or an
/// "ASR: ..." line followed by a "Para: ..." line.
LoadResult ParseCorpusText(std::string_view content, std::string_view source_name,
                           CorpusFormat format, const LoadOptions &options = {});

/// Loads a file, or for a directory every regular file in it (only *.cha for
/// chat input) in name order. Duplicate ids throw CorpusError.
LoadResult LoadCorpusCollecting(const std::filesystem::path &path, CorpusFormat format,
                                const LoadOptions &options = {});

/// LoadCorpusCollecting that throws CorpusError on the first diagnostic.
std::vector<CanonicalSequence> LoadCorpus(const std::filesystem::path &path,
                                          CorpusFormat format,
                                          const LoadOptions &options = {});

/// One JSON object per line: {"id":..., "words":[...], "labels":[...]}.
std::string SerializeCanonicalRecord(const CanonicalSequence &seq);
CanonicalSequence ParseCanonicalRecord(std::string_view line);
void SaveCorpus(const std::filesystem::path &path, std::span<const CanonicalSequence> corpus);
std::string SerializeCorpus(std::span<const CanonicalSequence> corpus);

/// Throws CorpusError naming the first repeated id.
void CheckUniqueIds(std::span<const CanonicalSequence> corpus);

/// Reference/hypothesis pairs sharing utterance ids.
struct PairedCorpus {
  std::vector<CanonicalSequence> refs;
  std::vector<CanonicalSequence> hyps;

  std::size_t size() const { return refs.size(); }
  bool empty() const { return refs.empty(); }
};

struct PairingReport {
  std::size_t paired = 0;
  std::size_t missing_in_hyp = 0;  // reference ids without a hypothesis
  std::size_t missing_in_ref = 0;  // hypothesis ids without a reference
  std::vector<std::string> warnings;
};

/// Inner join on utt_id in reference order. Unmatched ids become warnings,
/// or a CorpusError in strict mode. An empty intersection always throws.
PairedCorpus PairById(std::span<const CanonicalSequence> refs,
                      std::span<const CanonicalSequence> hyps, bool strict = false,
                      PairingReport *report = nullptr);

/// Concatenates per-fold test corpora. Throws CorpusError when an id occurs
/// in more than one fold.
PairedCorpus AggregateFolds(std::span<const PairedCorpus> folds);

enum class Split { kTrain, kDev, kTest };
std::string_view SplitName(Split split);

/// Per-fold split assignment of utterances or speakers. Read from a TSV
/// with lines "key<TAB>fold<TAB>split"; '#' starts a comment.
class FoldManifest {
 public:
  static FoldManifest Parse(std::string_view content, std::string_view source_name = "");
  static FoldManifest Load(const std::filesystem::path &path);

  /// Looks up the utterance id, then its speaker key (the id with a
  /// trailing "_<digits>" removed).
  std::optional<Split> Lookup(int fold, std::string_view utt_id) const;

  std::vector<int> Folds() const;

  /// Throws CorpusError if a key is in the test split of two folds.
  void ValidateCrossValidation() const;

  /// Pairs whose id maps to `split` in `fold`.
  PairedCorpus Select(const PairedCorpus &corpus, int fold, Split split) const;

 private:
  std::map<int, std::map<std::string, Split, std::less<>>> folds_;
};

}  // namespace paraeval

#endif  // PARAEVAL_CORPUS_H_
