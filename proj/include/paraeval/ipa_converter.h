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

#ifndef PARAEVAL_IPA_CONVERTER_H_
#define PARAEVAL_IPA_CONVERTER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace paraeval {

/// Non-empty sequence of phones from the converter's inventory. Only
/// IpaConverter hands these out, so the invariant holds for any instance
/// obtained from it.
struct PhoneSequence {
  std::vector<std::string> phones;
  bool operator==(const PhoneSequence &) const = default;
};

/// One greedy match: the IPA text consumed and the phones it produced.
struct IpaSegment {
  std::string ipa;
  std::vector<std::string> phones;
  std::size_t offset = 0;  // code points into the stripped input
};

/// Maps IPA transcriptions of non-word productions to grapheme pseudo-words
/// through an ARPAbet-style phone sequence. Both mapping tables are plain
/// two-column UTF-8 files so they can be extended without recompiling.
///
/// Immutable after construction; all members are safe to call concurrently.
class IpaConverter {
 public:
  /// Builds a converter from table contents. The phone->grapheme table also
  /// defines the phone inventory; every phone in the IPA table must be in
  /// it. Throws ParseError / ConversionError on bad tables.
  static IpaConverter FromTableText(std::string_view ipa_table,
                                    std::string_view phone_table);
  static IpaConverter FromFiles(const std::filesystem::path &ipa_table,
                                const std::filesystem::path &phone_table);

  /// Converter over the tables bundled with the toolkit (data/*.tsv).
  static const IpaConverter &Default();

  /// Removes stress, length and syllable marks, aspiration, glottal stops
  /// and combining diacritics.
  static std::u32string StripMarks(std::u32string_view ipa);

  /// Greedy longest-match segmentation of `ipa` (after StripMarks).
  /// Concatenating the returned `ipa` fields reproduces the stripped input.
  std::vector<IpaSegment> Segment(std::string_view ipa) const;

  PhoneSequence IpaToPhones(std::string_view ipa) const;
  std::string PhonesToGraphemes(const PhoneSequence &phones) const;
  std::string IpaToPseudoword(std::string_view ipa) const;

  /// Validates `phones` against the inventory.
  PhoneSequence MakePhoneSequence(std::vector<std::string> phones) const;

  bool InInventory(std::string_view phone) const;

 private:
  IpaConverter() = default;

  std::map<std::u32string, std::vector<std::string>> ipa_to_phones_;
  std::map<std::string, std::string, std::less<>> phone_to_grapheme_;
  std::size_t max_key_length_ = 0;
};

}  // namespace paraeval

#endif  // PARAEVAL_IPA_CONVERTER_H_
