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

#ifndef PARAEVAL_ERRORS_H_
#define PARAEVAL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paraeval {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed transcript input. Carries the 1-based line number when known
/// (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed model output. Carries the 0-based token index of the offending
/// token.
class FormatError : public Error {
 public:
  FormatError(const std::string &message, std::size_t token_index)
      : Error("token " + std::to_string(token_index) + ": " + message),
        token_index_(token_index) {}
  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

/// IPA text that cannot be segmented with the loaded table. `offset` counts
/// code points into the stripped input.
class ConversionError : public Error {
 public:
  ConversionError(const std::string &symbol, std::size_t offset)
      : Error("unmappable IPA symbol '" + symbol + "' at offset " +
              std::to_string(offset)),
        symbol_(symbol),
        offset_(offset) {}
  ConversionError(const std::string &message)
      : Error(message), offset_(0) {}
  const std::string &symbol() const { return symbol_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string symbol_;
  std::size_t offset_;
};

/// Metric preconditions violated (empty corpora, mismatched sizes, ...).
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Corpus loading, pairing and fold bookkeeping failures.
class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace paraeval

#endif  // PARAEVAL_ERRORS_H_
