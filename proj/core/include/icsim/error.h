// Copyright 2026 The icsim Authors
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

#ifndef ICSIM_ERROR_H_
#define ICSIM_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace icsim {

// Base of every exception thrown by the library. The subclasses map one to
// one onto the CLI exit-code classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: cycles, dangling references, duplicate ids,
// empty inputs, a model with no attached counts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// A line of an input file does not follow its format. The message carries
// "source:line: ".
class ParseError : public IoError {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : IoError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A query named an unknown word or concept, or cannot be answered from the
// model.
class QueryError : public Error {
 public:
  using Error::Error;
};

// A word has no senses in the taxonomy.
class UnknownWordError : public QueryError {
 public:
  explicit UnknownWordError(std::string word)
      : QueryError("word not in taxonomy: '" + word + "'"),
        word_(std::move(word)) {}

  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// Correlation cannot be computed (too few rows, zero variance, mismatched
// lengths).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace icsim

#endif  // ICSIM_ERROR_H_
