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


#ifndef ICSIM_SRC_LINE_READER_H_
#define ICSIM_SRC_LINE_READER_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace icsim::internal {

// Iterates the data lines of a text source: strips a trailing '\r', skips
// blank lines and lines starting with '#'.
class LineReader {
 public:
  LineReader(std::istream& in, std::string_view source)
      : in_(in), source_(source) {}

  bool Next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      return true;
    }
    return false;
  }

  int line_number() const { return line_number_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  int line_number_ = 0;
};

std::vector<std::string_view> Split(std::string_view line, char sep);

}  // namespace icsim::internal

#endif  // ICSIM_SRC_LINE_READER_H_
