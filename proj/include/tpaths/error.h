// Copyright 2026 The tpaths Authors
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

#ifndef TPATHS_ERROR_H_
#define TPATHS_ERROR_H_

#include <stdexcept>
#include <string>

namespace tpaths {

enum class Errc {
  kUnknownVertex,
  kUnknownEdge,
  kInvalidArgument,
  kPrecondition,
  kSizeLimit,
  kParse,
};

const char* errc_name(Errc code);

// Single exception type for every library failure; `code()` tells callers
// (the CLI in particular) how to classify it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the graph-file and certificate readers. `line()` is 1-based, or
// 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(Errc::kParse, what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tpaths

#endif  // TPATHS_ERROR_H_
