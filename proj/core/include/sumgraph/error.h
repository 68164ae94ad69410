// Copyright 2026 The sumgraph Authors.
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

#ifndef SUMGRAPH_ERROR_H_
#define SUMGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace sumgraph {

enum class ErrorKind {
  kInvalidArgument,  // bad configuration or parameter
  kIo,               // file missing or unreadable
  kFormat,           // malformed input file
  kCorpus,           // corpus layout problem
};

// All library failures are reported by throwing Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char *ErrorKindName(ErrorKind kind);

}  // namespace sumgraph

#endif  // SUMGRAPH_ERROR_H_
