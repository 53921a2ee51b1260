// Copyright 2026 The svominer Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svominer {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data file (dictionary, model, rules, corpus, gold set) failed to parse.
// The message always names the source and, when known, the line.
class LoadError : public Error {
 public:
  LoadError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  LoadError(const std::string& source, const std::string& what)
      : Error(source + ": " + what), source_(source), line_(0) {}

  const std::string& source() const noexcept { return source_; }
  // 0 when the error is not tied to one line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Invalid parameter or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace svominer
