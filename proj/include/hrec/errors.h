// Copyright 2026 The hrec Authors
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

#ifndef HREC_ERRORS_H_
#define HREC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix shape is not one of the supported small dimensions, or operands
// disagree in dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A precondition on a value (range, normalization, Hermiticity) failed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

// The accept branch of a heralded operation has (numerically) zero weight.
class DegenerateHeraldError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure did not reach its accuracy target.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  FileError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace hrec

#endif  // HREC_ERRORS_H_
