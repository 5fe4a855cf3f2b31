/* Copyright 2026 The occbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef OCCBENCH_ERROR_HPP_
#define OCCBENCH_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace occbench {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class EmptyMaskError : public Error {
 public:
  using Error::Error;
};

class DegenerateTransformError : public Error {
 public:
  using Error::Error;
};

class UndefinedDegradationError : public Error {
 public:
  using Error::Error;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of attempts without landing in the bin.
class GenerationExhaustedError : public Error {
 public:
  GenerationExhaustedError(const std::string& what, int attempts_used)
      : Error(what), attempts_used_(attempts_used) {}

  int attempts_used() const { return attempts_used_; }

 private:
  int attempts_used_;
};

}  // namespace occbench

#endif  // OCCBENCH_ERROR_HPP_
