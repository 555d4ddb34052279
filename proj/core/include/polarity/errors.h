// Copyright 2026 The polarity Authors
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

// Exception types thrown by the polarity library.  Each maps onto one of
// the sysexits-style process exit codes used by the command-line tool.

#ifndef POLARITY_ERRORS_H_
#define POLARITY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace polarity {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: empty or non-finite signals, out-of-range
// configuration, signals too short for the requested analysis.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Missing, unreadable or malformed files.  The message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed manifest or configuration text.
class DataError : public Error {
 public:
  using Error::Error;
};

// A statistic that does not exist for the given sample (e.g. skewness of a
// constant sequence).
class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kIoError = 74;
}  // namespace exit_code

// Maps an exception to the exit code the CLI reports for it.
int ExitCodeFor(const std::exception& e);

}  // namespace polarity

#endif  // POLARITY_ERRORS_H_
