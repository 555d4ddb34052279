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

#include "polarity/errors.h"

namespace polarity {

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) != nullptr) return exit_code::kIoError;
  // Everything else is a problem with the data handed to us.
  return exit_code::kDataError;
}

}  // namespace polarity
