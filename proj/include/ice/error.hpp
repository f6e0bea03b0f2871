//
// Copyright 2026 The ICE Toolkit Authors
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
//

#ifndef ICE_ERROR_HPP_
#define ICE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ice {

// Malformed or inconsistent input data (bad records, ragged rows, unknown
// table ids, non-finite vectors). Maps to exit code 2 at the CLI.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an API precondition (bad permutation, zero-norm vector,
// invalid training configuration).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ice

#endif  // ICE_ERROR_HPP_
