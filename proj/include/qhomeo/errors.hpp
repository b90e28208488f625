// Copyright 2026 The qhomeo Authors
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

#include <stdexcept>
#include <string>

namespace qhomeo {

/// Bad caller input: wrong sizes, out-of-range parameters, malformed specs.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &what)
        : std::invalid_argument(what) {}
};

/// A numerically recovered quantity failed its own consistency guard
/// (non-integer exponent, broken group closure, ...).
class ConsistencyError : public std::runtime_error {
  public:
    explicit ConsistencyError(const std::string &what)
        : std::runtime_error(what) {}
};

} // namespace qhomeo
