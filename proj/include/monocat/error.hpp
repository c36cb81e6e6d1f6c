//
// Copyright 2026 The monocat Authors
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
//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monocat {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // eta/eps with n = 0
  class InvalidGenerator : public Error {
   public:
    using Error::Error;
  };

  class NotComposable : public Error {
   public:
    using Error::Error;
  };

  class InvalidStep : public Error {
   public:
    using Error::Error;
  };

  class NotEqualShape : public Error {
   public:
    using Error::Error;
  };

  // Dimension guard of the vector-space evaluation.
  class TooLarge : public Error {
   public:
    using Error::Error;
  };

  class NotInvertible : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), _pos(pos) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace monocat
