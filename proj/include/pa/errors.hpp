// Copyright 2026 The arith-kernel Authors. All Rights Reserved.
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

#ifndef PA_ERRORS_HPP_
#define PA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pa {

class NotDelta0 : public std::invalid_argument {
 public:
  NotDelta0() : std::invalid_argument("formula is not Delta0") {}
};

class NotSigma1 : public std::invalid_argument {
 public:
  NotSigma1() : std::invalid_argument("formula is not Sigma1") {}
};

class NotClosed : public std::invalid_argument {
 public:
  NotClosed() : std::invalid_argument("formula is not closed") {}
};

class ArityError : public std::invalid_argument {
 public:
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

class EqualInputs : public std::invalid_argument {
 public:
  EqualInputs() : std::invalid_argument("numerals are equal") {}
};

class InvalidCode : public std::invalid_argument {
 public:
  explicit InvalidCode(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pa

#endif  // PA_ERRORS_HPP_
