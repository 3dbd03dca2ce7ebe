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

#include "pa/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace pa {

Nat cantor_pair(const Nat& a, const Nat& b) {
  const Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  // w = floor((sqrt(8n + 1) - 1) / 2)
  Nat w = (boost::multiprecision::sqrt(Nat(8 * n + 1)) - 1) / 2;
  const Nat t = w * (w + 1) / 2;
  Nat b = n - t;
  Nat a = w - b;
  return {std::move(a), std::move(b)};
}

Nat parse_nat(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a natural number: " + digits);
  return Nat(digits);
}

std::string to_string(const Nat& n) { return n.str(); }

}  // namespace pa
