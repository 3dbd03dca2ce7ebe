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

#ifndef PA_NATURAL_HPP_
#define PA_NATURAL_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace pa {

// Unbounded natural numbers. Values in the standard model, beta-function
// parameters and enumeration indices all outgrow 64 bits quickly.
using Nat = boost::multiprecision::cpp_int;

// Cantor pairing: a bijection N x N -> N.
Nat cantor_pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> cantor_unpair(const Nat& n);

Nat parse_nat(const std::string& digits);
std::string to_string(const Nat& n);

}  // namespace pa

#endif  // PA_NATURAL_HPP_
