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

// Prime-product coding of finite predicates, an abstract notion of finite
// sets, Goedel's beta function and an explicit Sigma1 formula for the prime
// enumeration.

#ifndef PA_CODING_HPP_
#define PA_CODING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pa/certify.hpp"
#include "pa/errors.hpp"
#include "pa/natural.hpp"
#include "pa/syntax.hpp"

namespace pa {

// pi_0 = 2, pi_1 = 3, ...
std::uint64_t nth_prime(std::uint64_t n);

struct FinitePredicate {
  std::uint64_t bound = 0;
  std::vector<bool> members;  // size == bound

  // Throws std::invalid_argument for members at or above the bound.
  static FinitePredicate from_members(std::uint64_t bound,
                                      const std::vector<std::uint64_t>& ms);
  bool holds(std::uint64_t u) const { return u < bound && members[u]; }
  std::vector<std::uint64_t> member_list() const;

  friend bool operator==(const FinitePredicate&, const FinitePredicate&) = default;
};

struct Code {
  Nat value = 1;
  std::uint64_t bound = 0;

  friend bool operator==(const Code&, const Code&) = default;
};

Code encode(const FinitePredicate& p);
// Throws InvalidCode when value is 0 or has a prime factor >= pi_bound.
FinitePredicate decode(const Code& c);

struct MembershipStructure {
  Nat empty;
  std::function<Nat(std::uint64_t, const Nat&)> extend;
  std::function<bool(std::uint64_t, const Nat&)> member;

  // empty = 1, extend multiplies by pi_n, membership is divisibility.
  static MembershipStructure primes();
  // empty = 0, extend sets bit n, membership tests it.
  static MembershipStructure bitmask();
};

Nat abstract_encode(const FinitePredicate& p, const MembershipStructure& s);

// c mod (1 + (i + 1) * d)
Nat beta(const Nat& c, const Nat& d, const Nat& i);

struct BetaPair {
  Nat c;
  Nat d;
};
BetaPair beta_find(const std::vector<Nat>& seq);

// Pi(x, y) with x = index 0 and y = index 1: y is the prime pi_x.
Formula build_prime_formula();

// Truth of Pi(num n, num m) in the standard model. The beta parameters are
// not searched directly: candidate prime chains 2 = a_0, ..., a_n = m are
// grown with the formula's own successor clause and encoded with beta_find,
// then the body is evaluated at those parameters.
bool holds_prime_formula(std::uint64_t n, std::uint64_t m);

// x = u_1 \/ ... \/ x = u_k over the members (false when there are none),
// with x = index 0.
Formula represent_finite_predicate(const FinitePredicate& p);

// Q proves phi_p(num u) for members and ~phi_p(num u) for non-members.
Certificate certify_instance(const FinitePredicate& p, std::uint64_t u);

}  // namespace pa

#endif  // PA_CODING_HPP_
