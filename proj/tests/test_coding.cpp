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

#include "doctest.h"
#include "pa/certify.hpp"
#include "pa/classify.hpp"
#include "pa/coding.hpp"
#include "pa/deduction.hpp"
#include "pa/errors.hpp"
#include "pa/semantics.hpp"
#include "pa/surface.hpp"
#include "support.hpp"

using namespace pa;
using testing_support::Rng;

namespace {

FinitePredicate from_mask(std::uint64_t bound, std::uint64_t mask) {
  std::vector<std::uint64_t> ms;
  for (std::uint64_t u = 0; u < bound; ++u)
    if (mask >> u & 1) ms.push_back(u);
  return FinitePredicate::from_members(bound, ms);
}

}  // namespace

TEST_CASE("nth_prime") {
  CHECK(nth_prime(0) == 2);
  CHECK(nth_prime(1) == 3);
  CHECK(nth_prime(2) == 5);
  CHECK(nth_prime(4) == 11);
  const auto oracle = testing_support::oracle_primes(200);
  for (std::uint64_t n = 0; n < oracle.size(); ++n) CHECK(nth_prime(n) == oracle[n]);
  for (std::uint64_t n = 0; n < 50; ++n) CHECK(nth_prime(n) < nth_prime(n + 1));
}

TEST_CASE("encode and decode examples") {
  CHECK(encode(FinitePredicate::from_members(0, {})) == Code{1, 0});
  CHECK(encode(FinitePredicate::from_members(4, {1, 3})) == Code{21, 4});
  CHECK(encode(FinitePredicate::from_members(3, {0, 1, 2})) == Code{30, 3});
  CHECK(decode(Code{21, 4}).member_list() == std::vector<std::uint64_t>{1, 3});
  for (std::uint64_t n = 0; n < 8; ++n) CHECK(decode(Code{1, n}).member_list().empty());
  CHECK_THROWS_AS(decode(Code{10, 2}), InvalidCode);
  CHECK_THROWS_AS(decode(Code{0, 2}), InvalidCode);
  CHECK_THROWS_AS(FinitePredicate::from_members(3, {3}), std::invalid_argument);
}

TEST_CASE("property: coding round trip on all predicates of bound 10") {
  const auto primes = testing_support::oracle_primes(11);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const FinitePredicate p = from_mask(10, mask);
    const Code c = encode(p);
    Nat product = 1;
    for (std::uint64_t u = 0; u < 10; ++u)
      if (mask >> u & 1) product *= primes[u];
    CHECK(c.value == product);
    CHECK(decode(c) == p);
    // No prime at or above pi_10 divides the code.
    for (std::uint64_t q = primes[10]; q < 200; ++q)
      if (testing_support::oracle_is_prime(q)) CHECK(c.value % q != 0);
    for (std::uint64_t u = 0; u < 10; ++u)
      CHECK(p.holds(u) == decide_divides(nth_prime(u), c.value));
  }
}

TEST_CASE("abstract encoding") {
  const auto primes = MembershipStructure::primes();
  const auto bits = MembershipStructure::bitmask();
  for (std::uint64_t bound = 0; bound <= 6; ++bound)
    for (std::uint64_t mask = 0; mask < (1u << bound); ++mask) {
      const FinitePredicate p = from_mask(bound, mask);
      CHECK(abstract_encode(p, primes) == encode(p).value);
      const Nat b = abstract_encode(p, bits);
      CHECK(b == Nat(mask));
      for (std::uint64_t u = 0; u < bound; ++u) {
        CHECK(p.holds(u) == bits.member(u, b));
        CHECK(p.holds(u) == primes.member(u, encode(p).value));
      }
    }
  CHECK(abstract_encode(FinitePredicate::from_members(5, {}), bits) == bits.empty);
}

TEST_CASE("property: membership structure axioms on a grid") {
  for (const auto& s : {MembershipStructure::primes(), MembershipStructure::bitmask()}) {
    for (std::uint64_t x = 0; x <= 100; x += 3) CHECK_FALSE(s.member(x, s.empty));
    for (std::uint64_t c = 0; c <= 100; c += 7)
      for (std::uint64_t n = 0; n <= 100; n += 11)
        for (std::uint64_t x = 0; x <= 100; x += 5)
          CHECK(s.member(x, s.extend(n, c)) == (x == n || s.member(x, c)));
  }
}

TEST_CASE("beta function") {
  const BetaPair p = beta_find({5});
  CHECK(beta(p.c, p.d, 0) == 5);
  (void)beta_find({});
  const std::vector<Nat> seq{2, 7, 1};
  const BetaPair q = beta_find(seq);
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(beta(q.c, q.d, i) == seq[i]);
  CHECK(beta(100, 3, 1) == 100 % 7);
}

TEST_CASE("property: beta round trip") {
  Rng rng(88);
  for (int i = 0; i < 500; ++i) {
    std::vector<Nat> seq(testing_support::uniform(rng, 0, 4));
    for (Nat& x : seq) x = testing_support::uniform(rng, 0, 20);
    const BetaPair p = beta_find(seq);
    for (std::size_t j = 0; j < seq.size(); ++j) CHECK(beta(p.c, p.d, j) == seq[j]);
  }
}

TEST_CASE("prime formula") {
  const Formula pi = build_prime_formula();
  CHECK(pi.free_bound() <= 2);
  CHECK(classify_sigma1(pi));
  CHECK(holds_prime_formula(0, 2));
  CHECK_FALSE(holds_prime_formula(0, 3));
  const auto primes = testing_support::oracle_primes(7);
  for (std::uint64_t n = 0; n <= 6; ++n)
    for (std::uint64_t m = 0; m <= 20; ++m)
      CHECK(holds_prime_formula(n, m) == (m == primes[n]));
}

TEST_CASE("prime formula body holds at the beta witnesses of the prime list") {
  const Formula body = build_prime_formula().body().body();
  const auto primes = testing_support::oracle_primes(5);
  for (std::uint64_t n = 0; n < primes.size(); ++n) {
    const std::vector<Nat> seq(primes.begin(), primes.begin() + n + 1);
    const BetaPair w = beta_find(seq);
    CHECK(eval_delta0(Environment{{w.d, w.c, n, primes[n]}}, body));
    CHECK_FALSE(eval_delta0(Environment{{w.d, w.c, n, primes[n] + 1}}, body));
  }
}

TEST_CASE("represent_finite_predicate") {
  const auto single = FinitePredicate::from_members(3, {2});
  CHECK(print_formula(represent_finite_predicate(single)) == "v0 = 2");
  const Certificate c = certify_instance(single, 2);
  CHECK(theory_check(c.axioms_used(), c.proof(), c.goal(), Flavor::Intuitionistic));

  const auto empty = FinitePredicate::from_members(3, {});
  CHECK(represent_finite_predicate(empty) == Formula::falsum());
  for (std::uint64_t u = 0; u < 3; ++u) {
    const Certificate n = certify_instance(empty, u);
    CHECK(n.goal() == Formula::impl(Formula::falsum(), Formula::falsum()));
  }

  const auto two = FinitePredicate::from_members(3, {0, 2});
  CHECK(represent_finite_predicate(two).is(FormulaKind::Disj));
  for (std::uint64_t u = 0; u < 3; ++u) {
    const Certificate k = certify_instance(two, u);
    CHECK(theory_check(k.axioms_used(), k.proof(), k.goal(), Flavor::Intuitionistic));
    const Formula inst = single_subst(represent_finite_predicate(two), num(u));
    CHECK(k.goal() == (two.holds(u) ? inst : Formula::impl(inst, Formula::falsum())));
  }
}
