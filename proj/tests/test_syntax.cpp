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

#include <random>

#include "doctest.h"
#include "pa/classify.hpp"
#include "pa/notation.hpp"
#include "pa/surface.hpp"
#include "pa/syntax.hpp"
#include "support.hpp"

using namespace pa;
using testing_support::Rng;

namespace {

Term V(std::size_t i) { return Term::var(i); }
Formula F(const char* s) { return parse_formula_canonical(s); }

// Reference lookup sigma(n) straight from the representation.
Term lookup(const Substitution& s, std::size_t n) {
  if (n < s.prefix.size()) return s.prefix[n];
  return V(n - s.prefix.size() + s.shift);
}

}  // namespace

TEST_CASE("numerals") {
  CHECK(num(0) == Term::zero());
  CHECK(num(2) == Term::succ(Term::succ(Term::zero())));
  CHECK(numeral_value(num(17)) == 17u);
  CHECK_FALSE(numeral_value(Term::add(num(1), num(1))).has_value());
  for (std::uint64_t a = 0; a < 30; ++a)
    for (std::uint64_t b = 0; b < 30; ++b) CHECK((num(a) == num(b)) == (a == b));
}

TEST_CASE("deep numerals do not exhaust the stack") {
  const Term big = num(999999);
  CHECK(numeral_value(big) == 999999u);
  CHECK(big == num(999999));
  CHECK_FALSE(big == num(999998));
  CHECK(Term::succ(Term::add(num(999998), num(1))) == Term::succ(Term::add(num(999998), num(1))));
  { const Term scratch = Term::succ(num(999999)); }
  CHECK(print_term(big) == "999999");
}

TEST_CASE("subst_term examples") {
  const auto id = Substitution::identity();
  CHECK(subst_term(V(0), id) == V(0));
  CHECK(subst_term(Term::add(V(0), V(1)), Substitution::cons(num(3), id)) ==
        Term::add(num(3), V(0)));
  Rng rng(11);
  for (int i = 0; i < 50; ++i)
    CHECK(subst_term(num(5), testing_support::random_subst(rng)) == num(5));
}

TEST_CASE("subst_form examples") {
  const auto id = Substitution::identity();
  CHECK(subst_form(Formula::forall(Formula::eq(V(0), V(1))),
                   Substitution::cons(num(3), id)) ==
        Formula::forall(Formula::eq(V(0), num(3))));
  Rng rng(12);
  for (int i = 0; i < 20; ++i)
    CHECK(subst_form(Formula::falsum(), testing_support::random_subst(rng)) ==
          Formula::falsum());
}

TEST_CASE("shift and single substitution") {
  CHECK(shift_form(Formula::eq(V(0), V(0))) == Formula::eq(V(1), V(1)));
  CHECK(shift_form(Formula::forall(Formula::eq(V(0), V(1)))) ==
        Formula::forall(Formula::eq(V(0), V(2))));
  const Formula closed = Formula::eq(num(2), Term::add(num(1), num(1)));
  CHECK(shift_form(closed) == closed);
  CHECK(single_subst(Formula::eq(V(0), V(0)), num(2)) ==
        Formula::eq(num(2), num(2)));
  CHECK(single_subst(Formula::exists(Formula::eq(V(0), V(1))), num(4)) ==
        Formula::exists(Formula::eq(V(0), num(4))));
  CHECK(single_subst(closed, V(3)) == closed);
}

TEST_CASE("max_free_index") {
  CHECK_FALSE(max_free_index(Formula::eq(num(0), num(0))).has_value());
  CHECK(max_free_index(Formula::forall(Formula::eq(V(0), V(2)))) == 1u);
  CHECK(max_free_index(Formula::eq(V(3), V(0))) == 3u);
}

TEST_CASE("substitution representation") {
  const auto id = Substitution::identity();
  CHECK(id.is_identity());
  CHECK(Substitution::lift(1)(4) == V(5));
  const auto s = Substitution::cons(num(7), Substitution::lift(2));
  CHECK(s(0) == num(7));
  CHECK(s(1) == V(2));
  CHECK(s(5) == V(6));
}

TEST_CASE("property: substitution laws on random formulas") {
  Rng rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = testing_support::random_formula(rng, 6);
    const auto s = testing_support::random_subst(rng);
    const auto t = testing_support::random_subst(rng);
    CHECK(subst_form(f, Substitution::identity()) == f);
    CHECK(subst_form(subst_form(f, s), t) == subst_form(f, compose(s, t)));
    const Term u = testing_support::random_term(rng, 2, 3);
    CHECK(subst_form(shift_form(f), Substitution::cons(u, Substitution::identity())) == f);
    if (!max_free_index(f)) CHECK(subst_form(f, s) == f);
  }
}

TEST_CASE("property: compose agrees with pointwise definition") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto s = testing_support::random_subst(rng);
    const auto t = testing_support::random_subst(rng);
    const auto c = compose(s, t);
    for (std::size_t n = 0; n < 12; ++n)
      CHECK(lookup(c, n) == subst_term(lookup(s, n), t));
  }
}

TEST_CASE("classify examples") {
  CHECK(classify_delta0(Formula::eq(num(1), num(1))));
  const Formula bex = Formula::exists(Formula::conj(
      lt(V(0), num(5)), Formula::eq(Term::add(V(0), V(0)), num(4))));
  CHECK(classify_delta0(bex));
  CHECK_FALSE(classify_delta0(Formula::exists(Formula::eq(V(0), num(2)))));
  CHECK(classify_sigma1(bex));
  CHECK(classify_sigma1(Formula::exists(Formula::exists(bex))));
  CHECK_FALSE(classify_sigma1(Formula::forall(bex)));
  CHECK_FALSE(classify_delta0(F("forall x. x = x")));
  // The bound may not mention the bound variable itself.
  CHECK_FALSE(classify_delta0(
      Formula::exists(Formula::conj(lt(V(0), V(0)), Formula::falsum()))));
}

TEST_CASE("property: delta0 implies sigma1") {
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing_support::random_delta0(rng, 4, 2, 5);
    CHECK(classify_delta0(f));
    CHECK(classify_sigma1(f));
    const Formula g = testing_support::random_formula(rng, 4);
    if (classify_delta0(g)) CHECK(classify_sigma1(g));
  }
}
