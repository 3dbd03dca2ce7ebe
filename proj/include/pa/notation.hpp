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

// Derived notation. The kernel stores only the seven formula constructors;
// everything here expands into them, and the match_* functions recognise the
// exact expansion shapes again.

#ifndef PA_NOTATION_HPP_
#define PA_NOTATION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pa/syntax.hpp"

namespace pa {

// ~f := f -> false
Formula neg(Formula f);

// a < b  := exists k. S(a + k) = b
// a <= b := exists k. a + k = b
// a | b  := exists k. a * k = b
// a and b live in the outer scope; they are shifted under the new binder.
Formula lt(const Term& a, const Term& b);
Formula le(const Term& a, const Term& b);
Formula divides(const Term& a, const Term& b);

// Binary relation recognised from its expansion; operands in outer scope.
struct Relation {
  Term left;
  Term right;
};
std::optional<Formula> match_neg(const Formula& f);
std::optional<Relation> match_lt(const Formula& f);
std::optional<Relation> match_le(const Formula& f);
std::optional<Relation> match_divides(const Formula& f);

// forall v. v < bound -> body   and   exists v. v < bound /\ body
// `bound` is in the outer scope; `body` is under the binder (Var 0 = v).
Formula bounded_forall(const Term& bound, Formula body);
Formula bounded_exists(const Term& bound, Formula body);

struct BoundedQuantifier {
  Term bound;    // outer scope
  Formula body;  // Var 0 is the bound variable
};
std::optional<BoundedQuantifier> match_bounded_forall(const Formula& f);
std::optional<BoundedQuantifier> match_bounded_exists(const Formula& f);

// Right-nested disjunction d0 \/ (d1 \/ (... \/ dn)); false when empty.
Formula disjunction(const std::vector<Formula>& disjuncts);
Formula conjunction(const std::vector<Formula>& conjuncts);

Formula forall_n(std::size_t n, Formula body);
Formula exists_n(std::size_t n, Formula body);

}  // namespace pa

#endif  // PA_NOTATION_HPP_
