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

// The arithmetic theories FA, Q and PA, plus the formula constructions built
// on top of them: induction instances, Sigma1 compression, Rosser formulas
// and an enumeration of all formulas.

#ifndef PA_ARITHMETIC_HPP_
#define PA_ARITHMETIC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "pa/errors.hpp"
#include "pa/natural.hpp"
#include "pa/notation.hpp"
#include "pa/syntax.hpp"

namespace pa {

// Positions of the axioms in axioms(TheoryName::FA); Q appends CaseAnalysis.
enum class Axiom : std::size_t {
  Disjointness,  // forall x. S x = 0 -> false
  Injectivity,   // forall x y. S x = S y -> x = y
  AddBase,       // forall x. 0 + x = x
  AddRec,        // forall x y. S x + y = S (x + y)
  MulBase,       // forall x. 0 * x = 0
  MulRec,        // forall x y. S x * y = y + x * y
  Refl,          // forall x. x = x
  Sym,           // forall x y. x = y -> y = x
  Trans,         // forall x y z. x = y -> y = z -> x = z
  SuccEq,        // forall x y. x = y -> S x = S y
  AddEq,         // forall x y u v. x = u -> y = v -> x + y = u + v
  MulEq,         // forall x y u v. x = u -> y = v -> x * y = u * v
  CaseAnalysis,  // forall x. x = 0 \/ exists y. x = S y
};

inline constexpr std::size_t kFaAxiomCount = 12;
inline constexpr std::size_t kQAxiomCount = 13;

enum class TheoryName { FA, Q, PA };

const Formula& axiom(Axiom a);
// FA: 12 axioms, Q: 13. PA yields the FA core; instances are added per use.
std::vector<Formula> axioms(TheoryName name);

// phi[0] -> (forall x. phi[x] -> phi[S x]) -> forall x. phi[x]
// Throws ArityError if phi has a free variable other than 0.
Formula induction_instance(const Formula& phi);
bool is_induction_instance(const Formula& f);

// A finite axiom list: the core of FA or Q, or FA plus the induction
// instances a derivation actually uses.
struct Theory {
  TheoryName name;
  std::vector<Formula> core;
  std::vector<Formula> instances;

  static Theory fa();
  static Theory q();
  static Theory pa(const std::vector<Formula>& motives = {});

  std::vector<Formula> axioms() const;
  // Membership in the full (possibly infinite) theory.
  bool contains(const Formula& f) const;
};

std::string theory_label(TheoryName name);

// exists x. exists x1 < x ... exists xn < x. body  for a Sigma1 input
// exists x1 ... exists xn. body. Throws NotSigma1.
Formula sigma1_compress(const Formula& f);

// (alpha < beta)(x). alpha and beta are binary with index 0 the witness
// ("time") slot and index 1 the argument x; the result is unary in x.
// Delta0 inputs produce the bounded form
//   exists t. alpha(t, x) /\ forall v < S t. ~beta(v, x)
// which is Sigma1; other inputs produce the literal form.
Formula rosser(const Formula& alpha, const Formula& beta);
//   exists t. alpha(t, x) /\ forall v. beta(v, x) -> t < v
Formula rosser_literal(const Formula& alpha, const Formula& beta);

// A bijection between N and all terms / formulas.
Term enumerate_term(const Nat& n);
Nat term_index(const Term& t);
Formula enumerate_formula(const Nat& n);
Nat formula_index(const Formula& f);

}  // namespace pa

#endif  // PA_ARITHMETIC_HPP_
