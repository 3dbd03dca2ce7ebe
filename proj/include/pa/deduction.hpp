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

// Natural-deduction derivations and the checker that validates them.
//
// A Proof stores no conclusions. The checker works bidirectionally: it checks
// introduction rules against a known goal and infers the conclusion of
// elimination chains (axiom, forall_elim, proj1/2, impl_elim, peirce).
// Premises of proj1/2, forall_elim and exists_elim must be inferable;
// impl_elim and disj_elim carry their cut formulas explicitly.

#ifndef PA_DEDUCTION_HPP_
#define PA_DEDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pa/syntax.hpp"

namespace pa {

enum class Rule : std::uint8_t {
  Axiom,
  Exfalso,
  ImplIntro,
  ImplElim,
  ConjIntro,
  Proj1,
  Proj2,
  DisjIntroL,
  DisjIntroR,
  DisjElim,
  ForallIntro,
  ForallElim,
  ExistsIntro,
  ExistsElim,
  Peirce,
};

inline constexpr std::size_t kRuleCount = 15;

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

class Proof {
 public:
  // Hypothesis i of the context; 0 is the most recently added one.
  static Proof axiom(std::size_t index);
  static Proof exfalso(Proof p);
  static Proof impl_intro(Proof body);
  // From p : antecedent -> goal and q : antecedent.
  static Proof impl_elim(Formula antecedent, Proof p, Proof q);
  static Proof conj_intro(Proof p, Proof q);
  static Proof proj1(Proof p);
  static Proof proj2(Proof p);
  // disj_intro_l(B, p : A) : A \/ B    disj_intro_r(A, p : B) : A \/ B
  static Proof disj_intro_l(Formula other, Proof p);
  static Proof disj_intro_r(Formula other, Proof p);
  static Proof disj_elim(Formula left, Formula right, Proof p, Proof q,
                         Proof r);
  static Proof forall_intro(Proof p);
  static Proof forall_elim(Term t, Proof p);
  static Proof exists_intro(Term t, Proof p);
  static Proof exists_elim(Proof p, Proof q);
  // ((phi -> psi) -> phi) -> phi, classical mode only.
  static Proof peirce(Formula phi, Formula psi);

  Rule rule() const;
  std::size_t index() const;
  const std::vector<Proof>& premises() const;
  const std::vector<Formula>& formulas() const;
  const Term& term() const;
  std::size_t size() const;

  friend bool operator==(const Proof& a, const Proof& b);

 private:
  struct Node;
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Rewrites every term and formula stored in the proof with sigma, lifting it
// under forall_intro and the second premise of exists_elim.
Proof subst_proof(const Proof& p, const Substitution& sigma);

// Most recent hypothesis first: Axiom(0) is context[0].
using Context = std::vector<Formula>;

enum class Flavor : std::uint8_t { Intuitionistic, Classical };

struct CheckError {
  // Child positions from the root to the failing node.
  std::vector<std::size_t> path;
  std::string reason;

  std::string describe() const;
};

struct CheckResult {
  std::optional<CheckError> error;
  bool ok() const { return !error.has_value(); }
  explicit operator bool() const { return ok(); }
};

CheckResult check(const Context& ctx, const Proof& p, const Formula& goal,
                  Flavor flavor);

// `theory` is the finite axiom subset the derivation draws on, in context
// order.
CheckResult theory_check(const std::vector<Formula>& theory, const Proof& p,
                         const Formula& goal, Flavor flavor);

// Conclusion of an inferable proof, or nullopt when the proof does not check
// or its conclusion cannot be determined without a goal.
std::optional<Formula> infer(const Context& ctx, const Proof& p, Flavor flavor);

// Drops context entries the proof never references and renumbers its axiom
// nodes. Returns the retained entries in context order.
struct PrunedProof {
  Context context;
  Proof proof;
};
PrunedProof prune_context(const Context& ctx, const Proof& p);

// The same derivation after `inserted` new hypotheses were pushed on top of
// its context: every reference that leaves the proof moves up.
Proof weaken_proof(const Proof& p, std::size_t inserted);

}  // namespace pa

#endif  // PA_DEDUCTION_HPP_
