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

// Certifying provers. Every derivation produced here is an intuitionistic
// proof over a finite list of axioms and is re-checked by the trusted checker
// before it is handed out as a Certificate.

#ifndef PA_CERTIFY_HPP_
#define PA_CERTIFY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "pa/arithmetic.hpp"
#include "pa/deduction.hpp"
#include "pa/natural.hpp"
#include "pa/semantics.hpp"
#include "pa/syntax.hpp"

namespace pa {

class InvalidCertificate : public std::logic_error {
 public:
  explicit InvalidCertificate(const std::string& what) : std::logic_error(what) {}
};

class Certificate {
 public:
  // Throws InvalidCertificate unless the proof checks intuitionistically
  // against exactly `axioms_used`.
  static Certificate make(Context axioms_used, Proof proof, Formula goal);

  const Context& axioms_used() const { return axioms_; }
  const Proof& proof() const { return proof_; }
  const Formula& goal() const { return goal_; }

 private:
  Certificate(Context a, Proof p, Formula g)
      : axioms_(std::move(a)), proof_(std::move(p)), goal_(std::move(g)) {}
  Context axioms_;
  Proof proof_;
  Formula goal_;
};

// t = num(value of t). Throws NotClosed.
Certificate prove_closed_term_value(const Term& t);

// ~(num m = num n). Throws EqualInputs when m = n.
Certificate prove_numeral_neq(std::uint64_t m, std::uint64_t n);

// Certificate for a true closed Sigma1 sentence, or nullopt when no witness
// exists inside the fuel box. Throws NotSigma1, NotClosed.
std::optional<Certificate> certify_sigma1(const Formula& f, Fuel fuel);

// Certificate for ~f where f is a false closed Delta0 sentence; nullopt when
// f is true. Throws NotDelta0, NotClosed.
std::optional<Certificate> certify_refutation(const Formula& f);

// forall t t'. t < t' -> t' < t -> false, from FA and one induction instance.
Certificate order_asymmetry();

// forall x. rosser_literal(a, b)(x) -> rosser_literal(b, a)(x) -> false
Formula rosser_disjointness_goal(const Formula& alpha, const Formula& beta);
// Throws ArityError.
Certificate rosser_disjointness_proof(const Formula& alpha, const Formula& beta);

// A bijection between naturals and proof trees.
Proof enumerate_proof(const Nat& n);
Nat proof_index(const Proof& p);

// The finite context selected by `subset` for theory t: bit j picks the j-th
// listed axiom of t; for PA, bits past the list pick the induction instance
// of the formula enumerated at (j - list size) when that formula is unary.
Context axiom_subset(const Theory& t, const Nat& subset);

// Candidate k (k < fuel) pairs proof enumerate_proof(i) with context
// axiom_subset(t, s) where (i, s) = cantor_unpair(k). The first candidate
// that checks is returned.
std::optional<Certificate> enumerate_proofs(const Theory& t, const Formula& goal,
                                            std::uint64_t fuel);

}  // namespace pa

#endif  // PA_CERTIFY_HPP_
