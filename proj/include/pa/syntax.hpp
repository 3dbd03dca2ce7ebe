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

// Terms and formulas over the signature (0, S, +, *; =) with de Bruijn
// binding. Both are immutable trees with shared structure; copying a Term or
// Formula copies a pointer.

#ifndef PA_SYNTAX_HPP_
#define PA_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace pa {

enum class TermKind : std::uint8_t { Var, Zero, Succ, Add, Mul };

class Term {
 public:
  static Term var(std::size_t index);
  static Term zero();
  static Term succ(Term t);
  static Term add(Term l, Term r);
  static Term mul(Term l, Term r);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }
  // Only for Var.
  std::size_t index() const;
  // Succ argument, or left operand of Add/Mul.
  const Term& lhs() const;
  const Term& rhs() const;

  // One past the largest variable index occurring in the term; 0 if closed.
  std::size_t free_bound() const;
  bool closed() const { return free_bound() == 0; }
  std::size_t size() const;
  // Value of the term if it is a numeral; cached, so O(1).
  std::optional<std::uint64_t> numeral() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind : std::uint8_t {
  Falsum, Eq, Impl, Conj, Disj, Forall, Exists
};

class Formula {
 public:
  static Formula falsum();
  static Formula eq(Term l, Term r);
  static Formula impl(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula forall(Formula body);
  static Formula exists(Formula body);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  bool is_binary() const;
  bool is_quantifier() const {
    return is(FormulaKind::Forall) || is(FormulaKind::Exists);
  }

  // Eq operands.
  const Term& left() const;
  const Term& right() const;
  // Connective operands; `lhs` is also the body of a quantifier.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const { return lhs(); }

  std::size_t free_bound() const;
  bool closed() const { return free_bound() == 0; }
  std::size_t size() const;

  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Total map from variable indices to terms:
//   i < prefix.size()  ->  prefix[i]
//   otherwise          ->  Var(i - prefix.size() + shift)
struct Substitution {
  std::vector<Term> prefix;
  std::size_t shift = 0;

  static Substitution identity() { return {}; }
  static Substitution lift(std::size_t by) { return {{}, by}; }
  // (t ; sigma)
  static Substitution cons(Term t, const Substitution& sigma);
  // The substitution used under one binder: (x0 ; sigma[shift]).
  Substitution up() const;

  Term operator()(std::size_t index) const;
  bool is_identity() const;
  bool identity_below(std::size_t bound) const;

  friend bool operator==(const Substitution& a, const Substitution& b);
};

Term subst_term(const Term& t, const Substitution& sigma);
Formula subst_form(const Formula& f, const Substitution& sigma);
// compose(s, t)(n) = subst_term(s(n), t)
Substitution compose(const Substitution& s, const Substitution& t);

Term shift_term(const Term& t, std::size_t by = 1);
Formula shift_form(const Formula& f, std::size_t by = 1);
// f[t] := f[t ; id]
Formula single_subst(const Formula& f, const Term& t);
Term single_subst(const Term& s, const Term& t);

// Inverse of shift_term: decrements every index, failing if Var 0 occurs.
std::optional<Term> unshift_term(const Term& t);

std::optional<std::size_t> max_free_index(const Formula& f);
std::optional<std::size_t> max_free_index(const Term& t);
bool occurs(const Term& t, std::size_t index);

// Numeral n, i.e. S^n 0.
Term num(std::uint64_t n);
// Value of a term of the shape S^n 0.
std::optional<std::uint64_t> numeral_value(const Term& t);

}  // namespace pa

#endif  // PA_SYNTAX_HPP_
