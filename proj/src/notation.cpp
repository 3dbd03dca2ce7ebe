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

#include "pa/notation.hpp"

namespace pa {

Formula neg(Formula f) { return Formula::impl(std::move(f), Formula::falsum()); }

Formula lt(const Term& a, const Term& b) {
  return Formula::exists(Formula::eq(
      Term::succ(Term::add(shift_term(a), Term::var(0))), shift_term(b)));
}

Formula le(const Term& a, const Term& b) {
  return Formula::exists(
      Formula::eq(Term::add(shift_term(a), Term::var(0)), shift_term(b)));
}

Formula divides(const Term& a, const Term& b) {
  return Formula::exists(
      Formula::eq(Term::mul(shift_term(a), Term::var(0)), shift_term(b)));
}

std::optional<Formula> match_neg(const Formula& f) {
  if (f.is(FormulaKind::Impl) && f.rhs().is(FormulaKind::Falsum))
    return f.lhs();
  return std::nullopt;
}

namespace {

bool is_var0(const Term& t) { return t.is(TermKind::Var) && t.index() == 0; }

// exists k. <op>(a', k) = b'  with a', b' free of k.
std::optional<Relation> match_witness_relation(const Formula& f, TermKind op,
                                               bool succ_wrapped) {
  if (!f.is(FormulaKind::Exists)) return std::nullopt;
  const Formula& eq = f.body();
  if (!eq.is(FormulaKind::Eq)) return std::nullopt;
  const Term* lhs = &eq.left();
  if (succ_wrapped) {
    if (!lhs->is(TermKind::Succ)) return std::nullopt;
    lhs = &lhs->lhs();
  }
  if (!lhs->is(op) || !is_var0(lhs->rhs())) return std::nullopt;
  auto a = unshift_term(lhs->lhs());
  auto b = unshift_term(eq.right());
  if (!a || !b) return std::nullopt;
  return Relation{*a, *b};
}

}  // namespace

std::optional<Relation> match_lt(const Formula& f) {
  return match_witness_relation(f, TermKind::Add, true);
}

std::optional<Relation> match_le(const Formula& f) {
  return match_witness_relation(f, TermKind::Add, false);
}

std::optional<Relation> match_divides(const Formula& f) {
  return match_witness_relation(f, TermKind::Mul, false);
}

Formula bounded_forall(const Term& bound, Formula body) {
  return Formula::forall(
      Formula::impl(lt(Term::var(0), shift_term(bound)), std::move(body)));
}

Formula bounded_exists(const Term& bound, Formula body) {
  return Formula::exists(
      Formula::conj(lt(Term::var(0), shift_term(bound)), std::move(body)));
}

namespace {

// Guard `Var 0 < t` under the quantifier; returns t in the outer scope.
std::optional<Term> match_guard(const Formula& guard) {
  auto rel = match_lt(guard);
  if (!rel || !is_var0(rel->left)) return std::nullopt;
  return unshift_term(rel->right);
}

}  // namespace

std::optional<BoundedQuantifier> match_bounded_forall(const Formula& f) {
  if (!f.is(FormulaKind::Forall) || !f.body().is(FormulaKind::Impl))
    return std::nullopt;
  auto bound = match_guard(f.body().lhs());
  if (!bound) return std::nullopt;
  return BoundedQuantifier{*bound, f.body().rhs()};
}

std::optional<BoundedQuantifier> match_bounded_exists(const Formula& f) {
  if (!f.is(FormulaKind::Exists) || !f.body().is(FormulaKind::Conj))
    return std::nullopt;
  auto bound = match_guard(f.body().lhs());
  if (!bound) return std::nullopt;
  return BoundedQuantifier{*bound, f.body().rhs()};
}

Formula disjunction(const std::vector<Formula>& disjuncts) {
  if (disjuncts.empty()) return Formula::falsum();
  Formula out = disjuncts.back();
  for (std::size_t i = disjuncts.size() - 1; i-- > 0;)
    out = Formula::disj(disjuncts[i], std::move(out));
  return out;
}

Formula conjunction(const std::vector<Formula>& conjuncts) {
  if (conjuncts.empty()) return neg(Formula::falsum());
  Formula out = conjuncts.back();
  for (std::size_t i = conjuncts.size() - 1; i-- > 0;)
    out = Formula::conj(conjuncts[i], std::move(out));
  return out;
}

Formula forall_n(std::size_t n, Formula body) {
  for (std::size_t i = 0; i < n; ++i) body = Formula::forall(std::move(body));
  return body;
}

Formula exists_n(std::size_t n, Formula body) {
  for (std::size_t i = 0; i < n; ++i) body = Formula::exists(std::move(body));
  return body;
}

}  // namespace pa
