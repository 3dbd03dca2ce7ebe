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

#include "pa/arithmetic.hpp"

#include <array>
#include <limits>

#include "pa/classify.hpp"

namespace pa {

namespace {

Term v(std::size_t i) { return Term::var(i); }
Term S(Term t) { return Term::succ(std::move(t)); }
Term plus(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }
Term times(Term a, Term b) { return Term::mul(std::move(a), std::move(b)); }
Formula eq(Term a, Term b) { return Formula::eq(std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return Formula::impl(std::move(a), std::move(b)); }

std::array<Formula, kQAxiomCount> build_axioms() {
  const Term zero = Term::zero();
  const Formula bot = Formula::falsum();
  return {
      forall_n(1, imp(eq(S(v(0)), zero), bot)),
      forall_n(2, imp(eq(S(v(1)), S(v(0))), eq(v(1), v(0)))),
      forall_n(1, eq(plus(zero, v(0)), v(0))),
      forall_n(2, eq(plus(S(v(1)), v(0)), S(plus(v(1), v(0))))),
      forall_n(1, eq(times(zero, v(0)), zero)),
      forall_n(2, eq(times(S(v(1)), v(0)), plus(v(0), times(v(1), v(0))))),
      forall_n(1, eq(v(0), v(0))),
      forall_n(2, imp(eq(v(1), v(0)), eq(v(0), v(1)))),
      forall_n(3, imp(eq(v(2), v(1)), imp(eq(v(1), v(0)), eq(v(2), v(0))))),
      forall_n(2, imp(eq(v(1), v(0)), eq(S(v(1)), S(v(0))))),
      forall_n(4, imp(eq(v(3), v(1)),
                      imp(eq(v(2), v(0)),
                          eq(plus(v(3), v(2)), plus(v(1), v(0)))))),
      forall_n(4, imp(eq(v(3), v(1)),
                      imp(eq(v(2), v(0)),
                          eq(times(v(3), v(2)), times(v(1), v(0)))))),
      forall_n(1, Formula::disj(eq(v(0), zero),
                                Formula::exists(eq(v(1), S(v(0)))))),
  };
}

const std::array<Formula, kQAxiomCount>& all_axioms() {
  static const auto table = build_axioms();
  return table;
}

}  // namespace

const Formula& axiom(Axiom a) { return all_axioms()[static_cast<std::size_t>(a)]; }

std::vector<Formula> axioms(TheoryName name) {
  const auto& t = all_axioms();
  const std::size_t n = name == TheoryName::Q ? kQAxiomCount : kFaAxiomCount;
  return {t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n)};
}

Formula induction_instance(const Formula& phi) {
  if (phi.free_bound() > 1)
    throw ArityError("induction motive must have at most free variable 0");
  const Formula base = single_subst(phi, Term::zero());
  // Under the binder of the step, x is Var 0; phi[S x] keeps phi's only
  // free slot pointed at S x.
  const Formula succ_case = subst_form(phi, Substitution{{S(v(0))}, 1});
  const Formula step = Formula::forall(imp(phi, succ_case));
  return imp(base, imp(step, Formula::forall(phi)));
}

bool is_induction_instance(const Formula& f) {
  if (!f.is(FormulaKind::Impl) || !f.rhs().is(FormulaKind::Impl)) return false;
  const Formula& concl = f.rhs().rhs();
  if (!concl.is(FormulaKind::Forall) || concl.body().free_bound() > 1)
    return false;
  return induction_instance(concl.body()) == f;
}

Theory Theory::fa() { return {TheoryName::FA, pa::axioms(TheoryName::FA), {}}; }
Theory Theory::q() { return {TheoryName::Q, pa::axioms(TheoryName::Q), {}}; }

Theory Theory::pa(const std::vector<Formula>& motives) {
  Theory t{TheoryName::PA, pa::axioms(TheoryName::FA), {}};
  for (const Formula& m : motives) t.instances.push_back(induction_instance(m));
  return t;
}

std::vector<Formula> Theory::axioms() const {
  std::vector<Formula> out = core;
  out.insert(out.end(), instances.begin(), instances.end());
  return out;
}

bool Theory::contains(const Formula& f) const {
  for (const Formula& a : core)
    if (a == f) return true;
  return name == TheoryName::PA && is_induction_instance(f);
}

std::string theory_label(TheoryName name) {
  switch (name) {
    case TheoryName::FA: return "fa";
    case TheoryName::Q: return "q";
    case TheoryName::PA: return "pa";
  }
  return "?";
}

Formula sigma1_compress(const Formula& f) {
  if (!classify_sigma1(f)) throw NotSigma1();
  const std::size_t n = sigma1_prefix_length(f);
  const Formula* cur = &f;
  for (std::size_t i = 0; i < n; ++i) cur = &cur->body();
  // Inside the new block, x_n .. x_1 keep indices 0 .. n-1, the master
  // variable takes index n and outer free variables move up by one.
  Substitution lift_free;
  for (std::size_t i = 0; i < n; ++i) lift_free.prefix.push_back(v(i));
  lift_free.shift = n + 1;
  Formula body = subst_form(*cur, lift_free);
  // The k-th bounded existential (k = n .. 1 from the inside) sees the master
  // at index k - 1 in its outer scope.
  for (std::size_t k = n; k >= 1; --k) body = bounded_exists(v(k - 1), std::move(body));
  return Formula::exists(std::move(body));
}

namespace {

void require_binary(const Formula& f, const char* which) {
  if (f.free_bound() > 2)
    throw ArityError(std::string(which) +
                     " must be binary (free variables among 0 and 1)");
}

// beta(v, x) seen under exists t. forall v.
Formula beta_under_guard(const Formula& beta) {
  return subst_form(beta, Substitution{{v(0), v(2)}, 3});
}

}  // namespace

Formula rosser_literal(const Formula& alpha, const Formula& beta) {
  require_binary(alpha, "alpha");
  require_binary(beta, "beta");
  Formula guard =
      Formula::forall(imp(beta_under_guard(beta), lt(v(1), v(0))));
  return Formula::exists(Formula::conj(alpha, std::move(guard)));
}

Formula rosser(const Formula& alpha, const Formula& beta) {
  require_binary(alpha, "alpha");
  require_binary(beta, "beta");
  if (!classify_delta0(alpha) || !classify_delta0(beta))
    return rosser_literal(alpha, beta);
  Formula guard = bounded_forall(S(v(0)), neg(beta_under_guard(beta)));
  return Formula::exists(Formula::conj(alpha, std::move(guard)));
}

// --- enumeration ------------------------------------------------------------

namespace {

std::size_t small_index(const Nat& n) {
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw std::out_of_range("variable index too large to materialise");
  return static_cast<std::size_t>(n);
}

}  // namespace

Term enumerate_term(const Nat& n) {
  if (n == 0) return Term::zero();
  const Nat m = n - 1;
  const unsigned tag = static_cast<unsigned>(m % 4);
  const Nat rest = m / 4;
  switch (tag) {
    case 0:
      return v(small_index(rest));
    case 1:
      return S(enumerate_term(rest));
    default: {
      auto [a, b] = cantor_unpair(rest);
      Term l = enumerate_term(a);
      Term r = enumerate_term(b);
      return tag == 2 ? plus(std::move(l), std::move(r))
                      : times(std::move(l), std::move(r));
    }
  }
}

Nat term_index(const Term& t) {
  switch (t.kind()) {
    case TermKind::Zero:
      return 0;
    case TermKind::Var:
      return 1 + 4 * Nat(t.index());
    case TermKind::Succ:
      return 2 + 4 * term_index(t.lhs());
    case TermKind::Add:
      return 3 + 4 * cantor_pair(term_index(t.lhs()), term_index(t.rhs()));
    case TermKind::Mul:
      return 4 + 4 * cantor_pair(term_index(t.lhs()), term_index(t.rhs()));
  }
  return 0;
}

Formula enumerate_formula(const Nat& n) {
  if (n == 0) return Formula::falsum();
  const Nat m = n - 1;
  const unsigned tag = static_cast<unsigned>(m % 6);
  const Nat rest = m / 6;
  switch (tag) {
    case 0: {
      auto [a, b] = cantor_unpair(rest);
      return eq(enumerate_term(a), enumerate_term(b));
    }
    case 1:
    case 2:
    case 3: {
      auto [a, b] = cantor_unpair(rest);
      Formula l = enumerate_formula(a);
      Formula r = enumerate_formula(b);
      if (tag == 1) return imp(std::move(l), std::move(r));
      if (tag == 2) return Formula::conj(std::move(l), std::move(r));
      return Formula::disj(std::move(l), std::move(r));
    }
    case 4:
      return Formula::forall(enumerate_formula(rest));
    default:
      return Formula::exists(enumerate_formula(rest));
  }
}

Nat formula_index(const Formula& f) {
  auto pair_of = [](const Formula& g) {
    return cantor_pair(formula_index(g.lhs()), formula_index(g.rhs()));
  };
  switch (f.kind()) {
    case FormulaKind::Falsum:
      return 0;
    case FormulaKind::Eq:
      return 1 + 6 * cantor_pair(term_index(f.left()), term_index(f.right()));
    case FormulaKind::Impl:
      return 2 + 6 * pair_of(f);
    case FormulaKind::Conj:
      return 3 + 6 * pair_of(f);
    case FormulaKind::Disj:
      return 4 + 6 * pair_of(f);
    case FormulaKind::Forall:
      return 5 + 6 * formula_index(f.body());
    case FormulaKind::Exists:
      return 6 + 6 * formula_index(f.body());
  }
  return 0;
}

}  // namespace pa
